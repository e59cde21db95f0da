// SPDX-License-Identifier: Apache-2.0
//
// irsnet - performance analysis and simulation of active-IRS aided cellular networks
// Copyright (C) 2026 The irsnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsnet/network.hpp"

#include "irsnet/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace irsnet {

double GeometryConfig::area_total() const { return std::numbers::pi * cell_radius * cell_radius; }
double GeometryConfig::area_inner() const { return std::numbers::pi * ring_inner * ring_inner; }
double GeometryConfig::area_ring() const {
    return std::numbers::pi * (ring_outer * ring_outer - ring_inner * ring_inner);
}
double GeometryConfig::area_outer() const {
    return std::numbers::pi * (cell_radius * cell_radius - ring_outer * ring_outer);
}
double GeometryConfig::irs_density() const { return irs_count / area_ring(); }

void GeometryConfig::validate(bool strict) const {
    if (!(ring_inner > 0.0))
        throw ConfigError(fmt::format("geometry: ring_inner must be positive, got {}", ring_inner));
    if (strict) {
        if (!(ring_inner < ring_outer && ring_outer < cell_radius))
            throw ConfigError(fmt::format("geometry: need 0 < L_in < L_out < L, got L_in={} L_out={} L={}",
                                          ring_inner, ring_outer, cell_radius));
    } else if (!(ring_inner <= ring_outer && ring_outer <= cell_radius)) {
        throw ConfigError(fmt::format("geometry: need 0 < L_in <= L_out <= L, got L_in={} L_out={} L={}",
                                      ring_inner, ring_outer, cell_radius));
    }
    if (irs_count < 1) throw ConfigError(fmt::format("geometry: irs_count must be >= 1, got {}", irs_count));
    if (elements_per_irs < 1)
        throw ConfigError(fmt::format("geometry: elements_per_irs must be >= 1, got {}", elements_per_irs));
}

void NetworkConfig::validate(bool strict_geometry) const {
    geometry.validate(strict_geometry);
    power.validate();
    const auto& c = channel;
    if (!(c.alpha > 0.0)) throw ConfigError(fmt::format("channel: alpha must be positive, got {}", c.alpha));
    if (!(c.epsilon > 0.0)) throw ConfigError(fmt::format("channel: epsilon must be positive, got {}", c.epsilon));
    for (double m : {c.m_bu, c.m_bi, c.m_iu})
        if (!(m >= 0.5)) throw ConfigError(fmt::format("channel: Nakagami shape {} below 0.5", m));
    if (quadrature_order < 4 || quadrature_order > 64)
        throw ConfigError(fmt::format("quadrature_order must be in [4, 64], got {}", quadrature_order));
}

} // namespace irsnet
