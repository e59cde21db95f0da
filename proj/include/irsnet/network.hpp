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

#ifndef IRSNET_NETWORK_HPP
#define IRSNET_NETWORK_HPP

#include "irsnet/channel.hpp"

namespace irsnet {

/// Fading shapes and path-loss law shared by all links.
struct ChannelParams {
    double alpha = 3.0;
    double epsilon = 1e-3; // channel power gain at the 1 m reference distance
    double m_bu = 1.0;
    double m_bi = 1.0;
    double m_iu = 1.0;
};

/// Disc cell of radius L with IRSs placed in the ring L_in <= r <= L_out.
struct GeometryConfig {
    double cell_radius = 200.0;
    double ring_inner = 80.0;
    double ring_outer = 130.0;
    int irs_count = 8;
    int elements_per_irs = 64;

    double area_total() const;
    double area_inner() const;
    double area_ring() const;
    double area_outer() const;
    /// lambda_I = M / S_2, IRSs per square meter of ring.
    double irs_density() const;

    /// Strict form requires 0 < L_in < L_out < L. The relaxed form used by the
    /// simulator also accepts a collapsed ring (L_in = L_out, possibly = L),
    /// which expresses an all-direct cell.
    void validate(bool strict = true) const;
};

/// How the amplified IRS noise reaches the UE in the analytic expressions.
/// `printed` keeps the closed forms exactly as published (no IRS-UE path loss
/// on the noise term); `path_loss` attenuates it by zeta_IU like the physical
/// channel does.
enum class NoiseCoupling { printed, path_loss };

struct NetworkConfig {
    ChannelParams channel;
    channel::PowerParams power;
    GeometryConfig geometry;
    int quadrature_order = 20;
    NoiseCoupling noise_coupling = NoiseCoupling::printed;

    void validate(bool strict_geometry = true) const;
};

/// Distances below the 1 m reference are clamped; the path-loss law is not
/// meaningful there.
inline constexpr double kMinDistance = 1.0;

inline double floor_distance(double d) noexcept { return d < kMinDistance ? kMinDistance : d; }

} // namespace irsnet

#endif
