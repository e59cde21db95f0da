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

#ifndef IRSNET_SIMULATE_HPP
#define IRSNET_SIMULATE_HPP

#include "irsnet/analytic.hpp"
#include "irsnet/network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace irsnet::simulate {

struct Point {
    double x = 0.0;
    double y = 0.0;
    double radius() const;
    double distance(const Point& other) const;
};

/// Serving node of one UE: empty for the BS direct link, else the IRS index.
using Association = std::optional<std::size_t>;

struct NetworkRealization {
    std::vector<Point> irs_positions;
    std::vector<Point> ue_positions;
    std::vector<Association> association;
};

enum class AssociationPolicy { nearest, best_irs };
enum class IrsMode { active, passive };
enum class PowerBudget { split, per_irs };

struct SimEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_drops = 0;
    long n_fading_per_drop = 0;
    std::uint64_t seed = 0;
};

struct SimOptions {
    AssociationPolicy policy = AssociationPolicy::nearest;
    IrsMode mode = IrsMode::active;
    int n_drops = 200;
    int n_fading = 100;
    int ues_per_drop = 50;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct CellEstimate {
    SimEstimate mean_snr;
    SimEstimate rate;
    SimEstimate spatial_throughput;
    double direct_fraction = 0.0;
};

/// IRSs area-uniform in the ring, UEs area-uniform in the disc. The result is
/// nearest-associated; pass it to associate() for another policy.
NetworkRealization drop(const GeometryConfig& geometry, std::uint64_t seed, std::uint32_t drop_index,
                        int ue_count = 50);

/// Re-tags IRS-side UEs. best_irs ranks candidates by the analytic mean SNR.
NetworkRealization associate(NetworkRealization real, AssociationPolicy policy, const analytic::Model& model);

struct UeSample {
    double mean_snr = 0.0;
    double mean_rate = 0.0;
};

/// Fading average per UE of one realization.
std::vector<UeSample> simulate_drop(const NetworkConfig& cfg, const NetworkRealization& real, IrsMode mode,
                                    int n_fading, std::uint64_t seed, std::uint32_t drop_index);

CellEstimate simulate_cell(const NetworkConfig& cfg, const SimOptions& options);

struct DensityRow {
    int irs_count = 0;
    int elements_per_irs = 0;
    double p_f_per_irs = 0.0;
    CellEstimate estimate;
};

/// One simulate_cell run per M with N = n_total / M. `budget` selects whether
/// cfg.power.p_f is the total amplification power shared by all IRSs or the
/// budget of each IRS.
std::vector<DensityRow> sweep_density(const NetworkConfig& cfg, const SimOptions& options, int n_total_elements,
                                      const std::vector<int>& m_values, PowerBudget budget = PowerBudget::split);

/// Physical link MC with per-element fading and the per-draw amplification factor.
SimEstimate link_physical_snr(const NetworkConfig& cfg, double d_bi, double d_iu, IrsMode mode, long n_draws,
                              std::uint64_t seed, int threads = 1);

struct ModelEstimate {
    SimEstimate snr;
    SimEstimate snr2;
    SimEstimate rate;
};

/// Draws the modeled SNR: mixture power over amplified Gamma noise plus sigma^2.
/// With `importance` the noise variate uses a defensive mixture proposal that
/// oversamples the small-noise region where 1/(noise+sigma^2) concentrates.
ModelEstimate model_consistent_snr(const analytic::Model& model, double d_bi, double d_iu, long n_draws,
                                   std::uint64_t seed, bool importance = true, int threads = 1);

} // namespace irsnet::simulate

#endif
