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

#ifndef IRSNET_CONFIG_HPP
#define IRSNET_CONFIG_HPP

#include "irsnet/analytic.hpp"
#include "irsnet/network.hpp"
#include "irsnet/simulate.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace irsnet::cli {

enum class Experiment { validate, mean_snr_vs_pf, density_sweep, association_compare, ring_sweep };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

/// Everything a run needs. Keys in the JSON document are flat; quantities are
/// in SI units (meters, watts) unless the key carries a `_dbm` suffix.
struct ExperimentConfig {
    NetworkConfig network;
    Experiment experiment = Experiment::validate;
    std::uint64_t seed = 1;
    std::string output = "irsnet-out";
    int threads = 1;
    double tolerance = 1e-6;
    double runtime_budget_s = 0.0; // 0 disables the budget

    analytic::XiPlacement xi_placement = analytic::XiPlacement::once;
    simulate::AssociationPolicy association = simulate::AssociationPolicy::nearest;
    simulate::PowerBudget density_power_budget = simulate::PowerBudget::split;

    int n_drops = 200;
    int n_fading = 100;
    int ues_per_drop = 50;
    long link_draws = 1000000;

    double distance_bi = 100.0;
    double distance_iu = 30.0;
    std::vector<double> pf_grid;
    int n_total_elements = 512;
    std::vector<int> m_values{1, 2, 4, 8, 16, 32};
    std::vector<int> association_n_values{8, 16, 32};
    std::vector<double> ring_inner_grid{40.0, 60.0, 80.0, 100.0};
    std::vector<double> ring_outer_grid{110.0, 130.0, 150.0, 170.0};

    /// Unit conversions applied while parsing, one human-readable line each.
    std::vector<std::string> conversions;

    void validate() const;
};

/// Builds a config from a JSON object. Unknown keys, wrong types and
/// non-physical values raise ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);

/// Parses `KEY=VALUE` overrides into `doc`. VALUE is read as JSON when it
/// parses, otherwise as a string.
void apply_overrides(nlohmann::json& doc, const std::vector<std::string>& overrides);

/// Reads a file (an empty file means all defaults), applies overrides, parses.
ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Effective configuration in linear units. Feeding it back to parse_config
/// reproduces the same config.
nlohmann::json to_json(const ExperimentConfig& cfg);

/// 10^((dbm - 30) / 10)
double dbm_to_watts(double dbm);

} // namespace irsnet::cli

#endif
