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

#ifndef IRSNET_EXPERIMENTS_HPP
#define IRSNET_EXPERIMENTS_HPP

#include "irsnet/config.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace irsnet::cli {

inline constexpr const char* kCsvSchema = "irsnet-results/1";
inline constexpr const char* kCsvHeader = "experiment,parameter,parameter_value,variant,metric,method,value,std_error";

struct ResultRow {
    std::string experiment;
    std::string parameter;
    std::string parameter_value;
    std::string variant;
    std::string metric;
    std::string method;
    double value = 0.0;
    double std_error = 0.0;
};

/// One pass/fail line. Non-gating checks are reported but never change the
/// exit status.
struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool gating = true;
    std::string detail;
};

struct RunReport {
    std::vector<ResultRow> rows;
    std::vector<Check> checks;
    nlohmann::json findings = nlohmann::json::object();
    bool partial = false;

    bool ok() const;
};

RunReport run_experiment(const ExperimentConfig& cfg);

std::string format_number(double x);
std::string to_csv(const std::vector<ResultRow>& rows);

/// Writes results.csv, summary.json and config.echo.json into `dir`.
void write_outputs(const ExperimentConfig& cfg, const RunReport& report, double wall_time_s,
                   const std::filesystem::path& dir);

struct ShapeResult {
    bool increasing = false;
    bool concave_after_knee = false;
    std::size_t knee = 0; // index of the point that ends the largest increment
};

/// Shape of a curve sampled on an ordered grid: strictly increasing, with
/// strictly decreasing increments from the largest increment onward.
ShapeResult curve_shape(const std::vector<double>& values);

struct DensityFinding {
    int best_m = 0;
    bool interior = false;
    double margin_first_se = 0.0; // (best - first) / combined standard error
    double margin_last_se = 0.0;
    /// Smallest margin of an M=1 maximum over every other M.
    double margin_min_se = 0.0;
};

DensityFinding analyze_density(const std::vector<simulate::DensityRow>& rows);

/// index,node,weight with 18 significant digits.
std::string glq_table_csv(int order);

/// Mixture components of the cascaded power at the configured distances.
std::string dump_distribution(const ExperimentConfig& cfg);

} // namespace irsnet::cli

#endif
