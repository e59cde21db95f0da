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

#include "irsnet/config.hpp"
#include "irsnet/errors.hpp"
#include "irsnet/experiments.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cstdio>
#include <optional>

namespace {

using namespace irsnet;

struct CommonFlags {
    std::string config;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::optional<double> tolerance;
};

cli::ExperimentConfig resolve(const CommonFlags& flags, std::optional<cli::Experiment> experiment) {
    auto overrides = flags.overrides;
    if (experiment) overrides.push_back("experiment=\"" + cli::to_string(*experiment) + "\"");
    if (flags.seed) overrides.push_back(fmt::format("seed={}", *flags.seed));
    if (flags.out) overrides.push_back(fmt::format("output={}", nlohmann::json(*flags.out).dump()));
    if (flags.threads) overrides.push_back(fmt::format("threads={}", *flags.threads));
    if (flags.tolerance) overrides.push_back(fmt::format("tolerance={}", cli::format_number(*flags.tolerance)));
    auto cfg = cli::load_config(flags.config, overrides);
    for (const auto& line : cfg.conversions) fmt::print(stderr, "config: {}\n", line);
    return cfg;
}

int run(const cli::ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = cli::run_experiment(cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cli::write_outputs(cfg, report, wall, cfg.output);
    for (const auto& c : report.checks)
        fmt::print("{:<5} {:<40} measured={:<12.6g} threshold={:<12.6g}{} {}\n", c.pass ? "PASS" : "FAIL", c.name,
                   c.measured, c.threshold, c.gating ? "" : " (info)", c.detail);
    if (report.partial) fmt::print("runtime budget exceeded: partial results\n");
    fmt::print("{} rows written to {} ({:.1f} s)\n", report.rows.size(), cfg.output, wall);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irsnet: analysis and simulation of active-IRS aided cellular networks"};
    app.require_subcommand(1);
    CommonFlags flags;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON configuration file");
        sub->add_option("--set", flags.overrides, "Override KEY=VALUE (repeatable)");
        sub->add_option("--seed", flags.seed, "Random seed");
        sub->add_option("--out", flags.out, "Output directory");
        sub->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--tolerance", flags.tolerance, "Closed-form vs quadrature tolerance")
            ->check(CLI::PositiveNumber);
    };

    const std::pair<const char*, cli::Experiment> experiments[] = {
        {"validate", cli::Experiment::validate},
        {"mean-snr-vs-pf", cli::Experiment::mean_snr_vs_pf},
        {"density-sweep", cli::Experiment::density_sweep},
        {"association-compare", cli::Experiment::association_compare},
        {"ring-sweep", cli::Experiment::ring_sweep},
    };
    std::optional<cli::Experiment> chosen;
    for (const auto& [name, e] : experiments) {
        auto* sub = app.add_subcommand(name, fmt::format("Run the {} experiment", name));
        add_common(sub);
        sub->callback([&chosen, e = e] { chosen = e; });
    }

    int order = 20;
    auto* glq = app.add_subcommand("glq-table", "Print Gauss-Laguerre nodes and weights as CSV");
    glq->add_option("--order", order, "Rule order (1..64)")->required();

    auto* dump = app.add_subcommand("dump-dist", "Print the cascaded-power mixture components as JSON");
    add_common(dump);

    CLI11_PARSE(app, argc, argv);

    try {
        if (glq->parsed()) {
            fmt::print("{}", cli::glq_table_csv(order));
            return 0;
        }
        if (dump->parsed()) {
            fmt::print("{}", cli::dump_distribution(resolve(flags, std::nullopt)));
            return 0;
        }
        return run(resolve(flags, chosen));
    } catch (const ConfigError& e) {
        fmt::print(stderr, "configuration error: {}\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        fmt::print(stderr, "invalid argument: {}\n", e.what());
        return 2;
    } catch (const UnsupportedParameter& e) {
        fmt::print(stderr, "unsupported parameter: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 3;
    }
}
