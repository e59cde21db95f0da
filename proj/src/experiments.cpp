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

#include "irsnet/experiments.hpp"

#include "irsnet/analytic.hpp"
#include "irsnet/errors.hpp"
#include "irsnet/mathkit.hpp"
#include "irsnet/simulate.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

namespace irsnet::cli {

using analytic::Metric;
using analytic::Model;
using nlohmann::json;
using simulate::IrsMode;

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
public:
    explicit Budget(double seconds) : seconds_(seconds), start_(Clock::now()) {}
    bool exceeded() const {
        return seconds_ > 0.0 && std::chrono::duration<double>(Clock::now() - start_).count() > seconds_;
    }

private:
    double seconds_;
    Clock::time_point start_;
};

std::string join_values(std::initializer_list<double> values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) out += ';';
        out += format_number(v);
    }
    return out;
}

double rel_err(double a, double ref) { return std::abs(a - ref) / std::abs(ref); }

double db(double x) { return 10.0 * std::log10(x); }

simulate::SimOptions sim_options(const ExperimentConfig& cfg) {
    simulate::SimOptions o;
    o.policy = cfg.association;
    o.n_drops = cfg.n_drops;
    o.n_fading = cfg.n_fading;
    o.ues_per_drop = cfg.ues_per_drop;
    o.seed = cfg.seed;
    o.threads = cfg.threads;
    return o;
}

void add_check(RunReport& r, std::string name, double measured, double threshold, bool pass, std::string detail,
               bool gating = true) {
    r.checks.push_back({std::move(name), measured, threshold, pass, gating, std::move(detail)});
}

// ---------------------------------------------------------------- validate

void validate_equivalence(const ExperimentConfig& cfg, RunReport& r) {
    const char* id = "validate";
    double worst = 0.0;
    double worst_rayleigh = 0.0;
    for (double m : {1.0, 2.0, 3.0, 4.0})
        for (int n : {16, 64, 256})
            for (double d_bi : {80.0, 100.0, 130.0})
                for (double d_iu : {10.0, 30.0, 60.0})
                    for (double p_f : {0.001, 0.01, 0.1}) {
                        NetworkConfig net = cfg.network;
                        net.channel.m_iu = m;
                        net.geometry.elements_per_irs = n;
                        net.power.p_f = p_f;
                        const Model model(net, cfg.xi_placement);
                        const double quad = model.mean_snr_integral(d_bi, d_iu);
                        const double closed = model.mean_snr_closed(d_bi, d_iu);
                        const auto key = join_values({m, double(n), d_bi, d_iu, p_f});
                        r.rows.push_back({id, "m_iu;n;d_bi;d_iu;p_f", key, "equivalence", "mean_snr", "quadrature",
                                          quad, 0.0});
                        r.rows.push_back({id, "m_iu;n;d_bi;d_iu;p_f", key, "equivalence", "mean_snr", "closed_form",
                                          closed, 0.0});
                        worst = std::max(worst, rel_err(closed, quad));
                        if (m == 1.0) {
                            const double ray = model.mean_snr_rayleigh(d_bi, d_iu);
                            r.rows.push_back({id, "m_iu;n;d_bi;d_iu;p_f", key, "rayleigh", "mean_snr", "closed_form",
                                              ray, 0.0});
                            worst_rayleigh = std::max({worst_rayleigh, rel_err(ray, quad), rel_err(ray, closed)});
                        }
                    }
    add_check(r, "closed_form_vs_quadrature", worst, cfg.tolerance, worst <= cfg.tolerance,
              "max relative error over 324 grid points, m_iu 1..4");
    add_check(r, "rayleigh_vs_general", worst_rayleigh, cfg.tolerance, worst_rayleigh <= cfg.tolerance,
              "m_iu = 1 special case against both general forms");
}

void validate_consistency(const ExperimentConfig& cfg, RunReport& r) {
    const Model model(cfg.network, cfg.xi_placement);
    const double d_bi = cfg.distance_bi, d_iu = cfg.distance_iu;
    const double integral = model.mean_snr_integral(d_bi, d_iu);
    const double moment = model.snr_moment_active(1.0, d_bi, d_iu);
    add_check(r, "moment1_vs_mean_integral", rel_err(moment, integral), 1e-7, rel_err(moment, integral) <= 1e-7,
              "first conditional moment against the mean-SNR integral");

    const double rate = model.rate_active(d_bi, d_iu);
    const double jensen = std::log2(1.0 + model.snr_moment_active(1.0, d_bi, d_iu));
    add_check(r, "jensen_active", rate - jensen, 0.0, rate <= jensen * (1.0 + 1e-9), "rate <= log2(1 + mean SNR)");
    const double rate_d = model.rate_direct(d_bi);
    const double jensen_d = std::log2(1.0 + model.snr_moment_direct(1.0, d_bi));
    add_check(r, "jensen_direct", rate_d - jensen_d, 0.0, rate_d <= jensen_d * (1.0 + 1e-9),
              "direct rate <= log2(1 + mean SNR)");

    const auto rule = model.rule();
    double worst = 0.0;
    for (int k = 0; k <= 2 * rule.order() - 1; ++k) {
        double sum = 0.0;
        for (int i = 0; i < rule.order(); ++i)
            sum += rule.weight(i) * std::exp(k * std::log(rule.node(i)) - mathkit::ln_gamma(k + 1.0));
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    add_check(r, "laguerre_exactness", worst, 1e-9, worst <= 1e-9,
              fmt::format("order {} monomials up to degree {}", rule.order(), 2 * rule.order() - 1));
}

void validate_model_mc(const ExperimentConfig& cfg, RunReport& r) {
    const char* id = "validate";
    const double d_bi = cfg.distance_bi, d_iu = cfg.distance_iu;
    const auto key = join_values({d_bi, d_iu});
    const auto check = [&](const Model& model, const std::string& variant, bool gating) {
        const auto mc = simulate::model_consistent_snr(model, d_bi, d_iu, cfg.link_draws, cfg.seed, true, cfg.threads);
        const struct {
            const char* metric;
            double analytic;
            const simulate::SimEstimate& sim;
        } cases[] = {{"mean_snr", model.snr_moment_active(1.0, d_bi, d_iu), mc.snr},
                     {"snr_moment_2", model.snr_moment_active(2.0, d_bi, d_iu), mc.snr2},
                     {"achievable_rate", model.rate_active(d_bi, d_iu), mc.rate}};
        for (const auto& c : cases) {
            r.rows.push_back({id, "d_bi;d_iu", key, variant, c.metric, "quadrature", c.analytic, 0.0});
            r.rows.push_back({id, "d_bi;d_iu", key, variant, c.metric, "monte_carlo", c.sim.mean, c.sim.std_error});
            const double z = std::abs(c.sim.mean - c.analytic) / c.sim.std_error;
            add_check(r, fmt::format("model_mc_{}_{}", variant, c.metric), z, 3.0, z <= 3.0,
                      "standard errors between modeled-SNR MC and the analytic value", gating);
        }
    };
    check(Model(cfg.network, analytic::XiPlacement::once), "xi_once", cfg.xi_placement == analytic::XiPlacement::once);
    check(Model(cfg.network, analytic::XiPlacement::twice), "xi_twice",
          cfg.xi_placement == analytic::XiPlacement::twice);
}

void validate_physical(const ExperimentConfig& cfg, RunReport& r) {
    const char* id = "validate";
    const double d_bi = cfg.distance_bi, d_iu = cfg.distance_iu;
    for (auto coupling : {NoiseCoupling::printed, NoiseCoupling::path_loss}) {
        const bool gating = coupling == cfg.network.noise_coupling;
        const std::string variant = coupling == NoiseCoupling::printed ? "active_printed" : "active_path_loss";
        double gap[2] = {0.0, 0.0};
        int slot = 0;
        for (int n : {16, 64}) {
            NetworkConfig net = cfg.network;
            net.channel.m_bi = net.channel.m_iu = 1.0;
            net.geometry.elements_per_irs = n;
            net.noise_coupling = coupling;
            const Model model(net, cfg.xi_placement);
            const double analytic = model.mean_snr_rayleigh(d_bi, d_iu);
            const auto mc = simulate::link_physical_snr(net, d_bi, d_iu, IrsMode::active, cfg.link_draws, cfg.seed,
                                                        cfg.threads);
            const auto key = join_values({double(n), d_bi, d_iu});
            r.rows.push_back({id, "n;d_bi;d_iu", key, variant, "mean_snr", "closed_form", analytic, 0.0});
            r.rows.push_back({id, "n;d_bi;d_iu", key, variant, "mean_snr", "monte_carlo", mc.mean, mc.std_error});
            gap[slot++] = rel_err(analytic, mc.mean);
        }
        r.findings["physical_gap"][variant] = {{"n16", gap[0]}, {"n64", gap[1]}};
        add_check(r, fmt::format("physical_gap_shrinks_{}", variant), gap[1], gap[0], gap[1] < gap[0],
                  fmt::format("relative gap to physical MC: N=16 {:.6g}, N=64 {:.6g}", gap[0], gap[1]), gating);
    }

    double gap[2] = {0.0, 0.0};
    double ratio[2] = {0.0, 0.0};
    int slot = 0;
    for (int n : {16, 64}) {
        NetworkConfig net = cfg.network;
        net.channel.m_bi = net.channel.m_iu = 1.0;
        net.geometry.elements_per_irs = n;
        const Model model(net, cfg.xi_placement);
        const double analytic = model.mean_snr_passive(d_bi, d_iu);
        const auto mc =
            simulate::link_physical_snr(net, d_bi, d_iu, IrsMode::passive, cfg.link_draws, cfg.seed, cfg.threads);
        const auto key = join_values({double(n), d_bi, d_iu});
        r.rows.push_back({id, "n;d_bi;d_iu", key, "passive", "mean_snr", "closed_form", analytic, 0.0});
        r.rows.push_back({id, "n;d_bi;d_iu", key, "passive", "mean_snr", "monte_carlo", mc.mean, mc.std_error});
        gap[slot] = rel_err(analytic, mc.mean);
        ratio[slot] = mc.mean / analytic;
        ++slot;
    }
    r.findings["passive_gap"] = {{"n16", gap[0]}, {"n64", gap[1]}, {"mc_over_analytic_n16", ratio[0]},
                                 {"mc_over_analytic_n64", ratio[1]}};
    add_check(r, "passive_gap_shrinks", gap[1], gap[0], gap[1] < gap[0],
              fmt::format("relative gap to physical MC: N=16 {:.6g}, N=64 {:.6g}", gap[0], gap[1]), false);
}

void run_validate(const ExperimentConfig& cfg, RunReport& r, const Budget& budget) {
    validate_equivalence(cfg, r);
    validate_consistency(cfg, r);
    if (budget.exceeded()) return void(r.partial = true);
    validate_model_mc(cfg, r);
    if (budget.exceeded()) return void(r.partial = true);
    validate_physical(cfg, r);
}

// ---------------------------------------------------------- mean-snr-vs-pf

void run_mean_snr_vs_pf(const ExperimentConfig& cfg, RunReport& r, const Budget& budget) {
    const char* id = "mean-snr-vs-pf";
    const double d_bi = cfg.distance_bi, d_iu = cfg.distance_iu;
    std::vector<double> curve;
    for (std::size_t k = 0; k < cfg.pf_grid.size(); ++k) {
        if (budget.exceeded()) {
            r.partial = true;
            break;
        }
        NetworkConfig net = cfg.network;
        net.power.p_f = cfg.pf_grid[k];
        const Model model(net, cfg.xi_placement);
        const auto key = format_number(net.power.p_f);
        const double quad = model.mean_snr_integral(d_bi, d_iu);
        r.rows.push_back({id, "p_f", key, "active", "mean_snr", "quadrature", quad, 0.0});
        try {
            r.rows.push_back({id, "p_f", key, "active", "mean_snr", "closed_form", model.mean_snr_closed(d_bi, d_iu), 0.0});
        } catch (const UnsupportedParameter&) {
        }
        const auto mc = simulate::model_consistent_snr(model, d_bi, d_iu, cfg.link_draws, cfg.seed, true, cfg.threads);
        r.rows.push_back({id, "p_f", key, "model", "mean_snr", "monte_carlo", mc.snr.mean, mc.snr.std_error});
        const auto phys =
            simulate::link_physical_snr(net, d_bi, d_iu, IrsMode::active, cfg.link_draws, cfg.seed, cfg.threads);
        r.rows.push_back({id, "p_f", key, "physical", "mean_snr", "monte_carlo", phys.mean, phys.std_error});
        curve.push_back(db(quad));
    }
    const auto shape = curve_shape(curve);
    r.findings["mean_snr_db"] = curve;
    r.findings["shape"] = {{"increasing", shape.increasing},
                           {"concave_after_knee", shape.concave_after_knee},
                           {"knee_index", shape.knee}};
}

// ----------------------------------------------------------- density-sweep

json density_json(const std::vector<simulate::DensityRow>& rows) {
    const auto f = analyze_density(rows);
    return {{"best_m", f.best_m},
            {"interior_maximum", f.interior},
            {"margin_first_se", f.margin_first_se},
            {"margin_last_se", f.margin_last_se},
            {"margin_min_se", f.margin_min_se}};
}

void run_density_sweep(const ExperimentConfig& cfg, RunReport& r, const Budget& budget) {
    const char* id = "density-sweep";
    const char* budget_name = cfg.density_power_budget == simulate::PowerBudget::split ? "split" : "per_irs";
    for (auto mode : {IrsMode::active, IrsMode::passive}) {
        const std::string variant = mode == IrsMode::active ? "active" : "passive";
        auto options = sim_options(cfg);
        options.mode = mode;
        std::vector<simulate::DensityRow> rows;
        for (int m : cfg.m_values) {
            if (budget.exceeded()) {
                r.partial = true;
                break;
            }
            auto part = simulate::sweep_density(cfg.network, options, cfg.n_total_elements, {m},
                                                cfg.density_power_budget);
            const auto& e = part.front().estimate.spatial_throughput;
            r.rows.push_back({id, "irs_count", std::to_string(m), variant, "spatial_throughput", "monte_carlo", e.mean,
                              e.std_error});
            rows.push_back(part.front());
        }
        if (!rows.empty()) {
            r.findings[variant] = density_json(rows);
            r.findings[variant]["power_budget"] = budget_name;
        }
    }
}

// ----------------------------------------------------- association-compare

void run_association_compare(const ExperimentConfig& cfg, RunReport& r, const Budget& budget) {
    const char* id = "association-compare";
    json ratios = json::array();
    for (int n : cfg.association_n_values) {
        if (budget.exceeded()) {
            r.partial = true;
            break;
        }
        NetworkConfig net = cfg.network;
        net.geometry.elements_per_irs = n;
        simulate::SimEstimate est[2];
        int slot = 0;
        for (auto policy : {simulate::AssociationPolicy::nearest, simulate::AssociationPolicy::best_irs}) {
            auto options = sim_options(cfg);
            options.policy = policy;
            est[slot] = simulate::simulate_cell(net, options).spatial_throughput;
            r.rows.push_back({id, "elements_per_irs", std::to_string(n),
                              slot == 0 ? "nearest" : "best_irs", "spatial_throughput", "monte_carlo", est[slot].mean,
                              est[slot].std_error});
            ++slot;
        }
        const double ratio = est[0].mean / est[1].mean;
        const double se = ratio * std::hypot(est[0].std_error / est[0].mean, est[1].std_error / est[1].mean);
        ratios.push_back({{"elements_per_irs", n}, {"ratio", ratio}, {"ratio_ci95", {ratio - 1.96 * se, ratio + 1.96 * se}}});
    }
    r.findings["nearest_over_best"] = ratios;
}

// -------------------------------------------------------------- ring-sweep

void run_ring_sweep(const ExperimentConfig& cfg, RunReport& r, const Budget& budget) {
    const char* id = "ring-sweep";
    json best = nullptr;
    for (double l_in : cfg.ring_inner_grid)
        for (double l_out : cfg.ring_outer_grid) {
            if (!(l_in < l_out && l_out < cfg.network.geometry.cell_radius)) continue;
            if (budget.exceeded()) {
                r.partial = true;
                r.findings["best"] = best;
                return;
            }
            NetworkConfig net = cfg.network;
            net.geometry.ring_inner = l_in;
            net.geometry.ring_outer = l_out;
            const Model model(net, cfg.xi_placement);
            const auto b = model.average_breakdown(Metric::throughput());
            r.rows.push_back({id, "l_in;l_out", join_values({l_in, l_out}), "active", "spatial_throughput",
                              "quadrature", b.total, b.error});
            if (best.is_null() || b.total > best["spatial_throughput"].get<double>())
                best = {{"l_in", l_in}, {"l_out", l_out}, {"spatial_throughput", b.total}};
        }
    r.findings["best"] = best;
}

} // namespace

bool RunReport::ok() const {
    if (partial) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.gating; });
}

ShapeResult curve_shape(const std::vector<double>& values) {
    ShapeResult s;
    if (values.size() < 2) return s;
    std::vector<double> inc;
    for (std::size_t i = 1; i < values.size(); ++i) inc.push_back(values[i] - values[i - 1]);
    s.increasing = std::all_of(inc.begin(), inc.end(), [](double d) { return d > 0.0; });
    const auto knee = static_cast<std::size_t>(std::max_element(inc.begin(), inc.end()) - inc.begin());
    s.knee = knee + 1;
    s.concave_after_knee = true;
    for (std::size_t i = knee + 1; i < inc.size(); ++i)
        if (!(inc[i] < inc[i - 1])) s.concave_after_knee = false;
    return s;
}

DensityFinding analyze_density(const std::vector<simulate::DensityRow>& rows) {
    DensityFinding f;
    if (rows.empty()) return f;
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].estimate.spatial_throughput.mean > rows[best].estimate.spatial_throughput.mean) best = i;
    const auto& b = rows[best].estimate.spatial_throughput;
    const auto margin = [&](const simulate::SimEstimate& e) {
        const double se = std::hypot(b.std_error, e.std_error);
        return se > 0.0 ? (b.mean - e.mean) / se : 0.0;
    };
    f.best_m = rows[best].irs_count;
    f.interior = best != 0 && best + 1 != rows.size();
    f.margin_first_se = margin(rows.front().estimate.spatial_throughput);
    f.margin_last_se = margin(rows.back().estimate.spatial_throughput);
    f.margin_min_se = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best) continue;
        const double m = margin(rows[i].estimate.spatial_throughput);
        if (first || m < f.margin_min_se) f.margin_min_se = m;
        first = false;
    }
    return f;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    RunReport report;
    const Budget budget(cfg.runtime_budget_s);
    switch (cfg.experiment) {
    case Experiment::validate: run_validate(cfg, report, budget); break;
    case Experiment::mean_snr_vs_pf: run_mean_snr_vs_pf(cfg, report, budget); break;
    case Experiment::density_sweep: run_density_sweep(cfg, report, budget); break;
    case Experiment::association_compare: run_association_compare(cfg, report, budget); break;
    case Experiment::ring_sweep: run_ring_sweep(cfg, report, budget); break;
    }
    return report;
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{},{}\n", r.experiment, r.parameter, r.parameter_value, r.variant,
                           r.metric, r.method, format_number(r.value), format_number(r.std_error));
    return out;
}

void write_outputs(const ExperimentConfig& cfg, const RunReport& report, double wall_time_s,
                   const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto write = [&](const char* name, const std::string& body) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw ConfigError(fmt::format("cannot write {}", (dir / name).string()));
        out << body;
    };
    write("results.csv", to_csv(report.rows));

    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"threshold", c.threshold},
                          {"pass", c.pass},
                          {"gating", c.gating},
                          {"detail", c.detail}});
    const json summary{{"experiment", to_string(cfg.experiment)},
                       {"csv_schema", kCsvSchema},
                       {"seed", cfg.seed},
                       {"threads", cfg.threads},
                       {"rows", report.rows.size()},
                       {"partial", report.partial},
                       {"ok", report.ok()},
                       {"wall_time_s", wall_time_s},
                       {"conversions", cfg.conversions},
                       {"checks", checks},
                       {"findings", report.findings}};
    write("summary.json", summary.dump(2) + "\n");
    write("config.echo.json", to_json(cfg).dump(2) + "\n");
}

std::string glq_table_csv(int order) {
    const auto rule = mathkit::gauss_laguerre(order);
    std::string out = "index,node,weight\n";
    for (int i = 0; i < rule.order(); ++i)
        out += fmt::format("{},{:.17e},{:.17e}\n", i + 1, rule.node(i), rule.weight(i));
    return out;
}

std::string dump_distribution(const ExperimentConfig& cfg) {
    const Model model(cfg.network, cfg.xi_placement);
    return model.cascaded_distribution(cfg.distance_bi, cfg.distance_iu).to_json(2) + "\n";
}

} // namespace irsnet::cli
