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

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace irsnet::cli {

using nlohmann::json;

namespace {

std::vector<double> default_pf_grid() {
    std::vector<double> grid;
    for (int e = -12; e <= -1; ++e) grid.push_back(std::pow(10.0, e));
    return grid;
}

double number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(fmt::format("config: '{}' must be a number", key));
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(fmt::format("config: '{}' must be finite", key));
    return x;
}

double positive(const json& v, const std::string& key) {
    const double x = number(v, key);
    if (!(x > 0.0)) throw ConfigError(fmt::format("config: '{}' must be positive, got {}", key, x));
    return x;
}

long integer(const json& v, const std::string& key, long lo) {
    if (!v.is_number_integer()) throw ConfigError(fmt::format("config: '{}' must be an integer", key));
    const long x = v.get<long>();
    if (x < lo) throw ConfigError(fmt::format("config: '{}' must be >= {}, got {}", key, lo, x));
    return x;
}

std::string text(const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError(fmt::format("config: '{}' must be a string", key));
    return v.get<std::string>();
}

double shape(const json& v, const std::string& key) {
    const double m = number(v, key);
    if (!(m >= 0.5)) throw ConfigError(fmt::format("config: '{}' is a Nakagami shape and must be >= 0.5, got {}", key, m));
    return m;
}

std::vector<double> positive_list(const json& v, const std::string& key) {
    if (!v.is_array() || v.empty()) throw ConfigError(fmt::format("config: '{}' must be a nonempty array", key));
    std::vector<double> out;
    for (const auto& x : v) out.push_back(positive(x, key));
    return out;
}

std::vector<int> count_list(const json& v, const std::string& key) {
    if (!v.is_array() || v.empty()) throw ConfigError(fmt::format("config: '{}' must be a nonempty array", key));
    std::vector<int> out;
    for (const auto& x : v) out.push_back(static_cast<int>(integer(x, key, 1)));
    return out;
}

template <class E>
E choice(const json& v, const std::string& key, const std::map<std::string, E>& options) {
    const auto s = text(v, key);
    const auto it = options.find(s);
    if (it == options.end()) {
        std::string valid;
        for (const auto& [name, _] : options) valid += (valid.empty() ? "" : ", ") + name;
        throw ConfigError(fmt::format("config: '{}' must be one of {}, got '{}'", key, valid, s));
    }
    return it->second;
}

const std::map<std::string, analytic::XiPlacement> kXi{{"once", analytic::XiPlacement::once},
                                                       {"twice", analytic::XiPlacement::twice}};
const std::map<std::string, NoiseCoupling> kNoise{{"printed", NoiseCoupling::printed},
                                                  {"path_loss", NoiseCoupling::path_loss}};
const std::map<std::string, simulate::AssociationPolicy> kPolicy{{"nearest", simulate::AssociationPolicy::nearest},
                                                                 {"best_irs", simulate::AssociationPolicy::best_irs}};
const std::map<std::string, simulate::PowerBudget> kBudget{{"split", simulate::PowerBudget::split},
                                                           {"per_irs", simulate::PowerBudget::per_irs}};

template <class E>
std::string name_of(E value, const std::map<std::string, E>& options) {
    for (const auto& [name, v] : options)
        if (v == value) return name;
    return "unknown";
}

using Setter = std::function<void(ExperimentConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        t["experiment"] = [](auto& c, const json& v, const auto& k) { c.experiment = parse_experiment(text(v, k)); };
        t["seed"] = [](auto& c, const json& v, const auto& k) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                throw ConfigError(fmt::format("config: '{}' must be a nonnegative integer", k));
            c.seed = v.get<std::uint64_t>();
        };
        t["output"] = [](auto& c, const json& v, const auto& k) { c.output = text(v, k); };
        t["threads"] = [](auto& c, const json& v, const auto& k) { c.threads = static_cast<int>(integer(v, k, 1)); };
        t["tolerance"] = [](auto& c, const json& v, const auto& k) { c.tolerance = positive(v, k); };
        t["runtime_budget_s"] = [](auto& c, const json& v, const auto& k) {
            c.runtime_budget_s = number(v, k);
            if (c.runtime_budget_s < 0.0) throw ConfigError("config: 'runtime_budget_s' must be >= 0");
        };

        t["l"] = [](auto& c, const json& v, const auto& k) { c.network.geometry.cell_radius = positive(v, k); };
        t["l_in"] = [](auto& c, const json& v, const auto& k) { c.network.geometry.ring_inner = positive(v, k); };
        t["l_out"] = [](auto& c, const json& v, const auto& k) { c.network.geometry.ring_outer = positive(v, k); };
        t["irs_count"] = [](auto& c, const json& v, const auto& k) {
            c.network.geometry.irs_count = static_cast<int>(integer(v, k, 1));
        };
        t["elements_per_irs"] = [](auto& c, const json& v, const auto& k) {
            c.network.geometry.elements_per_irs = static_cast<int>(integer(v, k, 1));
        };

        t["alpha"] = [](auto& c, const json& v, const auto& k) { c.network.channel.alpha = positive(v, k); };
        t["epsilon"] = [](auto& c, const json& v, const auto& k) { c.network.channel.epsilon = positive(v, k); };
        t["m_bu"] = [](auto& c, const json& v, const auto& k) { c.network.channel.m_bu = shape(v, k); };
        t["m_bi"] = [](auto& c, const json& v, const auto& k) { c.network.channel.m_bi = shape(v, k); };
        t["m_iu"] = [](auto& c, const json& v, const auto& k) { c.network.channel.m_iu = shape(v, k); };

        t["p_t"] = [](auto& c, const json& v, const auto& k) { c.network.power.p_t = positive(v, k); };
        t["p_f"] = [](auto& c, const json& v, const auto& k) { c.network.power.p_f = positive(v, k); };
        t["sigma2"] = [](auto& c, const json& v, const auto& k) { c.network.power.sigma2 = positive(v, k); };
        t["sigma_f2"] = [](auto& c, const json& v, const auto& k) { c.network.power.sigma_f2 = positive(v, k); };
        const auto dbm = [](double channel::PowerParams::*field, const char* base) {
            return [field, base](ExperimentConfig& c, const json& v, const std::string& k) {
                const double d = number(v, k);
                c.network.power.*field = dbm_to_watts(d);
                c.conversions.push_back(fmt::format("{} = {} dBm -> {} = {:.6g} W", k, d, base, c.network.power.*field));
            };
        };
        t["p_t_dbm"] = dbm(&channel::PowerParams::p_t, "p_t");
        t["p_f_dbm"] = dbm(&channel::PowerParams::p_f, "p_f");
        t["sigma2_dbm"] = dbm(&channel::PowerParams::sigma2, "sigma2");
        t["sigma_f2_dbm"] = dbm(&channel::PowerParams::sigma_f2, "sigma_f2");

        t["quadrature_order"] = [](auto& c, const json& v, const auto& k) {
            c.network.quadrature_order = static_cast<int>(integer(v, k, 1));
        };
        t["noise_coupling"] = [](auto& c, const json& v, const auto& k) { c.network.noise_coupling = choice(v, k, kNoise); };
        t["xi_placement"] = [](auto& c, const json& v, const auto& k) { c.xi_placement = choice(v, k, kXi); };
        t["association"] = [](auto& c, const json& v, const auto& k) { c.association = choice(v, k, kPolicy); };
        t["density_power_budget"] = [](auto& c, const json& v, const auto& k) {
            c.density_power_budget = choice(v, k, kBudget);
        };

        t["n_drops"] = [](auto& c, const json& v, const auto& k) { c.n_drops = static_cast<int>(integer(v, k, 1)); };
        t["n_fading"] = [](auto& c, const json& v, const auto& k) { c.n_fading = static_cast<int>(integer(v, k, 1)); };
        t["ues_per_drop"] = [](auto& c, const json& v, const auto& k) {
            c.ues_per_drop = static_cast<int>(integer(v, k, 1));
        };
        t["link_draws"] = [](auto& c, const json& v, const auto& k) { c.link_draws = integer(v, k, 2); };

        t["distance_bi"] = [](auto& c, const json& v, const auto& k) { c.distance_bi = positive(v, k); };
        t["distance_iu"] = [](auto& c, const json& v, const auto& k) { c.distance_iu = positive(v, k); };
        t["pf_grid"] = [](auto& c, const json& v, const auto& k) { c.pf_grid = positive_list(v, k); };
        t["n_total_elements"] = [](auto& c, const json& v, const auto& k) {
            c.n_total_elements = static_cast<int>(integer(v, k, 1));
        };
        t["m_values"] = [](auto& c, const json& v, const auto& k) { c.m_values = count_list(v, k); };
        t["association_n_values"] = [](auto& c, const json& v, const auto& k) {
            c.association_n_values = count_list(v, k);
        };
        t["ring_inner_grid"] = [](auto& c, const json& v, const auto& k) { c.ring_inner_grid = positive_list(v, k); };
        t["ring_outer_grid"] = [](auto& c, const json& v, const auto& k) { c.ring_outer_grid = positive_list(v, k); };
        return t;
    }();
    return table;
}

} // namespace

std::string to_string(Experiment e) {
    switch (e) {
    case Experiment::validate: return "validate";
    case Experiment::mean_snr_vs_pf: return "mean-snr-vs-pf";
    case Experiment::density_sweep: return "density-sweep";
    case Experiment::association_compare: return "association-compare";
    case Experiment::ring_sweep: return "ring-sweep";
    }
    return "unknown";
}

Experiment parse_experiment(const std::string& name) {
    for (auto e : {Experiment::validate, Experiment::mean_snr_vs_pf, Experiment::density_sweep,
                   Experiment::association_compare, Experiment::ring_sweep})
        if (to_string(e) == name) return e;
    throw ConfigError(fmt::format("config: unknown experiment '{}'", name));
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void ExperimentConfig::validate() const {
    network.validate(true);
    if (experiment == Experiment::density_sweep) {
        for (int m : m_values)
            if (n_total_elements % m != 0) {
                std::string valid;
                for (int d = 1; d <= n_total_elements; ++d)
                    if (n_total_elements % d == 0) valid += (valid.empty() ? "" : ", ") + std::to_string(d);
                throw ConfigError(fmt::format("config: irs count {} does not divide n_total_elements {}; valid: {}",
                                              m, n_total_elements, valid));
            }
    }
}

ExperimentConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [w, d] : {std::pair{"sigma2", "sigma2_dbm"}, {"sigma_f2", "sigma_f2_dbm"}, {"p_t", "p_t_dbm"},
                               {"p_f", "p_f_dbm"}})
        if (doc.contains(w) && doc.contains(d))
            throw ConfigError(fmt::format("config: '{}' and '{}' are mutually exclusive", w, d));
    ExperimentConfig cfg;
    cfg.pf_grid = default_pf_grid();
    const auto& table = setters();
    for (const auto& [key, value] : doc.items()) {
        const auto it = table.find(key);
        if (it == table.end()) throw ConfigError(fmt::format("config: unknown key '{}'", key));
        it->second(cfg, value, key);
    }
    cfg.validate();
    return cfg;
}

void apply_overrides(json& doc, const std::vector<std::string>& overrides) {
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError(fmt::format("override '{}' is not of the form KEY=VALUE", item));
        const auto key = item.substr(0, eq);
        const auto raw = item.substr(eq + 1);
        auto value = json::parse(raw, nullptr, false);
        if (value.is_discarded()) value = raw;
        doc[key] = value;
    }
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    json doc = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError(fmt::format("config: cannot open '{}'", path));
        std::stringstream buf;
        buf << in.rdbuf();
        const auto body = buf.str();
        if (body.find_first_not_of(" \t\r\n") != std::string::npos) {
            doc = json::parse(body, nullptr, false);
            if (doc.is_discarded()) throw ConfigError(fmt::format("config: '{}' is not valid JSON", path));
        }
    }
    apply_overrides(doc, overrides);
    return parse_config(doc);
}

json to_json(const ExperimentConfig& c) {
    const auto& g = c.network.geometry;
    const auto& ch = c.network.channel;
    const auto& p = c.network.power;
    return json{
        {"experiment", to_string(c.experiment)},
        {"seed", c.seed},
        {"output", c.output},
        {"threads", c.threads},
        {"tolerance", c.tolerance},
        {"runtime_budget_s", c.runtime_budget_s},
        {"l", g.cell_radius},
        {"l_in", g.ring_inner},
        {"l_out", g.ring_outer},
        {"irs_count", g.irs_count},
        {"elements_per_irs", g.elements_per_irs},
        {"alpha", ch.alpha},
        {"epsilon", ch.epsilon},
        {"m_bu", ch.m_bu},
        {"m_bi", ch.m_bi},
        {"m_iu", ch.m_iu},
        {"p_t", p.p_t},
        {"p_f", p.p_f},
        {"sigma2", p.sigma2},
        {"sigma_f2", p.sigma_f2},
        {"quadrature_order", c.network.quadrature_order},
        {"noise_coupling", name_of(c.network.noise_coupling, kNoise)},
        {"xi_placement", name_of(c.xi_placement, kXi)},
        {"association", name_of(c.association, kPolicy)},
        {"density_power_budget", name_of(c.density_power_budget, kBudget)},
        {"n_drops", c.n_drops},
        {"n_fading", c.n_fading},
        {"ues_per_drop", c.ues_per_drop},
        {"link_draws", c.link_draws},
        {"distance_bi", c.distance_bi},
        {"distance_iu", c.distance_iu},
        {"pf_grid", c.pf_grid},
        {"n_total_elements", c.n_total_elements},
        {"m_values", c.m_values},
        {"association_n_values", c.association_n_values},
        {"ring_inner_grid", c.ring_inner_grid},
        {"ring_outer_grid", c.ring_outer_grid},
    };
}

} // namespace irsnet::cli
