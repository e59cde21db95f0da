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

#include "irsnet/mixgamma.hpp"

#include "irsnet/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace irsnet {

using mathkit::ln_gamma;

LinkStats::LinkStats(double m_, double distance_, double alpha_, double epsilon_ref_)
    : m(m_), distance(distance_), alpha(alpha_), epsilon_ref(epsilon_ref_) {
    if (!(m >= 0.5)) throw DomainError(fmt::format("LinkStats: Nakagami shape {} below 0.5", m));
    if (!(distance > 0.0) || !(alpha > 0.0) || !(epsilon_ref > 0.0))
        throw DomainError("LinkStats: distance, alpha and epsilon_ref must be positive");
}

double LinkStats::path_loss() const noexcept { return epsilon_ref * std::pow(distance, -alpha); }

double GammaComponent::epsilon() const { return std::exp(log_epsilon); }

double GammaComponent::mass() const { return std::exp(log_epsilon + ln_gamma(beta) - beta * std::log(xi)); }

MixtureGamma::MixtureGamma(std::vector<GammaComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("MixtureGamma: no components");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (!std::isfinite(c.log_epsilon) || !(c.beta > 0.0) || !(c.xi > 0.0) || !std::isfinite(c.xi))
            throw DomainError(fmt::format("MixtureGamma: invalid component {}", i));
    }
    const auto probs = component_probabilities();
    cumulative_.resize(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
}

MixtureGamma MixtureGamma::from_linear(const std::vector<std::array<double, 3>>& triples) {
    std::vector<GammaComponent> comps;
    comps.reserve(triples.size());
    for (const auto& [eps, beta, xi] : triples) {
        if (!(eps > 0.0)) throw DomainError("MixtureGamma: epsilon must be positive");
        comps.push_back({std::log(eps), beta, xi});
    }
    return MixtureGamma(std::move(comps));
}

double MixtureGamma::mass() const {
    double total = 0.0;
    for (const auto& c : components_) total += c.mass();
    return total;
}

double MixtureGamma::pdf(double x) const {
    if (!(x > 0.0)) throw DomainError("MixtureGamma::pdf: x must be positive");
    double total = 0.0;
    const double lx = std::log(x);
    for (const auto& c : components_) total += std::exp(c.log_epsilon + (c.beta - 1.0) * lx - c.xi * x);
    return total;
}

double MixtureGamma::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    double total = 0.0;
    for (const auto& c : components_) total += c.mass() * mathkit::gamma_p(c.beta, c.xi * x);
    return total;
}

double MixtureGamma::laplace(double s) const {
    if (!(s >= 0.0)) throw DomainError("MixtureGamma::laplace: s must be nonnegative");
    double total = 0.0;
    for (const auto& c : components_)
        total += std::exp(c.log_epsilon + ln_gamma(c.beta) - c.beta * std::log(c.xi + s));
    return total;
}

double MixtureGamma::moment(double ell) const {
    if (!(ell > 0.0)) throw DomainError("MixtureGamma::moment: order must be positive");
    double total = 0.0;
    for (const auto& c : components_)
        total += std::exp(c.log_epsilon + ln_gamma(c.beta + ell) - (c.beta + ell) * std::log(c.xi));
    return total;
}

std::vector<double> MixtureGamma::component_probabilities() const {
    std::vector<double> probs;
    probs.reserve(components_.size());
    double total = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const double p = components_[i].mass();
        if (!(p > 0.0) || !std::isfinite(p))
            throw DomainError(fmt::format("MixtureGamma: component {} has non-positive probability", i));
        probs.push_back(p);
        total += p;
    }
    for (auto& p : probs) p /= total;
    return probs;
}

double MixtureGamma::sample(RandomStream& rng) const {
    if (normalization_defect() > 1e-3)
        throw DomainError(fmt::format("MixtureGamma::sample: normalization defect {} exceeds 1e-3",
                                      normalization_defect()));
    std::size_t index = 0;
    if (components_.size() > 1) {
        const double u = rng.uniform();
        index = static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                                         cumulative_.begin());
        index = std::min(index, components_.size() - 1);
    }
    const auto& c = components_[index];
    std::gamma_distribution<double> gamma(c.beta, 1.0 / c.xi);
    return gamma(rng);
}

std::string MixtureGamma::to_json(int indent) const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : components_)
        doc.push_back({{"epsilon", c.epsilon()}, {"beta", c.beta}, {"xi", c.xi}});
    return doc.dump(indent);
}

MixtureGamma direct_power_dist(const LinkStats& link) {
    const double xi = link.m * std::pow(link.distance, link.alpha) / link.epsilon_ref;
    return MixtureGamma({{link.m * std::log(xi) - ln_gamma(link.m), link.m, xi}});
}

MixtureGamma cascaded_power_dist(const LinkStats& bi, const LinkStats& iu, double amp_sq, int n_elements,
                                 const mathkit::QuadratureRule& rule) {
    if (rule.order() < 4)
        throw UnsupportedParameter(
            fmt::format("cascaded_power_dist: quadrature order {} too low for an accurate mixture", rule.order()));
    if (!(amp_sq > 0.0)) throw DomainError("cascaded_power_dist: amplification gain must be positive");
    if (n_elements < 1) throw DomainError("cascaded_power_dist: need at least one element");

    const double m_bi = bi.m;
    const double m_iu = iu.m;
    const double n = n_elements;
    // W / (A^2 N^2) with W = 1 / (zeta_BI zeta_IU)
    const double log_scale = -std::log(bi.path_loss()) - std::log(iu.path_loss()) - std::log(amp_sq) - 2.0 * std::log(n);
    const double log_head = m_bi * std::log(m_bi * m_iu) - ln_gamma(m_bi) - ln_gamma(m_iu) + m_bi * log_scale;

    std::vector<GammaComponent> comps;
    comps.reserve(rule.order());
    for (int i = 0; i < rule.order(); ++i) {
        const double t = rule.node(i);
        const double w = rule.weight(i);
        const double log_eps = log_head + std::log(w) + (m_iu - m_bi - 1.0) * std::log(t);
        const double xi = m_bi * m_iu * std::exp(log_scale) / t;
        comps.push_back({log_eps, m_bi, xi});
    }
    return MixtureGamma(std::move(comps));
}

} // namespace irsnet
