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

#ifndef IRSNET_MIXGAMMA_HPP
#define IRSNET_MIXGAMMA_HPP

#include "irsnet/mathkit.hpp"
#include "irsnet/rng.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace irsnet {

/// Large-scale description of one hop: Nakagami shape plus distance-based
/// path loss zeta = epsilon_ref * distance^-alpha.
struct LinkStats {
    double m = 1.0;
    double distance = 1.0;
    double alpha = 3.0;
    double epsilon_ref = 1e-3;

    LinkStats() = default;
    LinkStats(double m_, double distance_, double alpha_, double epsilon_ref_);

    double path_loss() const noexcept;
};

/// One term epsilon * x^(beta-1) * exp(-xi x). epsilon is kept as a logarithm
/// because the direct-link coefficient xi^m / Gamma(m) overflows easily.
struct GammaComponent {
    double log_epsilon;
    double beta;
    double xi;

    double epsilon() const;
    /// epsilon Gamma(beta) xi^-beta: probability mass carried by the term.
    double mass() const;
};

class MixtureGamma {
public:
    explicit MixtureGamma(std::vector<GammaComponent> components);

    /// Builds from linear-scale (epsilon, beta, xi) triples.
    static MixtureGamma from_linear(const std::vector<std::array<double, 3>>& triples);

    std::size_t size() const noexcept { return components_.size(); }
    const std::vector<GammaComponent>& components() const noexcept { return components_; }
    const GammaComponent& component(std::size_t i) const { return components_.at(i); }

    double mass() const;
    double normalization_defect() const { return std::abs(mass() - 1.0); }

    double pdf(double x) const;
    double cdf(double x) const;
    double laplace(double s) const;
    double moment(double ell) const;

    /// Component masses renormalized to a proper probability vector.
    std::vector<double> component_probabilities() const;

    /// Picks a component with probability proportional to its mass, then draws
    /// Gamma(beta_i, rate xi_i).
    double sample(RandomStream& rng) const;

    std::string to_json(int indent = 2) const;

private:
    std::vector<GammaComponent> components_;
    std::vector<double> cumulative_;
};

/// Exact single-component form of the direct-link power |h_BU|^2.
MixtureGamma direct_power_dist(const LinkStats& link);

/// Gauss-Laguerre mixture for the amplified cascaded power (A |h_BIU|)^2,
/// where the cascade gain is taken as N^2 amp_sq zeta_BI zeta_IU times a
/// product of two unit-mean Gamma powers. Requires rule.order() >= 4.
MixtureGamma cascaded_power_dist(const LinkStats& bi, const LinkStats& iu, double amp_sq, int n_elements,
                                 const mathkit::QuadratureRule& rule);

} // namespace irsnet

#endif
