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

#ifndef IRSNET_MATHKIT_HPP
#define IRSNET_MATHKIT_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace irsnet::mathkit {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log2_e = 1.44269504088896340735992468100189214;

/// Gauss-Laguerre rule for the weight function e^{-x} on (0, inf).
///
/// Nodes are the zeros of the Laguerre polynomial L_I, ascending. Values are
/// immutable after construction.
class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    double node(std::size_t i) const { return nodes_.at(i); }
    double weight(std::size_t i) const { return weights_.at(i); }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Builds the order-I rule (1 <= order <= 64). Eigenvalues of the Jacobi matrix
/// seed a Newton polish on L_I; weights are t_i / ((I+1)^2 L_{I+1}(t_i)^2).
/// Throws ConvergenceError naming the node index if a root does not converge.
QuadratureRule gauss_laguerre(int order);

/// Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre(int n, double x);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// e^x E_1(x) for x > 0, evaluated without forming e^x or E_1 separately for
/// large x. Note Ei(-x) = -E_1(x).
double exp_e1_scaled(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (10/21) integration of f over [a, b] with global
/// bisection of the worst panel. Throws ConvergenceError carrying the best
/// estimate if the panel budget runs out.
IntegrationResult integrate_interval(const Integrand& f, double a, double b,
                                     double rel_tol = 1e-10, double abs_tol = 0.0);

/// Integral of f over (0, inf) through z = scale * u / (1 - u). `scale` should
/// be of the order of the integrand's dominant length so that panels resolve it
/// early; the result does not depend on it beyond the tolerance.
IntegrationResult integrate_semi_infinite(const Integrand& f, double rel_tol = 1e-10,
                                          double scale = 1.0, double abs_tol = 0.0);

} // namespace irsnet::mathkit

#endif
