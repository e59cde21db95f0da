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

#include "irsnet/mathkit.hpp"

#include "irsnet/errors.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace irsnet::mathkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LaguerrePair {
    double value;    // L_n(x)
    double previous; // L_{n-1}(x)
};

LaguerrePair laguerre_pair(int n, double x) {
    double prev = 1.0;
    if (n == 0) return {1.0, 0.0};
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

// QUADPACK qk21 abscissae and weights on [-1, 1].
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814115980, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        kronrod += kWgk[j] * (f1[j] + f2[j]);
        abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = 0.5 * kronrod;
    double asc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double value = kronrod * half;
    abs_sum *= std::abs(half);
    asc *= std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_sum > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * abs_sum, err);
    return {a, b, value, err};
}

} // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty() || nodes_.size() != weights_.size())
        throw DomainError("QuadratureRule: nodes and weights must be nonempty and of equal length");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!(nodes_[i] > 0.0) || !(weights_[i] > 0.0))
            throw DomainError(fmt::format("QuadratureRule: non-positive node or weight at index {}", i));
        if (i > 0 && !(nodes_[i] > nodes_[i - 1]))
            throw DomainError(fmt::format("QuadratureRule: nodes not strictly increasing at index {}", i));
    }
}

double laguerre(int n, double x) {
    if (n < 0) throw DomainError("laguerre: negative degree");
    return laguerre_pair(n, x).value;
}

QuadratureRule gauss_laguerre(int order) {
    if (order < 1 || order > 64)
        throw DomainError(fmt::format("gauss_laguerre: order {} outside [1, 64]", order));

    Eigen::VectorXd diag(order);
    Eigen::VectorXd sub(std::max(order - 1, 0));
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k) sub[k - 1] = k;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("gauss_laguerre: Jacobi eigenvalue solve failed", 0.0, 0.0);

    std::vector<double> nodes(order);
    std::vector<double> weights(order);
    for (int i = 0; i < order; ++i) {
        double t = solver.eigenvalues()[i];
        bool converged = false;
        double residual = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [ln, lprev] = laguerre_pair(order, t);
            const double deriv = order * (ln - lprev) / t;
            const double step = ln / deriv;
            t -= step;
            residual = std::abs(ln) / (std::abs(deriv) * t);
            if (std::abs(step) <= 4.0 * kEps * t) {
                converged = true;
                break;
            }
        }
        if (!converged && residual > 1e-13)
            throw ConvergenceError(fmt::format("gauss_laguerre: Newton iteration did not converge for node {}", i),
                                   t, residual);
        nodes[i] = t;
    }
    std::sort(nodes.begin(), nodes.end());
    for (int i = 0; i < order; ++i) {
        const double lnext = laguerre(order + 1, nodes[i]);
        weights[i] = nodes[i] / ((order + 1.0) * (order + 1.0) * lnext * lnext);
    }
    return QuadratureRule(std::move(nodes), std::move(weights));
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError(fmt::format("ln_gamma: argument {} is not positive", x));
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double exp_e1_scaled(double x) {
    if (!(x > 0.0)) throw DomainError(fmt::format("exp_e1_scaled: argument {} is not positive", x));
    if (std::isinf(x)) return 0.0;
    if (x <= 1.0) {
        // E_1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= -x / k;
            const double contrib = term / k;
            sum += contrib;
            if (std::abs(contrib) < kEps * std::abs(sum)) break;
        }
        return std::exp(x) * (-euler_gamma - std::log(x) - sum);
    }
    // Continued fraction for e^x E_1(x), modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return h;
    }
    throw ConvergenceError(fmt::format("exp_e1_scaled: continued fraction did not converge at x = {}", x), h, 0.0);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw DomainError("gamma_p: shape must be positive");
    if (x < 0.0) throw DomainError("gamma_p: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double log_prefactor = a * std::log(x) - x - ln_gamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int n = 0; n < 100000; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * kEps) return std::min(1.0, sum * std::exp(log_prefactor));
        }
        throw ConvergenceError("gamma_p: series did not converge", sum * std::exp(log_prefactor), del);
    }
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return std::max(0.0, 1.0 - std::exp(log_prefactor) * h);
    }
    throw ConvergenceError("gamma_p: continued fraction did not converge", 1.0 - std::exp(log_prefactor) * h, 0.0);
}

IntegrationResult integrate_interval(const Integrand& f, double a, double b, double rel_tol, double abs_tol) {
    constexpr int kMaxPanels = 4000;
    IntegrationResult out;
    if (a == b) return out;

    std::priority_queue<Panel> active;
    double settled_value = 0.0;
    double settled_error = 0.0;
    const Panel first = gauss_kronrod(f, a, b);
    out.evaluations = 21;
    active.push(first);
    double total = first.value;
    double total_err = first.error;
    int panels = 1;

    while (true) {
        if (!std::isfinite(total))
            throw ConvergenceError("integrate: integrand produced a non-finite value", total, total_err);
        if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
        if (active.empty()) break;
        if (panels >= kMaxPanels)
            throw ConvergenceError(fmt::format("integrate: panel budget exhausted (estimate {}, error {})",
                                               total, total_err),
                                   total, total_err);
        const Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            std::abs(worst.b - worst.a) <= 100.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            // Cannot be refined further in double precision.
            settled_value += worst.value;
            settled_error += worst.error;
            continue;
        }
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        out.evaluations += 42;
        ++panels;
        active.push(left);
        active.push(right);

        // Re-sum from scratch every so often to keep the running totals honest.
        if (panels % 64 == 0) {
            auto copy = active;
            total = settled_value;
            total_err = settled_error;
            while (!copy.empty()) {
                total += copy.top().value;
                total_err += copy.top().error;
                copy.pop();
            }
        } else {
            total += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
        }
    }

    // Final exact re-summation in a fixed order.
    std::vector<Panel> all;
    all.reserve(active.size());
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    out.value = settled_value;
    out.error = settled_error;
    for (const auto& p : all) {
        out.value += p.value;
        out.error += p.error;
    }
    if (out.error > std::max(abs_tol, rel_tol * std::abs(out.value)))
        throw ConvergenceError(fmt::format("integrate: tolerance not reached (estimate {}, error {})", out.value,
                                           out.error),
                               out.value, out.error);
    return out;
}

IntegrationResult integrate_semi_infinite(const Integrand& f, double rel_tol, double scale, double abs_tol) {
    if (!(scale > 0.0)) throw DomainError("integrate_semi_infinite: scale must be positive");
    const Integrand mapped = [&f, scale](double u) {
        const double one_minus = 1.0 - u;
        const double z = scale * u / one_minus;
        if (!std::isfinite(z)) return 0.0;
        const double value = f(z);
        if (value == 0.0) return 0.0;
        return value * scale / (one_minus * one_minus);
    };
    return integrate_interval(mapped, 0.0, 1.0, rel_tol, abs_tol);
}

} // namespace irsnet::mathkit
