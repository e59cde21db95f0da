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

#ifndef IRSNET_ANALYTIC_HPP
#define IRSNET_ANALYTIC_HPP

#include "irsnet/mathkit.hpp"
#include "irsnet/mixgamma.hpp"
#include "irsnet/network.hpp"

#include <functional>
#include <string>

namespace irsnet::analytic {

enum class MetricKind { snr_moment, achievable_rate, spatial_throughput };
enum class Method { closed_form, quadrature, monte_carlo };

struct Metric {
    MetricKind kind = MetricKind::snr_moment;
    double order = 1.0; // moment order, only for snr_moment

    static Metric snr(double ell = 1.0) { return {MetricKind::snr_moment, ell}; }
    static Metric rate() { return {MetricKind::achievable_rate, 1.0}; }
    static Metric throughput() { return {MetricKind::spatial_throughput, 1.0}; }
};

std::string to_string(MetricKind kind);
std::string to_string(Method method);
std::string metric_label(const Metric& metric);

struct MetricResult {
    double value = 0.0;
    Metric metric;
    Method method = Method::quadrature;
    double error_estimate = 0.0;
};

/// Where the conditional SNR moment integral places xi_BIU,i. `once` applies
/// the noise Laplace transform as printed (xi_i already inside its argument);
/// `twice` additionally scales the argument by xi_i. Only `once` agrees with a
/// direct simulation of the modeled SNR; `twice` is kept for that comparison.
enum class XiPlacement { once, twice };

/// Per-region pieces of the cell-wide average.
struct AverageBreakdown {
    double region_inner = 0.0; // mean of C_1 over d_BU < L_in
    double region_ring = 0.0;  // mean of C_2 over the ring, nearest-IRS distance PDF
    double region_outer = 0.0; // mean of C_2 over d_BU > L_out
    double total = 0.0;        // area-weighted sum
    double error = 0.0;
    /// Mass of the nearest-IRS distance PDF on (0, L); 1 - e^{-lambda pi L^2}.
    double ring_pdf_mass = 0.0;
};

/// Closed-form and quadrature performance expressions for one network
/// configuration. All distance arguments are clamped at 1 m.
class Model {
public:
    explicit Model(NetworkConfig cfg, XiPlacement xi = XiPlacement::once);

    const NetworkConfig& config() const noexcept { return cfg_; }
    const mathkit::QuadratureRule& rule() const noexcept { return rule_; }
    XiPlacement xi_placement() const noexcept { return xi_; }

    double path_loss(double d) const;
    /// Deterministic gain P_F / (P_t eps d_BI^-alpha + sigma_F^2).
    double eta(double d_bi) const;
    /// Averaged squared amplification eta / N used in place of (A*)^2.
    double mean_amp_sq(double d_bi) const;
    /// W = d_BI^alpha d_IU^alpha / eps^2.
    double product_distance(double d_bi, double d_iu) const;

    MixtureGamma direct_distribution(double d_bu) const;
    MixtureGamma cascaded_distribution(double d_bi, double d_iu) const;

    double snr_moment_direct(double ell, double d_bu) const;
    double noise_laplace(double z, double xi_i, double d_bi, double d_iu) const;
    double snr_moment_active(double ell, double d_bi, double d_iu) const;

    double mean_snr_integral(double d_bi, double d_iu) const;
    double mean_snr_closed(double d_bi, double d_iu) const;
    double mean_snr_rayleigh(double d_bi, double d_iu) const;
    double mean_snr_passive(double d_bi, double d_iu) const;
    /// Closed form where available (integer m_IU <= 8), quadrature otherwise.
    double mean_snr(double d_bi, double d_iu) const;

    double rate_direct(double d_bu) const;
    double rate_active(double d_bi, double d_iu) const;

    /// Conditional metric for a UE served directly / by an IRS.
    double conditional_direct(const Metric& metric, double d_bu) const;
    double conditional_active(const Metric& metric, double d_bi, double d_iu) const;

    MetricResult average_metric(const Metric& metric) const;
    AverageBreakdown average_breakdown(const Metric& metric) const;

    using DirectFn = std::function<double(double d_bu)>;
    using CascadeFn = std::function<double(double d_bi, double d_iu)>;
    /// Three-region average of arbitrary conditional metrics.
    AverageBreakdown average_custom(const DirectFn& c1, const CascadeFn& c2) const;

    /// Amplified-noise power reaching the UE per unit of (eta * H_IU).
    double noise_scale(double d_iu) const;

    static constexpr double kQuadratureTol = 1e-10;

private:
    NetworkConfig cfg_;
    mathkit::QuadratureRule rule_;
    XiPlacement xi_;
};

} // namespace irsnet::analytic

#endif
