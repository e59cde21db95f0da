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

#include "irsnet/analytic.hpp"

#include "irsnet/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

namespace irsnet::analytic {

using mathkit::integrate_interval;
using mathkit::integrate_semi_infinite;
using mathkit::ln_gamma;
using mathkit::log2_e;

namespace {

constexpr double kAverageTol = 1e-7;
constexpr double kInnerTol = 1e-9;

// (1 - (1 + z)^-beta) / z without cancellation near z = 0.
double rate_kernel(double z, double beta) {
    if (z < 1e-300) return beta;
    return -std::expm1(-beta * std::log1p(z)) / z;
}

bool integer_shape(double m, int& out) {
    const double r = std::round(m);
    if (std::abs(m - r) > 1e-12) return false;
    out = static_cast<int>(r);
    return true;
}

// Geometric centre between the shortest algebraic length and the exponential
// cutoff, so that the semi-infinite map resolves both. Algebraic features past
// the cutoff carry no mass and are ignored.
double map_scale(double cutoff, std::initializer_list<double> lengths) {
    double lo = cutoff;
    for (double l : lengths) lo = std::min(lo, l);
    return std::sqrt(lo) * std::sqrt(cutoff);
}

// int_0^inf e^{-y s} (1 + s)^{-m} ds
double tail_integral(double m, double y, double tol) {
    if (!(y > 0.0)) throw DomainError("tail integral needs y > 0");
    const double scale = y < 1.0 ? 1.0 / std::sqrt(y) : 1.0 / y;
    return integrate_semi_infinite([&](double s) { return std::exp(-y * s - m * std::log1p(s)); }, tol, scale).value;
}

// Closed form of the tail integral for integer m >= 1.
double tail_integral_closed(int m, double y) {
    double sum = 0.0;
    double fact = 1.0; // (k-1)!
    for (int k = 1; k <= m - 1; ++k) {
        if (k > 1) fact *= (k - 1);
        sum += fact * std::pow(-y, m - 1 - k);
    }
    sum += std::pow(-y, m - 1) * mathkit::exp_e1_scaled(y);
    return sum / std::exp(std::lgamma(static_cast<double>(m)));
}

} // namespace

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::snr_moment: return "snr_moment";
    case MetricKind::achievable_rate: return "achievable_rate";
    case MetricKind::spatial_throughput: return "spatial_throughput";
    }
    return "unknown";
}

std::string to_string(Method method) {
    switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

std::string metric_label(const Metric& metric) {
    if (metric.kind == MetricKind::snr_moment) return fmt::format("snr_moment_{}", metric.order);
    return to_string(metric.kind);
}

Model::Model(NetworkConfig cfg, XiPlacement xi)
    : cfg_(std::move(cfg)), rule_(mathkit::gauss_laguerre(cfg_.quadrature_order)), xi_(xi) {
    cfg_.power.validate();
    const auto& c = cfg_.channel;
    if (!(c.alpha > 0.0) || !(c.epsilon > 0.0)) throw ConfigError("channel: alpha and epsilon must be positive");
    for (double m : {c.m_bu, c.m_bi, c.m_iu})
        if (!(m >= 0.5)) throw DomainError(fmt::format("Nakagami shape {} below 0.5", m));
    if (cfg_.geometry.elements_per_irs < 1) throw ConfigError("elements_per_irs must be >= 1");
}

double Model::path_loss(double d) const {
    return cfg_.channel.epsilon * std::pow(floor_distance(d), -cfg_.channel.alpha);
}

double Model::eta(double d_bi) const {
    const auto& p = cfg_.power;
    return p.p_f / (p.p_t * path_loss(d_bi) + p.sigma_f2);
}

double Model::mean_amp_sq(double d_bi) const { return eta(d_bi) / cfg_.geometry.elements_per_irs; }

double Model::product_distance(double d_bi, double d_iu) const {
    return 1.0 / (path_loss(d_bi) * path_loss(d_iu));
}

double Model::noise_scale(double d_iu) const {
    const double kappa = cfg_.noise_coupling == NoiseCoupling::path_loss ? path_loss(d_iu) : 1.0;
    return cfg_.power.sigma_f2 * kappa;
}

MixtureGamma Model::direct_distribution(double d_bu) const {
    return direct_power_dist({cfg_.channel.m_bu, floor_distance(d_bu), cfg_.channel.alpha, cfg_.channel.epsilon});
}

MixtureGamma Model::cascaded_distribution(double d_bi, double d_iu) const {
    const auto& c = cfg_.channel;
    return cascaded_power_dist({c.m_bi, floor_distance(d_bi), c.alpha, c.epsilon},
                               {c.m_iu, floor_distance(d_iu), c.alpha, c.epsilon}, mean_amp_sq(d_bi),
                               cfg_.geometry.elements_per_irs, rule_);
}

double Model::snr_moment_direct(double ell, double d_bu) const {
    if (!(ell > 0.0)) throw DomainError("snr moment order must be positive");
    const double m = cfg_.channel.m_bu;
    const double mean = cfg_.power.p_t * path_loss(d_bu) / cfg_.power.sigma2;
    return std::exp(ell * std::log(mean / m) + ln_gamma(m + ell) - ln_gamma(m));
}

double Model::noise_laplace(double z, double xi_i, double d_bi, double d_iu) const {
    if (!(z >= 0.0)) throw DomainError("noise_laplace: z must be nonnegative");
    const double m = cfg_.channel.m_iu;
    const int n = cfg_.geometry.elements_per_irs;
    double k = mean_amp_sq(d_bi) * n * noise_scale(d_iu) * xi_i / cfg_.power.p_t;
    if (xi_ == XiPlacement::twice) k *= xi_i;
    return std::exp(-m * std::log1p(z * k / m));
}

double Model::snr_moment_active(double ell, double d_bi, double d_iu) const {
    if (!(ell > 0.0)) throw DomainError("snr moment order must be positive");
    const auto mix = cascaded_distribution(d_bi, d_iu);
    const double m = cfg_.channel.m_iu;
    const double noise = mean_amp_sq(d_bi) * cfg_.geometry.elements_per_irs * noise_scale(d_iu) / cfg_.power.p_t;
    const double lg_ell = ln_gamma(ell);
    double total = 0.0;
    for (const auto& c : mix.components()) {
        const double a = c.xi * cfg_.power.sigma2 / cfg_.power.p_t;
        double k = noise * c.xi;
        if (xi_ == XiPlacement::twice) k *= c.xi;
        // z = s / u with u the larger of the two rates
        const double u = std::max(a, k);
        const double ra = a / u, rk = k / u;
        const double log_coef = std::log(c.mass()) + ln_gamma(c.beta + ell) - ln_gamma(c.beta) - lg_ell - ell * std::log(u);
        const auto res = integrate_semi_infinite(
            [&](double s) {
                if (s <= 0.0) return ell == 1.0 ? 1.0 : 0.0;
                return std::exp((ell - 1.0) * std::log(s) - ra * s - m * std::log1p(rk * s / m));
            },
            kQuadratureTol, map_scale(1.0 / ra, {m / rk}));
        total += std::exp(log_coef) * res.value;
    }
    return total;
}

double Model::mean_snr_integral(double d_bi, double d_iu) const {
    const double m = cfg_.channel.m_iu;
    const double n = cfg_.geometry.elements_per_irs;
    const double kf = noise_scale(d_iu);
    const double y = m * cfg_.power.sigma2 / (eta(d_bi) * kf);
    const double w = product_distance(d_bi, d_iu);
    const double head = n * cfg_.power.p_t / (kf * w);
    const double lg = ln_gamma(m);
    const double j = tail_integral(m, y, kQuadratureTol);
    double total = 0.0;
    for (int i = 0; i < rule_.order(); ++i)
        total += std::exp(std::log(rule_.weight(i)) + m * std::log(rule_.node(i)) - lg);
    return total * head * j;
}

double Model::mean_snr_closed(double d_bi, double d_iu) const {
    const double m = cfg_.channel.m_iu;
    int mi = 0;
    if (!integer_shape(m, mi) || mi < 1 || mi > 8)
        throw UnsupportedParameter(fmt::format("closed-form mean SNR needs integer m_IU in [1, 8], got {}", m));
    const double n = cfg_.geometry.elements_per_irs;
    const double kf = noise_scale(d_iu);
    const double y = m * cfg_.power.sigma2 / (eta(d_bi) * kf);
    const double w = product_distance(d_bi, d_iu);
    const double head = n * cfg_.power.p_t / (kf * w);
    const double lg = ln_gamma(m);
    const double j = tail_integral_closed(mi, y);
    double total = 0.0;
    for (int i = 0; i < rule_.order(); ++i)
        total += std::exp(std::log(rule_.weight(i)) + m * std::log(rule_.node(i)) - lg);
    return total * head * j;
}

double Model::mean_snr_rayleigh(double d_bi, double d_iu) const {
    if (cfg_.channel.m_iu != 1.0)
        throw UnsupportedParameter(fmt::format("Rayleigh mean SNR needs m_IU = 1, got {}", cfg_.channel.m_iu));
    const auto& p = cfg_.power;
    const double kf = noise_scale(d_iu);
    const double psi = p.sigma2 * (p.p_t * path_loss(d_bi) + p.sigma_f2) / kf;
    const double w = product_distance(d_bi, d_iu);
    return cfg_.geometry.elements_per_irs * p.p_t / (w * kf) * mathkit::exp_e1_scaled(psi / p.p_f);
}

double Model::mean_snr_passive(double d_bi, double d_iu) const {
    const double m = cfg_.channel.m_iu;
    const double n = cfg_.geometry.elements_per_irs;
    const double lg = ln_gamma(m + 1.0);
    double total = 0.0;
    for (int i = 0; i < rule_.order(); ++i)
        total += std::exp(std::log(rule_.weight(i)) + m * std::log(rule_.node(i)) - lg);
    return n * n * total * cfg_.power.p_t / (cfg_.power.sigma2 * product_distance(d_bi, d_iu));
}

double Model::mean_snr(double d_bi, double d_iu) const {
    int mi = 0;
    if (integer_shape(cfg_.channel.m_iu, mi) && mi >= 1 && mi <= 8) return mean_snr_closed(d_bi, d_iu);
    return mean_snr_integral(d_bi, d_iu);
}

double Model::rate_direct(double d_bu) const {
    const double m = cfg_.channel.m_bu;
    const double c = m * cfg_.power.sigma2 / (cfg_.power.p_t * path_loss(d_bu));
    const auto res = integrate_semi_infinite(
        [&](double z) { return rate_kernel(z, m) * std::exp(-c * z); }, kQuadratureTol, map_scale(1.0 / c, {1.0}));
    return log2_e * res.value;
}

double Model::rate_active(double d_bi, double d_iu) const {
    const auto mix = cascaded_distribution(d_bi, d_iu);
    const double m = cfg_.channel.m_iu;
    const double noise = mean_amp_sq(d_bi) * cfg_.geometry.elements_per_irs * noise_scale(d_iu) / cfg_.power.p_t;
    double total = 0.0;
    for (const auto& c : mix.components()) {
        const double a = c.xi * cfg_.power.sigma2 / cfg_.power.p_t;
        double k = noise * c.xi;
        if (xi_ == XiPlacement::twice) k *= c.xi;
        const auto res = integrate_semi_infinite(
            [&](double z) {
                return rate_kernel(z, c.beta) * std::exp(-a * z - m * std::log1p(z * k / m));
            },
            kInnerTol, map_scale(1.0 / a, {1.0, m / k}));
        total += c.mass() * res.value;
    }
    return log2_e * total;
}

double Model::conditional_direct(const Metric& metric, double d_bu) const {
    if (metric.kind == MetricKind::snr_moment) return snr_moment_direct(metric.order, d_bu);
    return rate_direct(d_bu);
}

double Model::conditional_active(const Metric& metric, double d_bi, double d_iu) const {
    if (metric.kind == MetricKind::snr_moment) {
        if (metric.order == 1.0 && xi_ == XiPlacement::once) return mean_snr(d_bi, d_iu);
        return snr_moment_active(metric.order, d_bi, d_iu);
    }
    return rate_active(d_bi, d_iu);
}

AverageBreakdown Model::average_custom(const DirectFn& c1, const CascadeFn& c2) const {
    const auto& g = cfg_.geometry;
    g.validate(true);
    const double two_pi = 2.0 * std::numbers::pi;
    const double s_t = g.area_total();
    const double lambda = g.irs_density();
    const double big_l = g.cell_radius;

    AverageBreakdown out;
    double err = 0.0;

    // Region 1: d < L_in, direct link. Below 1 m the metric is constant.
    const double c1_floor = c1(kMinDistance);
    double r1 = c1_floor * 0.5 * std::min(1.0, g.ring_inner) * std::min(1.0, g.ring_inner);
    if (g.ring_inner > kMinDistance) {
        const auto res = integrate_interval([&](double d) { return d * c1(d); }, kMinDistance,
                                            g.ring_inner, kAverageTol);
        r1 += res.value;
        err += res.error;
    }

    // Region 2: ring, nearest-IRS distance r with PDF 2 pi lambda r e^{-lambda pi r^2} on (0, L).
    const double mass_below_floor = -std::expm1(-lambda * std::numbers::pi * kMinDistance * kMinDistance);
    out.ring_pdf_mass = -std::expm1(-lambda * std::numbers::pi * big_l * big_l);
    double inner_err = 0.0;
    const auto ring_inner = [&](double d) {
        double v = mass_below_floor * c2(d, kMinDistance);
        const auto res = integrate_interval(
            [&](double r) {
                const double f = two_pi * lambda * r * std::exp(-lambda * std::numbers::pi * r * r);
                if (f == 0.0) return 0.0;
                return f * c2(d, r);
            },
            kMinDistance, big_l, kAverageTol);
        inner_err = std::max(inner_err, res.error / std::max(std::abs(res.value), 1e-300));
        return v + res.value;
    };
    const auto r2res = integrate_interval([&](double d) { return d * ring_inner(d); }, g.ring_inner, g.ring_outer,
                                          kAverageTol);
    const double r2 = r2res.value;
    err += r2res.error + inner_err * std::abs(r2);

    // Region 3: beyond the ring, served by an IRS on the outer edge.
    const double edge = g.ring_outer;
    const double c3_floor = c2(edge, kMinDistance);
    const double floor_end = std::min(edge + kMinDistance, big_l);
    double r3 = c3_floor * 0.5 * (floor_end * floor_end - edge * edge);
    if (big_l > floor_end) {
        const auto res = integrate_interval([&](double d) { return d * c2(edge, d - edge); },
                                            floor_end, big_l, kAverageTol);
        r3 += res.value;
        err += res.error;
    }

    const double scale = two_pi / s_t;
    out.region_inner = r1 * two_pi / g.area_inner();
    out.region_ring = r2 * two_pi / g.area_ring();
    out.region_outer = g.area_outer() > 0.0 ? r3 * two_pi / g.area_outer() : 0.0;
    out.total = scale * (r1 + r2 + r3);
    out.error = scale * err + kInnerTol * std::abs(out.total);
    return out;
}

AverageBreakdown Model::average_breakdown(const Metric& metric) const {
    auto out = average_custom([&](double d) { return conditional_direct(metric, d); },
                              [&](double d_bi, double d_iu) { return conditional_active(metric, d_bi, d_iu); });
    if (metric.kind == MetricKind::spatial_throughput) {
        const double s_t = cfg_.geometry.area_total();
        for (double* v : {&out.region_inner, &out.region_ring, &out.region_outer, &out.total, &out.error}) *v /= s_t;
    }
    return out;
}

MetricResult Model::average_metric(const Metric& metric) const {
    const auto b = average_breakdown(metric);
    MetricResult r;
    r.value = b.total;
    r.metric = metric;
    r.method = Method::quadrature;
    r.error_estimate = b.error;
    return r;
}

} // namespace irsnet::analytic
