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

#include "irsnet/channel.hpp"

#include "irsnet/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <random>

namespace irsnet::channel {

void PowerParams::validate() const {
    if (!(p_t > 0.0) || !(p_f > 0.0) || !(sigma2 > 0.0) || !(sigma_f2 > 0.0))
        throw ConfigError("PowerParams: p_t, p_f, sigma2 and sigma_f2 must all be positive");
}

double sample_nakagami_amplitude(double m, RandomStream& rng) {
    if (!(m >= 0.5)) throw DomainError(fmt::format("Nakagami shape {} below 0.5", m));
    std::gamma_distribution<double> power(m, 1.0 / m);
    return std::sqrt(power(rng));
}

namespace {

cdouble random_phasor(double amplitude, RandomStream& rng) {
    return std::polar(amplitude, 2.0 * std::numbers::pi * rng.uniform());
}

struct AlignedSums {
    double sum_prod;
    double sum_iu2;
};

AlignedSums aligned_sums(const FadingDraw& draw) {
    AlignedSums s{0.0, 0.0};
    for (std::size_t n = 0; n < draw.g_bi.size(); ++n) {
        s.sum_prod += std::abs(draw.g_bi[n]) * std::abs(draw.g_iu[n]);
        s.sum_iu2 += std::norm(draw.g_iu[n]);
    }
    return s;
}

void check_draw(const FadingDraw& draw) {
    if (draw.g_bi.empty() || draw.g_bi.size() != draw.g_iu.size())
        throw DomainError("FadingDraw: cascade vectors must be nonempty and of equal length");
}

} // namespace

FadingDraw sample_fading(double m_bu, double m_bi, double m_iu, int n_elements, RandomStream& rng) {
    if (n_elements < 1) throw DomainError("sample_fading: need at least one element");
    FadingDraw d;
    d.g_bu = random_phasor(sample_nakagami_amplitude(m_bu, rng), rng);
    d.g_bi.reserve(n_elements);
    d.g_iu.reserve(n_elements);
    for (int n = 0; n < n_elements; ++n) {
        d.g_bi.push_back(random_phasor(sample_nakagami_amplitude(m_bi, rng), rng));
        d.g_iu.push_back(random_phasor(sample_nakagami_amplitude(m_iu, rng), rng));
    }
    return d;
}

double amplification_factor(std::span<const cdouble> g_bi, double bi_path_loss, const PowerParams& power) {
    if (g_bi.empty()) throw DomainError("amplification_factor: empty channel vector");
    double norm2 = 0.0;
    for (const auto& g : g_bi) norm2 += std::norm(g);
    const double n = static_cast<double>(g_bi.size());
    return std::sqrt(power.p_f / (power.p_t * bi_path_loss * norm2 + n * power.sigma_f2));
}

double amplifier_output_power(std::span<const cdouble> g_bi, double bi_path_loss, double amp,
                              const PowerParams& power) {
    double norm2 = 0.0;
    for (const auto& g : g_bi) norm2 += std::norm(g);
    const double n = static_cast<double>(g_bi.size());
    return amp * amp * (power.p_t * bi_path_loss * norm2 + power.sigma_f2 * n);
}

double snr_direct(const FadingDraw& draw, double bu_path_loss, const PowerParams& power) {
    return power.p_t * bu_path_loss * std::norm(draw.g_bu) / power.sigma2;
}

double snr_active(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu, const PowerParams& power) {
    check_draw(draw);
    const double zbi = bi.path_loss();
    const double ziu = iu.path_loss();
    const double amp = amplification_factor(draw.g_bi, zbi, power);
    const auto s = aligned_sums(draw);
    const double a2 = amp * amp;
    const double signal = power.p_t * a2 * zbi * ziu * s.sum_prod * s.sum_prod;
    return signal / (a2 * ziu * s.sum_iu2 * power.sigma_f2 + power.sigma2);
}

double snr_active_with_phases(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu,
                              const PowerParams& power, std::span<const double> phases) {
    check_draw(draw);
    if (phases.size() != draw.g_bi.size()) throw DomainError("snr_active_with_phases: phase vector length mismatch");
    const double zbi = bi.path_loss();
    const double ziu = iu.path_loss();
    const double amp = amplification_factor(draw.g_bi, zbi, power);
    cdouble cascade{0.0, 0.0};
    double sum_iu2 = 0.0;
    for (std::size_t n = 0; n < phases.size(); ++n) {
        cascade += std::conj(draw.g_iu[n]) * std::polar(1.0, phases[n]) * draw.g_bi[n];
        sum_iu2 += std::norm(draw.g_iu[n]);
    }
    const double a2 = amp * amp;
    const double signal = power.p_t * a2 * zbi * ziu * std::norm(cascade);
    return signal / (a2 * ziu * sum_iu2 * power.sigma_f2 + power.sigma2);
}

double snr_passive(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu, const PowerParams& power) {
    check_draw(draw);
    const auto s = aligned_sums(draw);
    return power.p_t * bi.path_loss() * iu.path_loss() * s.sum_prod * s.sum_prod / power.sigma2;
}

CascadeSums sample_cascade_sums(double m_bi, double m_iu, int n_elements, RandomStream& rng) {
    std::gamma_distribution<double> bi(m_bi, 1.0 / m_bi);
    std::gamma_distribution<double> iu(m_iu, 1.0 / m_iu);
    CascadeSums s;
    s.n_elements = n_elements;
    for (int n = 0; n < n_elements; ++n) {
        const double pb = bi(rng);
        const double pu = iu(rng);
        s.sum_bi2 += pb;
        s.sum_iu2 += pu;
        s.sum_prod += std::sqrt(pb * pu);
    }
    return s;
}

double snr_active(const CascadeSums& sums, double zeta_bi, double zeta_iu, const PowerParams& power) {
    const double a2 = power.p_f / (power.p_t * zeta_bi * sums.sum_bi2 + sums.n_elements * power.sigma_f2);
    const double signal = power.p_t * a2 * zeta_bi * zeta_iu * sums.sum_prod * sums.sum_prod;
    return signal / (a2 * zeta_iu * sums.sum_iu2 * power.sigma_f2 + power.sigma2);
}

double snr_passive(const CascadeSums& sums, double zeta_bi, double zeta_iu, const PowerParams& power) {
    return power.p_t * zeta_bi * zeta_iu * sums.sum_prod * sums.sum_prod / power.sigma2;
}

} // namespace irsnet::channel
