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

#ifndef IRSNET_CHANNEL_HPP
#define IRSNET_CHANNEL_HPP

#include "irsnet/mixgamma.hpp"
#include "irsnet/rng.hpp"

#include <complex>
#include <span>
#include <vector>

namespace irsnet::channel {

using cdouble = std::complex<double>;

/// Transmit, amplification-budget and noise powers, all in watts.
struct PowerParams {
    double p_t = 1.0;       // BS transmit power
    double p_f = 0.01;      // active-IRS amplification budget
    double sigma2 = 1e-11;  // UE receiver noise
    double sigma_f2 = 1e-10; // per-element amplification noise

    void validate() const;
};

/// Small-scale fading of one BS-IRS-UE triple. Entries have unit mean power.
struct FadingDraw {
    cdouble g_bu;
    std::vector<cdouble> g_bi;
    std::vector<cdouble> g_iu;
};

/// Nakagami-m amplitude: square root of a Gamma(m, rate m) power draw.
double sample_nakagami_amplitude(double m, RandomStream& rng);

/// Draws a fading realization with independent uniform phases.
FadingDraw sample_fading(double m_bu, double m_bi, double m_iu, int n_elements, RandomStream& rng);

/// Optimal common amplification factor A* that meets the budget with equality:
/// (A*)^2 = P_F / (P_t zeta_BI ||g_BI||^2 + N sigma_F^2).
double amplification_factor(std::span<const cdouble> g_bi, double bi_path_loss, const PowerParams& power);

double snr_direct(const FadingDraw& draw, double bu_path_loss, const PowerParams& power);

/// Active-IRS SNR with phase-aligned reflection and the optimal A*.
double snr_active(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu, const PowerParams& power);

/// Same link with an arbitrary phase vector instead of the aligned one.
double snr_active_with_phases(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu,
                              const PowerParams& power, std::span<const double> phases);

/// Phase-aligned passive reflection (no amplification, no injected noise).
double snr_passive(const FadingDraw& draw, const LinkStats& bi, const LinkStats& iu, const PowerParams& power);

/// Radiated amplifier power P_t ||A Phi h_BI||^2 + sigma_F^2 ||A Phi||_F^2 for
/// the common factor `amp`.
double amplifier_output_power(std::span<const cdouble> g_bi, double bi_path_loss, double amp,
                              const PowerParams& power);

/// Sufficient statistics of phase-aligned cascade fading. The Monte-Carlo
/// kernels only need these three sums, so they skip the complex vectors.
struct CascadeSums {
    int n_elements = 0;
    double sum_bi2 = 0.0;  // sum |g_BI,n|^2
    double sum_iu2 = 0.0;  // sum |g_IU,n|^2
    double sum_prod = 0.0; // sum |g_BI,n| |g_IU,n|
};

CascadeSums sample_cascade_sums(double m_bi, double m_iu, int n_elements, RandomStream& rng);

double snr_active(const CascadeSums& sums, double zeta_bi, double zeta_iu, const PowerParams& power);
double snr_passive(const CascadeSums& sums, double zeta_bi, double zeta_iu, const PowerParams& power);

} // namespace irsnet::channel

#endif
