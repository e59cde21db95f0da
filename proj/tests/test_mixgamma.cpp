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

#include "irsnet/errors.hpp"
#include "irsnet/mathkit.hpp"
#include "irsnet/mixgamma.hpp"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>

using namespace irsnet;

namespace {

const auto& rule20() {
    static const auto r = mathkit::gauss_laguerre(20);
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// E[G1 G2] for unit-mean Gammas by brute-force double quadrature of the
// product density, cut where the tails are negligible.
double product_mean_bruteforce(double m1, double m2) {
    const auto pdf = [](double m, double g) { return boost::math::pdf(boost::math::gamma_distribution<>(m, 1.0 / m), g); };
    const auto inner = [&](double g1) {
        return mathkit::integrate_interval([&](double g2) { return g1 * g2 * pdf(m1, g1) * pdf(m2, g2); }, 0.0, 60.0,
                                           1e-10)
            .value;
    };
    return mathkit::integrate_interval(inner, 0.0, 60.0, 1e-9).value;
}

// P(G1 G2 <= y) for independent unit exponentials: 1 - 2 sqrt(y) K_1(2 sqrt(y)).
double double_exponential_cdf(double y) {
    const double s = 2.0 * std::sqrt(y);
    return 1.0 - s * boost::math::cyl_bessel_k(1, s);
}

} // namespace

TEST(LinkStats, ValidatesAndComputesPathLoss) {
    const LinkStats link(2.0, 50.0, 3.0, 1e-3);
    EXPECT_DOUBLE_EQ(link.path_loss(), 1e-3 * std::pow(50.0, -3.0));
    EXPECT_THROW(LinkStats(0.4, 10.0, 3.0, 1e-3), DomainError);
    EXPECT_THROW(LinkStats(1.0, 0.0, 3.0, 1e-3), DomainError);
}

TEST(DirectPowerDist, RayleighAtHundredMeters) {
    const auto d = direct_power_dist({1.0, 100.0, 3.0, 1e-3});
    ASSERT_EQ(d.size(), 1u);
    EXPECT_DOUBLE_EQ(d.component(0).beta, 1.0);
    EXPECT_LT(rel(d.component(0).xi, 1e9), 1e-14);
    EXPECT_LT(rel(d.component(0).epsilon(), 1e9), 1e-12);
    EXPECT_LT(rel(d.moment(1.0), 1e-9), 1e-12);
}

TEST(DirectPowerDist, UnitDistanceShapeTwo) {
    const auto d = direct_power_dist({2.0, 1.0, 3.0, 1.0});
    EXPECT_DOUBLE_EQ(d.component(0).beta, 2.0);
    EXPECT_DOUBLE_EQ(d.component(0).xi, 2.0);
    EXPECT_NEAR(d.component(0).epsilon(), 4.0, 1e-13);
    EXPECT_NEAR(d.moment(1.0), 1.0, 1e-13);
}

TEST(DirectPowerDist, MeanEqualsPathLossAndIsNormalized) {
    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 7.5}) {
        const LinkStats link(m, 50.0, 3.0, 1e-3);
        const auto d = direct_power_dist(link);
        EXPECT_LT(rel(d.moment(1.0), link.path_loss()), 1e-12);
        EXPECT_LT(d.normalization_defect(), 1e-13);
    }
}

TEST(DirectPowerDist, PdfMatchesGammaDensity) {
    for (double m : {0.5, 1.0, 2.0, 4.0}) {
        const LinkStats link(m, 80.0, 3.0, 1e-3);
        const auto d = direct_power_dist(link);
        const double xi = m * std::pow(80.0, 3.0) / 1e-3;
        const boost::math::gamma_distribution<> ref(m, 1.0 / xi);
        for (double f : {0.1, 1.0, 10.0}) {
            const double x = f * link.path_loss();
            EXPECT_LT(rel(d.pdf(x), boost::math::pdf(ref, x)), 1e-12) << m << " " << f;
            EXPECT_LT(std::abs(d.cdf(x) - boost::math::cdf(ref, x)), 1e-12);
        }
    }
}

TEST(DirectPowerDist, SecondMomentOfExponential) {
    const LinkStats link(1.0, 100.0, 3.0, 1e-3);
    EXPECT_LT(rel(direct_power_dist(link).moment(2.0), 2.0 * link.path_loss() * link.path_loss()), 1e-12);
}

TEST(MixtureGamma, PdfOfSingleComponents) {
    EXPECT_NEAR(MixtureGamma::from_linear({{1.0, 1.0, 1.0}}).pdf(0.5), 0.6065306597126334, 1e-15);
    EXPECT_NEAR(MixtureGamma::from_linear({{9.0, 2.0, 3.0}}).pdf(1.0), 0.44808361531077, 1e-13);
    EXPECT_THROW(MixtureGamma::from_linear({{1.0, 1.0, 1.0}}).pdf(0.0), DomainError);
    EXPECT_THROW(MixtureGamma::from_linear({{1.0, 1.0, 1.0}}).pdf(-1.0), DomainError);
}

TEST(MixtureGamma, LaplaceOfSingleComponents) {
    EXPECT_NEAR(MixtureGamma::from_linear({{1.0, 1.0, 1.0}}).laplace(1.0), 0.5, 1e-15);
    EXPECT_NEAR(MixtureGamma::from_linear({{4.0, 2.0, 2.0}}).laplace(2.0), 0.25, 1e-15);
    EXPECT_NEAR(MixtureGamma::from_linear({{4.0, 2.0, 2.0}}).laplace(0.0), 1.0, 1e-15);
}

TEST(MixtureGamma, RejectsInvalidComponents) {
    EXPECT_THROW(MixtureGamma({}), DomainError);
    EXPECT_THROW(MixtureGamma::from_linear({{0.0, 1.0, 1.0}}), DomainError);
    EXPECT_THROW(MixtureGamma::from_linear({{1.0, -1.0, 1.0}}), DomainError);
    EXPECT_THROW(MixtureGamma::from_linear({{1.0, 1.0, 0.0}}), DomainError);
}

TEST(MixtureGamma, JsonHasEpsilonBetaXi) {
    const auto d = MixtureGamma::from_linear({{4.0, 2.0, 2.0}, {1.0, 1.0, 1.0}});
    const auto doc = nlohmann::json::parse(d.to_json());
    ASSERT_EQ(doc.size(), 2u);
    EXPECT_DOUBLE_EQ(doc[0]["epsilon"].get<double>(), 4.0);
    EXPECT_DOUBLE_EQ(doc[1]["xi"].get<double>(), 1.0);
}

TEST(CascadedPowerDist, RayleighComponentsFollowNodes) {
    const LinkStats bi(1.0, 100.0, 3.0, 1e-3), iu(1.0, 30.0, 3.0, 1e-3);
    const double amp = 1e5;
    const int n = 64;
    const auto d = cascaded_power_dist(bi, iu, amp, n, rule20());
    ASSERT_EQ(d.size(), 20u);
    const double c = 1.0 / (bi.path_loss() * iu.path_loss() * amp * n * n);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double t = rule20().node(i), w = rule20().weight(i);
        EXPECT_DOUBLE_EQ(d.component(i).beta, 1.0);
        EXPECT_LT(rel(d.component(i).epsilon(), w / t * c), 1e-12);
        EXPECT_LT(rel(d.component(i).xi, c / t), 1e-12);
    }
}

TEST(CascadedPowerDist, NormalizationDefect) {
    for (double m_bi : {1.0, 2.0, 3.0})
        for (double m_iu : {1.0, 2.0, 3.0}) {
            const LinkStats bi(m_bi, 90.0, 3.0, 1e-3), iu(m_iu, 20.0, 3.0, 1e-3);
            const double d20 = cascaded_power_dist(bi, iu, 1e4, 32, rule20()).normalization_defect();
            const double d10 = cascaded_power_dist(bi, iu, 1e4, 32, mathkit::gauss_laguerre(10)).normalization_defect();
            EXPECT_LE(d20, 1e-4);
            EXPECT_LE(d20, std::max(d10, 1e-13)) << m_bi << " " << m_iu;
        }
}

TEST(CascadedPowerDist, NonIntegerShapeDefectShrinksWithOrder) {
    const LinkStats bi(1.5, 90.0, 3.0, 1e-3), iu(2.5, 20.0, 3.0, 1e-3);
    const double d5 = cascaded_power_dist(bi, iu, 1e4, 32, mathkit::gauss_laguerre(5)).normalization_defect();
    const double d20 = cascaded_power_dist(bi, iu, 1e4, 32, rule20()).normalization_defect();
    EXPECT_LT(d20, d5);
    EXPECT_LE(d20, 1e-4);
}

TEST(CascadedPowerDist, MeanMatchesBruteForceProductLaw) {
    // the mixture stands for amp N^2 zeta_BI zeta_IU G_BI G_IU with unit-mean Gamma powers
    for (double m_bi : {1.0, 2.0, 3.0})
        for (double m_iu : {1.0, 2.0, 3.0}) {
            const LinkStats bi(m_bi, 100.0, 3.0, 1e-3), iu(m_iu, 30.0, 3.0, 1e-3);
            const double amp = 2e4;
            const int n = 16;
            const auto d = cascaded_power_dist(bi, iu, amp, n, rule20());
            const double expected =
                amp * n * n * bi.path_loss() * iu.path_loss() * product_mean_bruteforce(m_bi, m_iu);
            EXPECT_LT(rel(d.moment(1.0), expected), 1e-3) << m_bi << " " << m_iu;
        }
}

TEST(CascadedPowerDist, CdfMatchesDoubleExponentialLaw) {
    // W / (amp N^2) = 1 with N = 1
    const LinkStats bi(1.0, 1.0, 3.0, 1.0), iu(1.0, 1.0, 3.0, 1.0);
    const auto d = cascaded_power_dist(bi, iu, 1.0, 1, rule20());
    double ks = 0.0;
    for (double y = 1e-4; y < 30.0; y *= 1.05) ks = std::max(ks, std::abs(d.cdf(y) - double_exponential_cdf(y)));
    EXPECT_LE(ks, 0.02);
    // median of the product law
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (double_exponential_cdf(mid) < 0.5 ? lo : hi) = mid;
    }
    EXPECT_NEAR(d.cdf(lo), 0.5, 0.01);
}

TEST(CascadedPowerDist, PdfIntegratesToOne) {
    const LinkStats bi(2.0, 100.0, 3.0, 1e-3), iu(1.0, 30.0, 3.0, 1e-3);
    const auto d = cascaded_power_dist(bi, iu, 1e5, 64, rule20());
    const double mean = d.moment(1.0);
    const auto r = mathkit::integrate_semi_infinite([&](double x) { return x > 0.0 ? d.pdf(x) : 0.0; }, 1e-9, mean);
    EXPECT_NEAR(r.value, 1.0, 1e-4);
}

TEST(CascadedPowerDist, LaplaceAtZeroEqualsMassAndDecreases) {
    const LinkStats bi(3.0, 100.0, 3.0, 1e-3), iu(2.0, 30.0, 3.0, 1e-3);
    const auto d = cascaded_power_dist(bi, iu, 1e5, 64, rule20());
    EXPECT_NEAR(d.laplace(0.0), d.mass(), 1e-14);
    double prev = d.laplace(0.0);
    for (double s = 1.0; s < 1e12; s *= 3.0) {
        const double v = d.laplace(s / d.moment(1.0) * 1e-3);
        EXPECT_LE(v, prev);
        prev = v;
    }
    for (double ell : {1.0, 2.0, 3.0, 4.0}) EXPECT_TRUE(std::isfinite(d.moment(ell)));
}

TEST(CascadedPowerDist, RejectsLowOrderAndBadInputs) {
    const LinkStats bi(1.0, 100.0, 3.0, 1e-3), iu(1.0, 30.0, 3.0, 1e-3);
    EXPECT_THROW(cascaded_power_dist(bi, iu, 1.0, 4, mathkit::gauss_laguerre(3)), UnsupportedParameter);
    EXPECT_THROW(cascaded_power_dist(bi, iu, 0.0, 4, rule20()), DomainError);
    EXPECT_THROW(cascaded_power_dist(bi, iu, 1.0, 0, rule20()), DomainError);
}

TEST(Sampling, SingleComponentMeans) {
    auto rng = make_stream(3, StreamDomain::test);
    const auto exp1 = MixtureGamma::from_linear({{1.0, 1.0, 1.0}});
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) sum += exp1.sample(rng);
    EXPECT_NEAR(sum / n, 1.0, 0.003);

    const double eps = std::pow(2.0, 4.0) / std::tgamma(4.0);
    const auto g4 = MixtureGamma::from_linear({{eps, 4.0, 2.0}});
    sum = 0.0;
    for (int i = 0; i < 200000; ++i) sum += g4.sample(rng);
    EXPECT_NEAR(sum / 200000, 2.0, 4 * std::sqrt(1.0 / 200000));
}

TEST(Sampling, MixtureMomentsWithinStandardErrors) {
    const LinkStats bi(2.0, 100.0, 3.0, 1e-3), iu(1.0, 30.0, 3.0, 1e-3);
    const auto d = cascaded_power_dist(bi, iu, 1e5, 64, rule20());
    auto rng = make_stream(5, StreamDomain::test);
    const int n = 1000000;
    double s1 = 0.0, s2 = 0.0, s4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = d.sample(rng);
        s1 += x;
        s2 += x * x;
        s4 += x * x * x * x;
    }
    const double m1 = s1 / n, m2 = s2 / n;
    const double se1 = std::sqrt((m2 - m1 * m1) / n);
    const double se2 = std::sqrt((s4 / n - m2 * m2) / n);
    EXPECT_LT(std::abs(m1 - d.moment(1.0)), 4 * se1);
    EXPECT_LT(std::abs(m2 - d.moment(2.0)), 4 * se2);
}

TEST(Sampling, EmpiricalCdfMatchesAnalytic) {
    const LinkStats bi(1.0, 100.0, 3.0, 1e-3), iu(2.0, 30.0, 3.0, 1e-3);
    const auto d = cascaded_power_dist(bi, iu, 1e5, 64, rule20());
    auto rng = make_stream(8, StreamDomain::test);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = d.sample(rng);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = d.cdf(xs[i]);
        ks = std::max({ks, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
    }
    EXPECT_LE(ks, 0.005);
}

TEST(Sampling, RejectsUnnormalizedMixture) {
    auto rng = make_stream(1, StreamDomain::test);
    EXPECT_THROW(MixtureGamma::from_linear({{2.0, 1.0, 1.0}}).sample(rng), DomainError);
}

TEST(Sampling, ComponentProbabilitiesSumToOne) {
    const LinkStats bi(1.0, 100.0, 3.0, 1e-3), iu(3.0, 30.0, 3.0, 1e-3);
    const auto p = cascaded_power_dist(bi, iu, 1e5, 64, rule20()).component_probabilities();
    double s = 0.0;
    for (double v : p) {
        EXPECT_GT(v, 0.0);
        s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-14);
}
