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
#include "irsnet/simulate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace irsnet;
using namespace irsnet::simulate;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SimOptions small_options(int drops = 40, int fading = 10, int ues = 20) {
    SimOptions o;
    o.n_drops = drops;
    o.n_fading = fading;
    o.ues_per_drop = ues;
    return o;
}

} // namespace

TEST(Drop, IrsRadiiAreAreaUniformInRing) {
    GeometryConfig g;
    double sum_r2 = 0.0;
    long n = 0;
    for (std::uint32_t d = 0; d < 5000; ++d) {
        const auto real = drop(g, 3, d, 1);
        for (const auto& p : real.irs_positions) {
            const double r = p.radius();
            EXPECT_GE(r, g.ring_inner);
            EXPECT_LE(r, g.ring_outer);
            sum_r2 += r * r;
            ++n;
        }
    }
    const double expected = (g.ring_inner * g.ring_inner + g.ring_outer * g.ring_outer) / 2.0;
    EXPECT_LT(rel(sum_r2 / n, expected), 0.005);
}

TEST(Drop, UeInnerFractionMatchesAreaRatio) {
    GeometryConfig g;
    long inner = 0, n = 0;
    for (std::uint32_t d = 0; d < 400; ++d) {
        const auto real = drop(g, 5, d, 50);
        for (std::size_t k = 0; k < real.ue_positions.size(); ++k) {
            const double r = real.ue_positions[k].radius();
            EXPECT_LE(r, g.cell_radius);
            const bool is_inner = r < g.ring_inner;
            inner += is_inner;
            EXPECT_EQ(is_inner, !real.association[k].has_value());
            ++n;
        }
    }
    const double p = (g.ring_inner * g.ring_inner) / (g.cell_radius * g.cell_radius);
    const double sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_LT(std::abs(static_cast<double>(inner) / n - p), 3 * sigma);
}

TEST(Drop, NearestAssociationPicksClosestIrs) {
    GeometryConfig g;
    const auto real = drop(g, 11, 0, 200);
    for (std::size_t k = 0; k < real.ue_positions.size(); ++k) {
        if (!real.association[k]) continue;
        const double chosen = real.ue_positions[k].distance(real.irs_positions[*real.association[k]]);
        for (const auto& irs : real.irs_positions) EXPECT_LE(chosen, real.ue_positions[k].distance(irs));
    }
}

TEST(Drop, DeterministicPerSeedAndIndex) {
    GeometryConfig g;
    const auto a = drop(g, 9, 4, 30);
    const auto b = drop(g, 9, 4, 30);
    const auto c = drop(g, 10, 4, 30);
    for (std::size_t k = 0; k < a.ue_positions.size(); ++k) {
        EXPECT_EQ(a.ue_positions[k].x, b.ue_positions[k].x);
        EXPECT_EQ(a.ue_positions[k].y, b.ue_positions[k].y);
    }
    EXPECT_NE(a.ue_positions[0].x, c.ue_positions[0].x);
    // UE streams do not depend on the IRS count
    GeometryConfig more = g;
    more.irs_count = 3;
    const auto d = drop(more, 9, 4, 30);
    EXPECT_EQ(a.ue_positions[7].x, d.ue_positions[7].x);
}

TEST(Drop, RejectsEmptyUeSet) { EXPECT_THROW(drop(GeometryConfig{}, 1, 0, 0), ConfigError); }

TEST(Associate, SingleIrsTakesAllOuterUes) {
    NetworkConfig cfg;
    cfg.geometry.irs_count = 1;
    const analytic::Model model(cfg);
    auto real = drop(cfg.geometry, 2, 0, 100);
    for (auto policy : {AssociationPolicy::nearest, AssociationPolicy::best_irs}) {
        const auto out = associate(real, policy, model);
        for (std::size_t k = 0; k < out.ue_positions.size(); ++k)
            EXPECT_EQ(out.association[k].has_value(), out.ue_positions[k].radius() >= cfg.geometry.ring_inner);
    }
}

TEST(Associate, ThresholdUeGoesToIrs) {
    NetworkConfig cfg;
    const analytic::Model model(cfg);
    NetworkRealization real;
    real.irs_positions = {{100.0, 0.0}, {0.0, 120.0}};
    real.ue_positions = {{cfg.geometry.ring_inner, 0.0}, {std::nextafter(cfg.geometry.ring_inner, 0.0), 0.0}};
    const auto out = associate(real, AssociationPolicy::nearest, model);
    ASSERT_TRUE(out.association[0].has_value());
    EXPECT_EQ(*out.association[0], 0u);
    EXPECT_FALSE(out.association[1].has_value());
}

TEST(Associate, BestIrsCanOverruleNearest) {
    NetworkConfig cfg;
    const analytic::Model model(cfg);
    NetworkRealization real;
    // IRS 0 is closer to the UE but much farther from the BS
    real.irs_positions = {{129.0, 0.0}, {81.0, 0.0}};
    real.ue_positions = {{106.0, 0.0}};
    const double d0 = real.ue_positions[0].distance(real.irs_positions[0]);
    const double d1 = real.ue_positions[0].distance(real.irs_positions[1]);
    ASSERT_LT(d0, d1);
    ASSERT_GT(model.mean_snr(81.0, d1), model.mean_snr(129.0, d0));

    EXPECT_EQ(*associate(real, AssociationPolicy::nearest, model).association[0], 0u);
    EXPECT_EQ(*associate(real, AssociationPolicy::best_irs, model).association[0], 1u);
}

TEST(Associate, TiesGoToLowestIndex) {
    NetworkConfig cfg;
    const analytic::Model model(cfg);
    NetworkRealization real;
    real.irs_positions = {{100.0, 0.0}, {100.0, 0.0}};
    real.ue_positions = {{110.0, 0.0}};
    for (auto policy : {AssociationPolicy::nearest, AssociationPolicy::best_irs})
        EXPECT_EQ(*associate(real, policy, model).association[0], 0u);
}

TEST(SimulateCell, BitIdenticalAcrossThreadCounts) {
    NetworkConfig cfg;
    auto o = small_options(12, 5, 10);
    const auto a = simulate_cell(cfg, o);
    o.threads = 4;
    const auto b = simulate_cell(cfg, o);
    EXPECT_EQ(a.mean_snr.mean, b.mean_snr.mean);
    EXPECT_EQ(a.rate.mean, b.rate.mean);
    EXPECT_EQ(a.rate.std_error, b.rate.std_error);
    o.seed = 2;
    EXPECT_NE(simulate_cell(cfg, o).rate.mean, a.rate.mean);
}

TEST(SimulateCell, ReportsRunShape) {
    NetworkConfig cfg;
    auto o = small_options(7, 3, 5);
    o.seed = 42;
    const auto e = simulate_cell(cfg, o);
    EXPECT_EQ(e.rate.n_drops, 7);
    EXPECT_EQ(e.rate.n_fading_per_drop, 3);
    EXPECT_EQ(e.rate.seed, 42u);
    EXPECT_GT(e.rate.std_error, 0.0);
    EXPECT_NEAR(e.spatial_throughput.mean, e.rate.mean / cfg.geometry.area_total(), 1e-18);
    EXPECT_GE(e.direct_fraction, 0.0);
    EXPECT_LE(e.direct_fraction, 1.0);
}

TEST(SimulateCell, SingleDropFallsBackToPerUeError) {
    NetworkConfig cfg;
    const auto e = simulate_cell(cfg, small_options(1, 5, 30));
    EXPECT_GT(e.rate.std_error, 0.0);
    EXPECT_TRUE(std::isfinite(e.rate.std_error));
}

TEST(SimulateCell, AllDirectCellMatchesAnalyticAverage) {
    NetworkConfig cfg;
    cfg.geometry.ring_inner = cfg.geometry.cell_radius;
    cfg.geometry.ring_outer = cfg.geometry.cell_radius;
    const analytic::Model model(cfg);
    const double l = cfg.geometry.cell_radius;
    const auto exact = mathkit::integrate_interval(
        [&](double d) { return 2 * d / (l * l) * model.rate_direct(floor_distance(d)); }, 0.0, l, 1e-10);
    const auto e = simulate_cell(cfg, small_options(400, 20, 50));
    EXPECT_EQ(e.direct_fraction, 1.0);
    EXPECT_LT(std::abs(e.rate.mean - exact.value), 2 * e.rate.std_error)
        << e.rate.mean << " vs " << exact.value << " se " << e.rate.std_error;
}

TEST(SimulateCell, FixedDropConvergesToConditionalMeans) {
    NetworkConfig cfg;
    const analytic::Model model(cfg);
    const auto real = drop(cfg.geometry, 8, 0, 15);
    const auto samples = simulate_drop(cfg, real, IrsMode::active, 5000, 8, 0);
    double worst = 0.0, drop_mean = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        drop_mean += samples[k].mean_rate / samples.size();
        if (real.association[k]) continue;
        const double d = floor_distance(real.ue_positions[k].radius());
        worst = std::max(worst, rel(samples[k].mean_rate, model.rate_direct(d)));
    }
    EXPECT_LT(worst, 0.02);
    const double cell = model.average_metric(analytic::Metric::rate()).value;
    // one drop is a biased sample of the spatial average; only the gap is recorded
    RecordProperty("fixed_drop_relative_gap", std::to_string(rel(drop_mean, cell)));
}

TEST(SimulateCell, StandardErrorShrinksWithDrops) {
    NetworkConfig cfg;
    const auto a = simulate_cell(cfg, small_options(400, 4, 20));
    const auto b = simulate_cell(cfg, small_options(800, 4, 20));
    const double ratio = (b.rate.std_error * b.rate.std_error) / (a.rate.std_error * a.rate.std_error);
    EXPECT_GT(ratio, 0.4);
    EXPECT_LT(ratio, 0.6);
}

TEST(SimulateCell, RejectsBadOptions) {
    NetworkConfig cfg;
    EXPECT_THROW(simulate_cell(cfg, small_options(0)), ConfigError);
    EXPECT_THROW(simulate_cell(cfg, small_options(1, 0)), ConfigError);
}

TEST(SweepDensity, SingleIrsRowIsPlainCell) {
    NetworkConfig cfg;
    const auto o = small_options(10, 4, 10);
    const auto rows = sweep_density(cfg, o, 512, {1, 8});
    ASSERT_EQ(rows.size(), 2u);
    NetworkConfig one = cfg;
    one.geometry.irs_count = 1;
    one.geometry.elements_per_irs = 512;
    const auto direct = simulate_cell(one, o);
    EXPECT_EQ(rows[0].estimate.rate.mean, direct.rate.mean);
    EXPECT_EQ(rows[0].estimate.mean_snr.mean, direct.mean_snr.mean);
    EXPECT_EQ(rows[1].elements_per_irs, 64);
    EXPECT_DOUBLE_EQ(rows[1].p_f_per_irs, cfg.power.p_f / 8);
    const auto per_irs = sweep_density(cfg, o, 512, {8}, PowerBudget::per_irs);
    EXPECT_DOUBLE_EQ(per_irs[0].p_f_per_irs, cfg.power.p_f);
}

TEST(SweepDensity, NonDivisorListsValidChoices) {
    try {
        sweep_density(NetworkConfig{}, small_options(1, 1, 1), 12, {5});
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("1, 2, 3, 4, 6, 12"), std::string::npos) << e.what();
    }
}

TEST(LinkPhysical, ThreadIndependentAndReproducible) {
    NetworkConfig cfg;
    const auto a = link_physical_snr(cfg, 100, 30, IrsMode::active, 40000, 3, 1);
    const auto b = link_physical_snr(cfg, 100, 30, IrsMode::active, 40000, 3, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
}

TEST(LinkPhysical, PassiveMeanMatchesCoherentForm) {
    NetworkConfig cfg;
    cfg.geometry.elements_per_irs = 32;
    const analytic::Model model(cfg);
    const auto e = link_physical_snr(cfg, 100, 30, IrsMode::passive, 200000, 4);
    // exact: N^2 (pi/4)^2 + N (1 - (pi/4)^2) for unit-mean Rayleigh amplitudes
    const double q = std::numbers::pi / 4;
    const double n = 32;
    const double zeta = 1e-3 * std::pow(100.0, -3) * 1e-3 * std::pow(30.0, -3);
    const double exact = (n * n * q * q + n * (1 - q * q)) * zeta * cfg.power.p_t / cfg.power.sigma2;
    EXPECT_LT(std::abs(e.mean - exact), 3 * e.std_error);
    RecordProperty("passive_model_over_mc", std::to_string(model.mean_snr_passive(100, 30) / e.mean));
}

TEST(ModelConsistent, ImportanceAndPlainSamplersAgree) {
    const analytic::Model model{NetworkConfig{}};
    const auto is = model_consistent_snr(model, 100, 30, 400000, 6, true);
    const auto plain = model_consistent_snr(model, 100, 30, 400000, 6, false);
    const double se = std::hypot(is.snr.std_error, plain.snr.std_error);
    EXPECT_LT(std::abs(is.snr.mean - plain.snr.mean), 3 * se);
    EXPECT_LT(is.snr.std_error, plain.snr.std_error);
    EXPECT_LT(std::abs(is.snr.mean - model.mean_snr(100, 30)), 3 * is.snr.std_error);
}
