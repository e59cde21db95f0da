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

#include "irsnet/simulate.hpp"

#include "irsnet/channel.hpp"
#include "irsnet/errors.hpp"
#include "irsnet/rng.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace irsnet::simulate {

namespace {

constexpr long kChunkDraws = 16384;

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    pool.reserve(std::min(workers, count));
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    long n = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    void merge(const Moments& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }
    double mean() const { return n > 0 ? sum / n : 0.0; }
    double std_error() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
        return std::sqrt(var / n);
    }
};

SimEstimate make_estimate(const Moments& m, long n_drops, long n_fading, std::uint64_t seed) {
    return {m.mean(), m.std_error(), n_drops, n_fading, seed};
}

Point random_point(double r_lo, double r_hi, RandomStream& rng) {
    const double u = rng.uniform();
    const double r = std::sqrt(r_lo * r_lo + u * (r_hi * r_hi - r_lo * r_lo));
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

double Point::radius() const { return std::hypot(x, y); }
double Point::distance(const Point& other) const { return std::hypot(x - other.x, y - other.y); }

NetworkRealization drop(const GeometryConfig& geometry, std::uint64_t seed, std::uint32_t drop_index, int ue_count) {
    geometry.validate(false);
    if (ue_count < 1) throw ConfigError("drop: need at least one UE");
    NetworkRealization real;
    real.irs_positions.reserve(geometry.irs_count);
    for (int i = 0; i < geometry.irs_count; ++i) {
        auto rng = make_stream(seed, StreamDomain::irs_placement, drop_index, static_cast<std::uint32_t>(i));
        real.irs_positions.push_back(random_point(geometry.ring_inner, geometry.ring_outer, rng));
    }
    real.ue_positions.reserve(ue_count);
    for (int k = 0; k < ue_count; ++k) {
        auto rng = make_stream(seed, StreamDomain::ue_placement, drop_index, static_cast<std::uint32_t>(k));
        real.ue_positions.push_back(random_point(0.0, geometry.cell_radius, rng));
    }
    real.association.assign(ue_count, std::nullopt);
    for (int k = 0; k < ue_count; ++k) {
        const auto& ue = real.ue_positions[k];
        if (ue.radius() < geometry.ring_inner) continue;
        std::size_t best = 0;
        double best_d = ue.distance(real.irs_positions[0]);
        for (std::size_t i = 1; i < real.irs_positions.size(); ++i) {
            const double d = ue.distance(real.irs_positions[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        real.association[k] = best;
    }
    return real;
}

NetworkRealization associate(NetworkRealization real, AssociationPolicy policy, const analytic::Model& model) {
    if (real.irs_positions.empty()) throw ConfigError("associate: need at least one IRS");
    const double l_in = model.config().geometry.ring_inner;
    real.association.assign(real.ue_positions.size(), std::nullopt);
    for (std::size_t k = 0; k < real.ue_positions.size(); ++k) {
        const auto& ue = real.ue_positions[k];
        if (ue.radius() < l_in) continue;
        std::size_t best = 0;
        double best_score = 0.0;
        for (std::size_t i = 0; i < real.irs_positions.size(); ++i) {
            const auto& irs = real.irs_positions[i];
            const double score = policy == AssociationPolicy::nearest
                                     ? -ue.distance(irs)
                                     : model.mean_snr(irs.radius(), ue.distance(irs));
            if (i == 0 || score > best_score) {
                best_score = score;
                best = i;
            }
        }
        real.association[k] = best;
    }
    return real;
}

std::vector<UeSample> simulate_drop(const NetworkConfig& cfg, const NetworkRealization& real, IrsMode mode,
                                    int n_fading, std::uint64_t seed, std::uint32_t drop_index) {
    if (n_fading < 1) throw ConfigError("simulate_drop: n_fading must be >= 1");
    const auto& ch = cfg.channel;
    const int n_el = cfg.geometry.elements_per_irs;
    const auto zeta = [&](double d) { return ch.epsilon * std::pow(floor_distance(d), -ch.alpha); };

    std::vector<UeSample> out(real.ue_positions.size());
    for (std::size_t k = 0; k < real.ue_positions.size(); ++k) {
        const auto& ue = real.ue_positions[k];
        const auto& tag = real.association.at(k);
        double z_bu = 0.0, z_bi = 0.0, z_iu = 0.0;
        if (tag) {
            const auto& irs = real.irs_positions.at(*tag);
            z_bi = zeta(irs.radius());
            z_iu = zeta(ue.distance(irs));
        } else {
            z_bu = zeta(ue.radius());
        }
        double snr_sum = 0.0;
        double rate_sum = 0.0;
        for (int f = 0; f < n_fading; ++f) {
            auto rng = make_stream(seed, StreamDomain::fading, drop_index, static_cast<std::uint32_t>(k),
                                   static_cast<std::uint32_t>(f));
            double snr;
            if (!tag) {
                std::gamma_distribution<double> g(ch.m_bu, 1.0 / ch.m_bu);
                snr = cfg.power.p_t * z_bu * g(rng) / cfg.power.sigma2;
            } else {
                const auto sums = channel::sample_cascade_sums(ch.m_bi, ch.m_iu, n_el, rng);
                snr = mode == IrsMode::active ? channel::snr_active(sums, z_bi, z_iu, cfg.power)
                                              : channel::snr_passive(sums, z_bi, z_iu, cfg.power);
            }
            snr_sum += snr;
            rate_sum += std::log2(1.0 + snr);
        }
        out[k] = {snr_sum / n_fading, rate_sum / n_fading};
    }
    return out;
}

CellEstimate simulate_cell(const NetworkConfig& cfg, const SimOptions& options) {
    cfg.validate(false);
    if (options.n_drops < 1) throw ConfigError("simulate_cell: n_drops must be >= 1");
    if (options.n_fading < 1) throw ConfigError("simulate_cell: n_fading must be >= 1");

    std::optional<analytic::Model> model;
    if (options.policy == AssociationPolicy::best_irs) model.emplace(cfg);

    struct DropResult {
        Moments snr;
        Moments rate;
        long direct = 0;
    };
    std::vector<DropResult> drops(options.n_drops);
    parallel_for(drops.size(), options.threads, [&](std::size_t d) {
        const auto index = static_cast<std::uint32_t>(d);
        auto real = drop(cfg.geometry, options.seed, index, options.ues_per_drop);
        if (model) real = associate(std::move(real), options.policy, *model);
        const auto samples = simulate_drop(cfg, real, options.mode, options.n_fading, options.seed, index);
        DropResult r;
        for (std::size_t k = 0; k < samples.size(); ++k) {
            r.snr.add(samples[k].mean_snr);
            r.rate.add(samples[k].mean_rate);
            if (!real.association[k]) ++r.direct;
        }
        drops[d] = r;
    });

    Moments snr, rate, per_ue_snr, per_ue_rate;
    long direct = 0;
    for (const auto& r : drops) {
        snr.add(r.snr.mean());
        rate.add(r.rate.mean());
        per_ue_snr.merge(r.snr);
        per_ue_rate.merge(r.rate);
        direct += r.direct;
    }
    const long nd = options.n_drops;
    CellEstimate out;
    out.mean_snr = make_estimate(nd > 1 ? snr : per_ue_snr, nd, options.n_fading, options.seed);
    out.rate = make_estimate(nd > 1 ? rate : per_ue_rate, nd, options.n_fading, options.seed);
    out.mean_snr.mean = snr.mean();
    out.rate.mean = rate.mean();
    const double area = cfg.geometry.area_total();
    out.spatial_throughput = out.rate;
    out.spatial_throughput.mean /= area;
    out.spatial_throughput.std_error /= area;
    out.direct_fraction = static_cast<double>(direct) / (static_cast<double>(nd) * options.ues_per_drop);
    return out;
}

std::vector<DensityRow> sweep_density(const NetworkConfig& cfg, const SimOptions& options, int n_total_elements,
                                      const std::vector<int>& m_values, PowerBudget budget) {
    if (n_total_elements < 1) throw ConfigError("sweep_density: total element count must be >= 1");
    for (int m : m_values)
        if (m < 1 || n_total_elements % m != 0)
            throw ConfigError(fmt::format("sweep_density: M={} does not divide N_total={}; valid values: {}", m,
                                          n_total_elements, fmt::join(divisors(n_total_elements), ", ")));
    std::vector<DensityRow> rows;
    rows.reserve(m_values.size());
    for (int m : m_values) {
        NetworkConfig point = cfg;
        point.geometry.irs_count = m;
        point.geometry.elements_per_irs = n_total_elements / m;
        if (budget == PowerBudget::split) point.power.p_f = cfg.power.p_f / m;
        rows.push_back({m, point.geometry.elements_per_irs, point.power.p_f, simulate_cell(point, options)});
    }
    return rows;
}

SimEstimate link_physical_snr(const NetworkConfig& cfg, double d_bi, double d_iu, IrsMode mode, long n_draws,
                              std::uint64_t seed, int threads) {
    if (n_draws < 1) throw ConfigError("link_physical_snr: n_draws must be >= 1");
    const auto& ch = cfg.channel;
    const double z_bi = ch.epsilon * std::pow(floor_distance(d_bi), -ch.alpha);
    const double z_iu = ch.epsilon * std::pow(floor_distance(d_iu), -ch.alpha);
    const long chunks = (n_draws + kChunkDraws - 1) / kChunkDraws;
    std::vector<Moments> parts(chunks);
    parallel_for(parts.size(), threads, [&](std::size_t c) {
        auto rng = make_stream(seed, StreamDomain::model_sampling, static_cast<std::uint32_t>(c), 1);
        const long begin = static_cast<long>(c) * kChunkDraws;
        const long end = std::min(n_draws, begin + kChunkDraws);
        Moments m;
        for (long i = begin; i < end; ++i) {
            const auto sums = channel::sample_cascade_sums(ch.m_bi, ch.m_iu, cfg.geometry.elements_per_irs, rng);
            m.add(mode == IrsMode::active ? channel::snr_active(sums, z_bi, z_iu, cfg.power)
                                          : channel::snr_passive(sums, z_bi, z_iu, cfg.power));
        }
        parts[c] = m;
    });
    Moments total;
    for (const auto& p : parts) total.merge(p);
    return make_estimate(total, n_draws, 1, seed);
}

ModelEstimate model_consistent_snr(const analytic::Model& model, double d_bi, double d_iu, long n_draws,
                                   std::uint64_t seed, bool importance, int threads) {
    if (n_draws < 1) throw ConfigError("model_consistent_snr: n_draws must be >= 1");
    const auto& cfg = model.config();
    const auto mix = model.cascaded_distribution(d_bi, d_iu);
    const double m = cfg.channel.m_iu;
    const double sigma2 = cfg.power.sigma2;
    const double noise = model.mean_amp_sq(d_bi) * cfg.geometry.elements_per_irs * model.noise_scale(d_iu);
    const double s = sigma2 / noise;
    const double log_norm = std::log1p(1.0 / s);
    const double log_p_head = m * std::log(m) - mathkit::ln_gamma(m);

    const long chunks = (n_draws + kChunkDraws - 1) / kChunkDraws;
    struct Part {
        Moments snr, snr2, rate;
    };
    std::vector<Part> parts(chunks);
    parallel_for(parts.size(), threads, [&](std::size_t c) {
        auto rng = make_stream(seed, StreamDomain::model_sampling, static_cast<std::uint32_t>(c), 0);
        std::gamma_distribution<double> gamma(m, 1.0 / m);
        const long begin = static_cast<long>(c) * kChunkDraws;
        const long end = std::min(n_draws, begin + kChunkDraws);
        Part p;
        for (long i = begin; i < end; ++i) {
            const double x = mix.sample(rng);
            double h;
            double w = 1.0;
            if (importance) {
                if (rng.uniform() < 0.5) {
                    h = gamma(rng);
                } else {
                    h = s * std::expm1(rng.uniform() * log_norm);
                }
                const double ph = std::exp(log_p_head + (m - 1.0) * std::log(h) - m * h);
                const double rh = h <= 1.0 ? 1.0 / ((h + s) * log_norm) : 0.0;
                w = ph / (0.5 * ph + 0.5 * rh);
            } else {
                h = gamma(rng);
            }
            const double snr = cfg.power.p_t * x / (noise * h + sigma2);
            p.snr.add(w * snr);
            p.snr2.add(w * snr * snr);
            p.rate.add(w * std::log2(1.0 + snr));
        }
        parts[c] = p;
    });
    Part total;
    for (const auto& p : parts) {
        total.snr.merge(p.snr);
        total.snr2.merge(p.snr2);
        total.rate.merge(p.rate);
    }
    return {make_estimate(total.snr, n_draws, 1, seed), make_estimate(total.snr2, n_draws, 1, seed),
            make_estimate(total.rate, n_draws, 1, seed)};
}

} // namespace irsnet::simulate
