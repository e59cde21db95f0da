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

#ifndef IRSNET_RNG_HPP
#define IRSNET_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace irsnet {

/// Philox4x32-10 counter-based generator.
///
/// A stream is addressed by (seed, domain, a, b, c): the seed and domain form
/// the 64-bit key, (a, b, c) occupy three counter words and the fourth counts
/// blocks inside the stream. Streams with different addresses never overlap,
/// so work can be partitioned over threads without changing any draw.
class RandomStream {
public:
    using result_type = std::uint64_t;

    RandomStream(std::uint64_t seed, std::uint32_t domain, std::uint32_t a = 0, std::uint32_t b = 0,
                 std::uint32_t c = 0) noexcept
        : key_(derive_key(seed, domain)), counter_{0, a, b, c} {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        if (cursor_ == 2) refill();
        const auto hi = static_cast<std::uint64_t>(block_[2 * cursor_]);
        const auto lo = static_cast<std::uint64_t>(block_[2 * cursor_ + 1]);
        ++cursor_;
        return (hi << 32) | lo;
    }

    /// Uniform double in the open interval (0, 1).
    double uniform() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block philox(Block ctr, Key key) noexcept {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }

private:
    static Key derive_key(std::uint64_t seed, std::uint32_t domain) noexcept {
        // splitmix64 finalizer over seed and domain
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(domain) + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return {static_cast<std::uint32_t>(z), static_cast<std::uint32_t>(z >> 32)};
    }

    void refill() noexcept {
        block_ = philox(counter_, key_);
        ++counter_[0];
        cursor_ = 0;
    }

    Key key_;
    Block counter_;
    Block block_{};
    int cursor_ = 2;
};

/// Stream domains keep the draws of different simulation stages disjoint.
enum class StreamDomain : std::uint32_t {
    irs_placement = 1,
    ue_placement = 2,
    fading = 3,
    model_sampling = 4,
    test = 99,
};

inline RandomStream make_stream(std::uint64_t seed, StreamDomain domain, std::uint32_t a = 0, std::uint32_t b = 0,
                                std::uint32_t c = 0) noexcept {
    return RandomStream(seed, static_cast<std::uint32_t>(domain), a, b, c);
}

} // namespace irsnet

#endif
