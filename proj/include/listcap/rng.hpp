// Copyright 2026 The listcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>

namespace listcap {

/// 64-bit avalanche finalizer (Murmur3 variant).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

/// Counter-based generator: the value is a pure function of
/// (seed, a, b), so draws are reproducible independent of evaluation
/// order or thread count.
constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a,
                                     std::uint64_t b) noexcept {
    constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h ^ (a * kGolden + 1));
    h = mix64(h ^ (b * kGolden + 2));
    return h;
}

/// Maps a hash to a uniform double in [0, 1).
constexpr double unit_double(std::uint64_t h) noexcept {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Uniform double in [0, 1) keyed by (seed, a, b).
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) noexcept {
    return unit_double(counter_hash(seed, a, b));
}

/// Inverse-CDF sample: smallest index k with u < probs[0] + ... + probs[k].
/// Falls back to the last index when rounding pushes the cumulative sum
/// below u.
inline std::size_t sample_index(std::span<const double> probs, double u) noexcept {
    double cum = 0.0;
    for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
        cum += probs[k];
        if (u < cum) {
            return k;
        }
    }
    return probs.empty() ? 0 : probs.size() - 1;
}

} // namespace listcap
