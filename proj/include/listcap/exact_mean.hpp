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

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>

#include "listcap/errors.hpp"

namespace listcap {

/// Exact fixed-point accumulator for doubles.
///
/// Sums are held as exact multi-limb integers scaled by 2^kOffsetBits, so
/// the accumulated value is the exact real sum of the inputs regardless of
/// insertion order. `mean(count)` returns the correctly rounded double of
/// (exact sum) / count. Two consequences the code elsewhere relies on:
///   - the result is independent of summation order, and
///   - mean of each value replicated L times with divisor L*count is
///     bit-identical to mean with divisor count (same real quotient).
class ExactMeanAccumulator {
  public:
    void add(double v) {
        if (v == 0.0) {
            return;
        }
        auto &limbs = std::signbit(v) ? neg_ : pos_;
        int e2 = 0;
        const double f = std::frexp(std::fabs(v), &e2);
        const auto mant = static_cast<std::uint64_t>(std::ldexp(f, 53));
        const int bitpos = e2 - 53 + kOffsetBits;
        const auto limb = static_cast<std::size_t>(bitpos >> 6);
        const int off = bitpos & 63;
        add_word(limbs, mant << off, limb);
        if (off != 0) {
            add_word(limbs, mant >> (64 - off), limb + 1);
        }
    }

    void add(std::span<const double> values) {
        for (double v : values) {
            add(v);
        }
    }

    /// Correctly rounded double of (exact accumulated sum) / count.
    double mean(std::uint64_t count) const {
        if (count == 0) {
            throw InvalidArgumentError("exact mean: divisor must be positive");
        }
        // Signed difference of the two magnitude accumulators.
        std::array<std::uint64_t, kLimbs> diff{};
        int cmp = 0;
        for (std::size_t i = kLimbs; i-- > 0;) {
            if (pos_[i] != neg_[i]) {
                cmp = pos_[i] > neg_[i] ? 1 : -1;
                break;
            }
        }
        if (cmp == 0) {
            return 0.0;
        }
        const auto &big = cmp > 0 ? pos_ : neg_;
        const auto &small = cmp > 0 ? neg_ : pos_;
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < kLimbs; ++i) {
            const unsigned __int128 lhs = big[i];
            const unsigned __int128 rhs =
                static_cast<unsigned __int128>(small[i]) + borrow;
            diff[i] = static_cast<std::uint64_t>(lhs - rhs);
            borrow = lhs < rhs ? 1 : 0;
        }

        // Long division of (diff << 128) by count. The extra shift keeps the
        // quotient wide enough that the 53-bit extraction below never runs
        // out of bits.
        std::array<std::uint64_t, kQuotLimbs> quot{};
        unsigned __int128 rem = 0;
        for (std::size_t i = kQuotLimbs; i-- > 0;) {
            const std::uint64_t numer = i >= 2 ? diff[i - 2] : 0;
            const unsigned __int128 cur = (rem << 64) | numer;
            quot[i] = static_cast<std::uint64_t>(cur / count);
            rem = cur % count;
        }
        const bool rem_nonzero = rem != 0;

        const int top = top_bit(quot);
        if (top < 0) {
            return 0.0;
        }
        const int value_exp = top - kShiftTotal; // value in [2^e, 2^{e+1})
        // Lowest kept bit: 53-bit window for normal results, anchored at the
        // subnormal ulp (2^-1074) otherwise so underflow rounds correctly.
        const int low =
            value_exp >= -1022 ? top - 52 : -1074 + kShiftTotal;
        std::uint64_t mant = get_bits(quot, low, top - low + 1);
        const bool guard = low > 0 && bit_set(quot, low - 1);
        const bool sticky = rem_nonzero || any_bits_below(quot, low - 1);
        if (guard && (sticky || (mant & 1))) {
            mant += 1;
        }
        const double magnitude =
            std::ldexp(static_cast<double>(mant), low - kShiftTotal);
        return cmp > 0 ? magnitude : -magnitude;
    }

  private:
    static constexpr int kOffsetBits = 1152; // fixed-point scale 2^1152
    // 36 limbs cover bit 2175 (the top bit of DBL_MAX at this scale) plus
    // 64 bits of carry headroom, so no finite sum can drop a carry.
    static constexpr std::size_t kLimbs = 36;
    static constexpr std::size_t kQuotLimbs = kLimbs + 2;
    static constexpr int kShiftTotal = kOffsetBits + 128;

    static void add_word(std::array<std::uint64_t, kLimbs> &limbs,
                         std::uint64_t word, std::size_t idx) {
        while (word != 0 && idx < kLimbs) {
            const unsigned __int128 acc =
                static_cast<unsigned __int128>(limbs[idx]) + word;
            limbs[idx] = static_cast<std::uint64_t>(acc);
            word = static_cast<std::uint64_t>(acc >> 64);
            ++idx;
        }
    }

    static int top_bit(const std::array<std::uint64_t, kQuotLimbs> &a) {
        for (std::size_t i = kQuotLimbs; i-- > 0;) {
            if (a[i] != 0) {
                return static_cast<int>(i) * 64 + 63 - std::countl_zero(a[i]);
            }
        }
        return -1;
    }

    static bool bit_set(const std::array<std::uint64_t, kQuotLimbs> &a,
                        int bit) {
        if (bit < 0) {
            return false;
        }
        return (a[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1U;
    }

    /// Bits [low, low + count) as an integer; count <= 53.
    static std::uint64_t get_bits(const std::array<std::uint64_t, kQuotLimbs> &a,
                                  int low, int count) {
        std::uint64_t out = 0;
        for (int k = count - 1; k >= 0; --k) {
            out = (out << 1) | (bit_set(a, low + k) ? 1U : 0U);
        }
        return out;
    }

    static bool any_bits_below(const std::array<std::uint64_t, kQuotLimbs> &a,
                               int bit) {
        for (int k = 0; k < bit; ++k) {
            if (bit_set(a, k)) {
                return true;
            }
        }
        return false;
    }

    std::array<std::uint64_t, kLimbs> pos_{};
    std::array<std::uint64_t, kLimbs> neg_{};
};

/// Correctly rounded mean of `values` with an explicit divisor.
inline double exact_mean(std::span<const double> values,
                         std::uint64_t divisor) {
    ExactMeanAccumulator acc;
    acc.add(values);
    return acc.mean(divisor);
}

/// Correctly rounded mean of `values`.
inline double exact_mean(std::span<const double> values) {
    return exact_mean(values, values.size());
}

} // namespace listcap
