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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "listcap/errors.hpp"

namespace listcap {

/// Number of length-n words over an alphabet of the given size, with an
/// overflow guard.
inline std::uint64_t word_count(std::size_t base, std::size_t n) {
    if (base == 0) {
        throw InvalidArgumentError("alphabet must be nonempty");
    }
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < n; ++t) {
        if (count > UINT64_MAX / base) {
            throw BudgetExceededError("word space does not fit in 64 bits");
        }
        count *= base;
    }
    return count;
}

/// Index of a word, first letter most significant.
inline std::uint64_t word_index(std::span<const std::size_t> word,
                                std::size_t base) {
    std::uint64_t idx = 0;
    for (std::size_t letter : word) {
        if (letter >= base) {
            throw InvalidArgumentError("letter outside alphabet");
        }
        idx = idx * base + letter;
    }
    return idx;
}

/// Inverse of word_index for length-n words.
inline std::vector<std::size_t> index_to_word(std::uint64_t idx,
                                              std::size_t base,
                                              std::size_t n) {
    std::vector<std::size_t> word(n);
    for (std::size_t t = n; t-- > 0;) {
        word[t] = static_cast<std::size_t>(idx % base);
        idx /= base;
    }
    if (idx != 0) {
        throw InvalidArgumentError("word index out of range");
    }
    return word;
}

} // namespace listcap
