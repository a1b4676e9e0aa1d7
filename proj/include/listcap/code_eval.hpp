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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/code.hpp"
#include "listcap/errors.hpp"
#include "listcap/exact_mean.hpp"
#include "listcap/words.hpp"

namespace listcap {

namespace detail {

/// Likelihood of receiving output word y under input word x, as the plain
/// left-to-right product of per-letter probabilities. The multiplication
/// order is part of the contract: code evaluations that must agree
/// bit-for-bit (base code vs lift) rely on it.
inline double word_likelihood(const Channel &w,
                              std::span<const std::size_t> x,
                              std::span<const std::size_t> y) {
    double prod = 1.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        prod *= w.crow(x[t])[y[t]];
    }
    return prod;
}

/// Tensor-product output state of an input word, as a raw matrix.
inline Eigen::MatrixXcd word_state(const Channel &w,
                                   std::span<const std::size_t> x) {
    Eigen::MatrixXcd acc = w.qrow(x[0]).matrix();
    for (std::size_t t = 1; t < x.size(); ++t) {
        acc = kron(acc, w.qrow(x[t]).matrix());
    }
    return acc;
}

inline void check_code_channel(const ListCode &code, const Channel &w) {
    if (code.classical() != w.classical()) {
        throw VariantMismatchError(
            "decoder kind does not match the channel kind");
    }
    if (code.encoder().alphabet() > w.input_count()) {
        throw DimensionMismatchError(
            "encoder uses letters beyond the channel inputs");
    }
}

} // namespace detail

/// Per-message success probabilities of a list code: entry i is the chance
/// that message i appears in the decoded list. The summation order per
/// message (ascending output word; element order for POVMs) is fixed so
/// that lifted codes reproduce base values bit-for-bit.
inline std::vector<double>
per_message_success(const ListCode &code, const Channel &w,
                    std::uint64_t max_cells = kDefaultExtendBudget) {
    detail::check_code_channel(code, w);
    const std::size_t n = code.n();
    const std::size_t n_messages = code.num_messages();
    std::vector<double> success(n_messages, 0.0);

    if (code.classical()) {
        const auto &dec = std::get<ClassicalListDecoder>(code.decoder());
        const std::uint64_t outputs = word_count(w.output_dim(), n);
        if (outputs > max_cells) {
            throw BudgetExceededError(
                "output word space exceeds the cell budget");
        }
        if (dec.num_words() != outputs) {
            throw DimensionMismatchError(
                "decoder map does not cover the output word space");
        }
        std::vector<std::size_t> y(n, 0);
        for (std::uint64_t yi = 0; yi < outputs; ++yi) {
            for (std::size_t id : dec.list_for(static_cast<std::size_t>(yi))) {
                success[id] +=
                    detail::word_likelihood(w, code.encoder().word(id), y);
            }
            // Odometer step, last letter least significant.
            for (std::size_t t = n; t-- > 0;) {
                if (++y[t] < w.output_dim()) {
                    break;
                }
                y[t] = 0;
            }
        }
        return success;
    }

    const auto &dec = std::get<QuantumListDecoder>(code.decoder());
    const std::uint64_t dim = word_count(w.output_dim(), n);
    if (dim > max_cells / dim) {
        throw BudgetExceededError("output dimension exceeds the cell budget");
    }
    if (static_cast<std::uint64_t>(dec.dim()) != dim) {
        throw DimensionMismatchError(
            "POVM dimension does not match the n-fold output space");
    }
    const auto idim = static_cast<Eigen::Index>(dim);
    for (std::size_t i = 0; i < n_messages; ++i) {
        Eigen::MatrixXcd aggregate = Eigen::MatrixXcd::Zero(idim, idim);
        for (const auto &e : dec.elements()) {
            if (std::binary_search(e.subset.begin(), e.subset.end(), i)) {
                aggregate += e.matrix;
            }
        }
        const Eigen::MatrixXcd rho =
            detail::word_state(w, code.encoder().word(i));
        success[i] = (rho * aggregate).trace().real();
    }
    return success;
}

/// Exact average error probability of a list code over a channel. The
/// average is the correctly rounded mean of the per-message successes, so
/// it depends only on their exact sum.
inline CodeMetrics
error_probability(const ListCode &code, const Channel &w,
                  std::uint64_t max_cells = kDefaultExtendBudget) {
    const std::vector<double> success = per_message_success(code, w, max_cells);
    const double avg = exact_mean(success);
    return CodeMetrics{1.0 - avg, avg};
}

/// Maximum-likelihood list decoder for an encoder over a classical channel:
/// each output word lists the L most likely messages, ties broken toward
/// the smaller id. No total list decoder of this size has lower error.
inline ListDecoder
make_list_decoder_ml(const Encoder &encoder, const Channel &w,
                     std::size_t list_size,
                     std::uint64_t max_cells = kDefaultExtendBudget) {
    if (!w.classical()) {
        throw VariantMismatchError(
            "maximum-likelihood construction needs a classical channel");
    }
    if (encoder.alphabet() > w.input_count()) {
        throw DimensionMismatchError(
            "encoder uses letters beyond the channel inputs");
    }
    const std::size_t n_messages = encoder.num_messages();
    if (list_size == 0 || list_size > n_messages) {
        throw InvalidArgumentError("need 1 <= list size <= message count");
    }
    const std::uint64_t outputs = word_count(w.output_dim(), encoder.n());
    if (outputs > max_cells) {
        throw BudgetExceededError("output word space exceeds the cell budget");
    }

    std::vector<std::vector<std::size_t>> map;
    map.reserve(static_cast<std::size_t>(outputs));
    std::vector<std::size_t> y(encoder.n(), 0);
    std::vector<double> lik(n_messages);
    std::vector<std::size_t> order(n_messages);
    for (std::uint64_t yi = 0; yi < outputs; ++yi) {
        for (std::size_t id = 0; id < n_messages; ++id) {
            lik[id] = detail::word_likelihood(w, encoder.word(id), y);
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::partial_sort(order.begin(), order.begin() + list_size,
                          order.end(),
                          [&lik](std::size_t a, std::size_t b) {
                              if (lik[a] != lik[b]) {
                                  return lik[a] > lik[b];
                              }
                              return a < b;
                          });
        std::vector<std::size_t> subset(order.begin(),
                                        order.begin() + list_size);
        std::sort(subset.begin(), subset.end());
        map.push_back(std::move(subset));
        for (std::size_t t = encoder.n(); t-- > 0;) {
            if (++y[t] < w.output_dim()) {
                break;
            }
            y[t] = 0;
        }
    }
    return ClassicalListDecoder(list_size, std::move(map));
}

/// Direct-part lift: from a conventional (list size 1) code, build an
/// L-list code with N*L messages by replicating each codeword L times and
/// assigning each base decision region to its contiguous block of ids.
/// The average error probability is preserved exactly.
inline ListCode lift_code(const ListCode &base, std::size_t list_size) {
    if (base.list_size() != 1) {
        throw InvalidArgumentError("lift needs a base code with list size 1");
    }
    if (list_size == 0) {
        throw InvalidArgumentError("list size must be at least 1");
    }
    if (list_size == 1) {
        return base;
    }
    const Encoder &enc = base.encoder();
    std::vector<std::vector<std::size_t>> table;
    table.reserve(enc.num_messages() * list_size);
    for (std::size_t j = 0; j < enc.num_messages(); ++j) {
        for (std::size_t k = 0; k < list_size; ++k) {
            table.push_back(enc.word(j));
        }
    }
    Encoder lifted_enc(enc.n(), enc.alphabet(), std::move(table));

    const auto block = [list_size](std::size_t j) {
        std::vector<std::size_t> ids(list_size);
        std::iota(ids.begin(), ids.end(), j * list_size);
        return ids;
    };
    if (const auto *c = std::get_if<ClassicalListDecoder>(&base.decoder())) {
        std::vector<std::vector<std::size_t>> map;
        map.reserve(c->num_words());
        for (const auto &subset : c->map()) {
            map.push_back(block(subset.front()));
        }
        return ListCode(std::move(lifted_enc),
                        ClassicalListDecoder(list_size, std::move(map)));
    }
    const auto &q = std::get<QuantumListDecoder>(base.decoder());
    std::vector<PovmElement> elements;
    elements.reserve(q.elements().size());
    for (const auto &e : q.elements()) {
        elements.push_back(PovmElement{block(e.subset.front()), e.matrix});
    }
    return ListCode(std::move(lifted_enc),
                    QuantumListDecoder(list_size, std::move(elements)));
}

} // namespace listcap
