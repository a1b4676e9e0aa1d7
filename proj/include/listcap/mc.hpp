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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/code.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/errors.hpp"
#include "listcap/rng.hpp"
#include "listcap/words.hpp"

namespace listcap {

/// Random encoder with i.i.d. letters drawn from p. The letter at
/// (message, position) is a pure function of (seed, message, position), so
/// identical inputs give identical encoders on any platform or schedule.
inline Encoder random_code(const ProbDist &p, std::size_t n,
                           std::size_t num_messages, std::uint64_t seed) {
    if (num_messages == 0) {
        throw InvalidArgumentError("need at least one message");
    }
    std::vector<std::vector<std::size_t>> table(num_messages);
    for (std::size_t i = 0; i < num_messages; ++i) {
        table[i].resize(n);
        for (std::size_t t = 0; t < n; ++t) {
            table[i][t] = sample_index(
                p.values(),
                counter_uniform(seed, static_cast<std::uint64_t>(i),
                                static_cast<std::uint64_t>(t)));
        }
    }
    return Encoder(n, p.size(), std::move(table));
}

/// Monte-Carlo estimate with its binomial standard error.
struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

namespace detail {

/// Uniform index in [0, count) from a unit double.
inline std::size_t uniform_index(double u, std::size_t count) {
    const auto idx = static_cast<std::size_t>(u * static_cast<double>(count));
    return idx < count ? idx : count - 1;
}

} // namespace detail

/// Estimates the list-decoding error probability of an encoder under the
/// maximum-likelihood list decoder, without materializing the decoder.
///
/// Each trial draws a uniform message, samples the channel output letter by
/// letter, and scores a success when the message ranks among the top
/// list_size likelihoods (ties toward smaller ids). Trials are independent
/// functions of (seed, trial), so the estimate is schedule-independent.
inline McEstimate mc_error_probability(const Encoder &encoder,
                                       const Channel &w,
                                       std::size_t list_size,
                                       std::size_t trials,
                                       std::uint64_t seed) {
    if (!w.classical()) {
        throw VariantMismatchError(
            "Monte-Carlo estimation needs a classical channel");
    }
    if (encoder.alphabet() > w.input_count()) {
        throw DimensionMismatchError(
            "encoder uses letters beyond the channel inputs");
    }
    const std::size_t n_messages = encoder.num_messages();
    if (list_size == 0 || list_size > n_messages) {
        throw InvalidArgumentError("need 1 <= list size <= message count");
    }
    if (trials < 100) {
        throw InvalidArgumentError("need at least 100 trials");
    }

    const std::size_t n = encoder.n();
    std::vector<std::size_t> y(n);
    std::uint64_t errors = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto tr = static_cast<std::uint64_t>(trial);
        const std::size_t sent =
            detail::uniform_index(counter_uniform(seed, tr, 0), n_messages);
        const auto &sent_word = encoder.word(sent);
        for (std::size_t t = 0; t < n; ++t) {
            y[t] = sample_index(
                w.crow(sent_word[t]).values(),
                counter_uniform(seed, tr, static_cast<std::uint64_t>(t) + 1));
        }
        const double sent_lik = detail::word_likelihood(w, sent_word, y);
        // The message is listed iff fewer than list_size competitors rank
        // strictly ahead under (likelihood desc, id asc).
        std::size_t ahead = 0;
        for (std::size_t j = 0; j < n_messages; ++j) {
            const double lik = detail::word_likelihood(w, encoder.word(j), y);
            if (lik > sent_lik || (lik == sent_lik && j < sent)) {
                ++ahead;
            }
        }
        if (ahead >= list_size) {
            ++errors;
        }
    }
    const double estimate =
        static_cast<double>(errors) / static_cast<double>(trials);
    const double std_error = std::sqrt(estimate * (1.0 - estimate) /
                                       static_cast<double>(trials));
    return McEstimate{estimate, std_error};
}

/// Derandomization experiment: single-guess decoding by a uniform pick
/// from the decoded list.
struct Derandomized {
    double empirical_success = 0.0;
    double predicted = 0.0; ///< (1 - P_e) / L exactly
};

/// Simulates turning a list code into a conventional code by guessing a
/// uniform element of the decoded list. The empirical single-guess success
/// rate is an unbiased estimator of (1 - P_e) / L.
inline Derandomized derandomize(const ListCode &code, const Channel &w,
                                std::size_t trials, std::uint64_t seed) {
    if (!code.classical() || !w.classical()) {
        throw VariantMismatchError(
            "derandomization needs a classical code and channel");
    }
    if (trials == 0) {
        throw InvalidArgumentError("need at least one trial");
    }
    const CodeMetrics metrics = error_probability(code, w);
    const auto &dec = std::get<ClassicalListDecoder>(code.decoder());
    const std::size_t n = code.n();
    const std::size_t n_messages = code.num_messages();
    const std::size_t list_size = code.list_size();

    std::vector<std::size_t> y(n);
    std::uint64_t successes = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto tr = static_cast<std::uint64_t>(trial);
        const std::size_t sent =
            detail::uniform_index(counter_uniform(seed, tr, 0), n_messages);
        const auto &sent_word = code.encoder().word(sent);
        for (std::size_t t = 0; t < n; ++t) {
            y[t] = sample_index(
                w.crow(sent_word[t]).values(),
                counter_uniform(seed, tr, static_cast<std::uint64_t>(t) + 1));
        }
        const auto yi = static_cast<std::size_t>(
            word_index(y, w.output_dim()));
        const auto &listed = dec.list_for(yi);
        const std::size_t pick = detail::uniform_index(
            counter_uniform(seed, tr, static_cast<std::uint64_t>(n) + 1),
            list_size);
        if (listed[pick] == sent) {
            ++successes;
        }
    }
    return Derandomized{static_cast<double>(successes) /
                            static_cast<double>(trials),
                        metrics.success / static_cast<double>(list_size)};
}

} // namespace listcap
