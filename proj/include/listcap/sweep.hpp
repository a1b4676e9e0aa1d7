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
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "listcap/capacity.hpp"
#include "listcap/channel.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/errors.hpp"
#include "listcap/io.hpp"
#include "listcap/mc.hpp"
#include "listcap/renyi.hpp"
#include "listcap/rng.hpp"
#include "listcap/words.hpp"

namespace listcap {

/// Rate/blocklength experiment plan over one channel. List sizes follow
/// either the fixed value or, when growth_rho is set, L_n = ceil(e^{rho n}).
struct SweepConfig {
    std::vector<double> rates;              ///< nats per channel use
    std::vector<std::size_t> block_lengths; ///< n values
    std::size_t fixed_list_size = 1;
    std::optional<double> growth_rho;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
};

/// One evaluated sweep point. The rate column is recomputed from (n, N, L)
/// at emit time. Rows the cell budget rules out keep NaN estimates and a
/// "budget_exceeded" status.
struct SweepRow {
    std::size_t n = 0;
    std::uint64_t num_messages = 0;
    std::size_t list_size = 1;
    double rate = 0.0;
    double p_e = 0.0;
    double std_error = 0.0;
    double one_minus_pe = 0.0;
    double converse_rhs_min = 0.0;
    std::string status = "ok";
};

/// Scoring-operation ceiling under which exact enumeration replaces
/// Monte-Carlo estimation.
inline constexpr double kExactScoringLimit = 1e7;

inline void validate_sweep_config(const SweepConfig &config) {
    if (config.rates.empty() || config.block_lengths.empty()) {
        throw InvalidArgumentError("sweep needs rates and block lengths");
    }
    for (double r : config.rates) {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw InvalidArgumentError("rates must be positive and finite");
        }
    }
    for (std::size_t n : config.block_lengths) {
        if (n == 0) {
            throw InvalidArgumentError("block lengths must be >= 1");
        }
    }
    if (config.growth_rho && !(*config.growth_rho >= 0.0)) {
        throw InvalidArgumentError("list growth exponent must be >= 0");
    }
    if (!config.growth_rho && config.fixed_list_size == 0) {
        throw InvalidArgumentError("fixed list size must be >= 1");
    }
}

/// Runs the sweep: for each (rate, n), N = ceil(L e^{n rate}), a random
/// code is drawn from the capacity-achieving input, and its list-decoding
/// error is measured exactly when N |Y|^n stays within the scoring limit,
/// by Monte Carlo otherwise. The converse column is the upper bound on
/// 1 - P_e implied by the channel's exponent at sigma*.
inline std::vector<SweepRow> run_sweep(const Channel &w,
                                       const SweepConfig &config) {
    validate_sweep_config(config);
    if (!w.classical()) {
        throw VariantMismatchError("sweeps need a classical channel");
    }
    const CapacityResult cap = arimoto_blahut(w);

    std::vector<SweepRow> rows;
    std::uint64_t point = 0;
    for (std::size_t ri = 0; ri < config.rates.size(); ++ri) {
        const double rate = config.rates[ri];
        for (std::size_t n : config.block_lengths) {
            const std::size_t list_size =
                config.growth_rho
                    ? static_cast<std::size_t>(std::ceil(
                          std::exp(*config.growth_rho *
                                   static_cast<double>(n))))
                    : config.fixed_list_size;
            const auto num_messages = static_cast<std::uint64_t>(
                std::ceil(static_cast<double>(list_size) *
                          std::exp(static_cast<double>(n) * rate)));

            SweepRow row;
            row.n = n;
            row.num_messages = num_messages;
            row.list_size = list_size;
            row.rate = std::log(static_cast<double>(num_messages) /
                                static_cast<double>(list_size)) /
                       static_cast<double>(n);

            const ExponentResult exph = sc_exponent(
                ExponentQuery{row.rate, -8.0, 257}, w, cap.sigma_star);
            row.converse_rhs_min =
                std::exp(-static_cast<double>(n) * exph.exponent);

            const std::uint64_t encoder_seed =
                counter_hash(config.seed, 2 * point, 0);
            const std::uint64_t noise_seed =
                counter_hash(config.seed, 2 * point + 1, 0);
            ++point;

            if (num_messages > 50'000'000 / std::max<std::size_t>(n, 1) ||
                list_size > num_messages) {
                row.p_e = std::numeric_limits<double>::quiet_NaN();
                row.std_error = row.p_e;
                row.one_minus_pe = row.p_e;
                row.status = "budget_exceeded";
                rows.push_back(row);
                continue;
            }
            const Encoder enc =
                random_code(cap.p_star, n, static_cast<std::size_t>(num_messages),
                            encoder_seed);
            double outputs = 1.0;
            for (std::size_t t = 0; t < n; ++t) {
                outputs *= static_cast<double>(w.output_dim());
            }
            if (static_cast<double>(num_messages) * outputs <=
                kExactScoringLimit) {
                const ListDecoder dec =
                    make_list_decoder_ml(enc, w, list_size);
                const CodeMetrics metrics =
                    error_probability(ListCode(enc, dec), w);
                row.p_e = metrics.p_e;
                row.std_error = 0.0;
                row.one_minus_pe = metrics.success;
            } else {
                const McEstimate est = mc_error_probability(
                    enc, w, list_size, config.trials, noise_seed);
                row.p_e = est.estimate;
                row.std_error = est.std_error;
                row.one_minus_pe = 1.0 - est.estimate;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

inline void write_sweep_csv(const std::vector<SweepRow> &rows,
                            std::ostream &out) {
    out << "n,N,L,rate,p_e,stderr,one_minus_pe,converse_rhs_min,status\n";
    for (const auto &r : rows) {
        out << r.n << ',' << r.num_messages << ',' << r.list_size << ','
            << format_sig12(r.rate) << ',' << format_sig12(r.p_e) << ','
            << format_sig12(r.std_error) << ','
            << format_sig12(r.one_minus_pe) << ','
            << format_sig12(r.converse_rhs_min) << ',' << r.status << '\n';
    }
}

inline void write_exponent_csv(const ExponentResult &result,
                               std::ostream &out) {
    out << "s,phi,log_phi,objective\n";
    for (const auto &row : result.trace) {
        out << format_sig12(row.s) << ',' << format_sig12(row.phi) << ','
            << format_sig12(std::log(row.phi)) << ','
            << format_sig12(row.objective) << '\n';
    }
}

} // namespace listcap
