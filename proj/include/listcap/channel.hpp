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
#include <utility>
#include <vector>

#include "listcap/density.hpp"
#include "listcap/errors.hpp"
#include "listcap/prob.hpp"
#include "listcap/state.hpp"
#include "listcap/words.hpp"

namespace listcap {

/// Memoryless channel: one output state per input letter. All rows must be
/// of the same kind (all classical or all quantum) with a common output
/// dimension, and there must be at least two input letters.
class Channel {
  public:
    explicit Channel(std::vector<State> rows) : rows_(std::move(rows)) {
        if (rows_.size() < 2) {
            throw InvalidArgumentError(
                "channel needs at least two input letters");
        }
        const StateKind k = kind_of(rows_.front());
        const std::size_t d = out_dim(rows_.front());
        for (const State &s : rows_) {
            if (kind_of(s) != k) {
                throw VariantMismatchError(
                    "channel rows mix classical and quantum states");
            }
            if (out_dim(s) != d) {
                throw DimensionMismatchError(
                    "channel rows have differing output dimensions");
            }
        }
    }

    /// Classical channel from a row-stochastic matrix.
    static Channel from_matrix(const std::vector<std::vector<double>> &rows) {
        std::vector<State> states;
        states.reserve(rows.size());
        for (std::size_t x = 0; x < rows.size(); ++x) {
            try {
                states.emplace_back(ProbDist(rows[x]));
            } catch (const Error &e) {
                throw NonStochasticRowError("row " + std::to_string(x) + ": " +
                                            e.what());
            }
        }
        return Channel(std::move(states));
    }

    std::size_t input_count() const { return rows_.size(); }
    std::size_t output_dim() const { return out_dim(rows_.front()); }
    StateKind kind() const { return kind_of(rows_.front()); }
    bool classical() const { return kind() == StateKind::classical; }

    const State &row(std::size_t x) const { return rows_[x]; }
    const std::vector<State> &rows() const { return rows_; }

    /// Checked classical row access.
    const ProbDist &crow(std::size_t x) const { return as_classical(rows_[x]); }

    /// Checked quantum row access.
    const DensityMatrix &qrow(std::size_t x) const {
        return as_quantum(rows_[x]);
    }

  private:
    std::vector<State> rows_;
};

/// Output state W_p under input distribution p. The mixture is renormalized
/// to absorb rounding in the row sums.
inline State output_average(const ProbDist &p, const Channel &w) {
    if (p.size() != w.input_count()) {
        throw DimensionMismatchError(
            "input distribution size does not match channel");
    }
    if (w.classical()) {
        std::vector<double> mix(w.output_dim(), 0.0);
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (p[x] == 0.0) {
                continue;
            }
            const ProbDist &row = w.crow(x);
            for (std::size_t y = 0; y < mix.size(); ++y) {
                mix[y] += p[x] * row[y];
            }
        }
        double total = 0.0;
        for (double v : mix) {
            total += v;
        }
        for (double &v : mix) {
            v /= total;
        }
        return ProbDist(std::move(mix));
    }
    const auto d = static_cast<Eigen::Index>(w.output_dim());
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x] == 0.0) {
            continue;
        }
        mix += p[x] * w.qrow(x).matrix();
    }
    mix /= mix.trace().real();
    return DensityMatrix(std::move(mix));
}

/// Default ceiling on the number of scalar cells a materialized product
/// channel may occupy.
inline constexpr std::uint64_t kDefaultExtendBudget = 100'000'000;

/// n-fold memoryless extension with explicitly materialized rows.
///
/// Input words are indexed with the first letter most significant. The cell
/// count (inputs times outputs for classical channels, inputs times squared
/// dimension for quantum ones) must stay within max_cells.
inline Channel iid_extend(const Channel &w, std::size_t n,
                          std::uint64_t max_cells = kDefaultExtendBudget) {
    if (n == 0) {
        throw InvalidArgumentError("extension length must be at least 1");
    }
    const std::uint64_t inputs = word_count(w.input_count(), n);
    const std::uint64_t outputs = word_count(w.output_dim(), n);
    const std::uint64_t per_row =
        w.classical() ? outputs : outputs * outputs * 2;
    if (inputs > max_cells / per_row) {
        throw BudgetExceededError(
            "product channel would exceed the cell budget");
    }

    std::vector<State> rows;
    rows.reserve(static_cast<std::size_t>(inputs));
    for (std::uint64_t xi = 0; xi < inputs; ++xi) {
        const std::vector<std::size_t> word =
            index_to_word(xi, w.input_count(), n);
        if (w.classical()) {
            std::vector<double> row(static_cast<std::size_t>(outputs), 1.0);
            std::uint64_t stride = outputs;
            for (std::size_t t = 0; t < n; ++t) {
                const ProbDist &base = w.crow(word[t]);
                stride /= w.output_dim();
                for (std::uint64_t yi = 0; yi < outputs; ++yi) {
                    row[static_cast<std::size_t>(yi)] *=
                        base[static_cast<std::size_t>((yi / stride) %
                                                      w.output_dim())];
                }
            }
            // Entries must stay the exact floating products of the
            // per-letter values, so skip the constructor tolerance instead
            // of renormalizing away the accumulated rounding.
            rows.emplace_back(ProbDist::trusted(std::move(row)));
        } else {
            Eigen::MatrixXcd acc = w.qrow(word[0]).matrix();
            for (std::size_t t = 1; t < n; ++t) {
                acc = kron(acc, w.qrow(word[t]).matrix());
            }
            rows.emplace_back(DensityMatrix::trusted(std::move(acc)));
        }
    }
    return Channel(std::move(rows));
}

} // namespace listcap
