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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/code.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/errors.hpp"
#include "listcap/exact_mean.hpp"
#include "listcap/renyi.hpp"
#include "listcap/words.hpp"

namespace listcap {

/// Values of the decoding-set distributions on the success region T:
/// r_of_t recovers 1 - P_e and s_of_t must equal L/N (exactly for classical
/// total decoders, via the resolution identity for POVMs).
struct RSTSummary {
    double r_of_t = 0.0;
    double s_of_t = 0.0;
    double expected_s_of_t = 0.0; ///< L / N
    /// max entrywise |sum_i Y_i - L*I| (quantum decoders only)
    std::optional<double> quantum_resolution_residual;
    /// |sigma^n(all output words) - 1| (classical decoders only)
    std::optional<double> coverage_residual;
};

/// Evaluates the success-region masses of the code's decision structure
/// under the true channel (r_of_t) and a reference state (s_of_t).
inline RSTSummary build_rst(const ListCode &code, const Channel &w,
                            const State &sigma,
                            std::uint64_t max_cells = kDefaultExtendBudget) {
    if (kind_of(sigma) != w.kind()) {
        throw VariantMismatchError(
            "reference state kind does not match channel");
    }
    if (out_dim(sigma) != w.output_dim()) {
        throw DimensionMismatchError(
            "reference state dimension does not match channel output");
    }
    const CodeMetrics metrics = error_probability(code, w, max_cells);
    const std::size_t n = code.n();
    const std::size_t n_messages = code.num_messages();

    RSTSummary summary;
    summary.r_of_t = metrics.success;
    summary.expected_s_of_t = static_cast<double>(code.list_size()) /
                              static_cast<double>(n_messages);

    if (code.classical()) {
        const auto &dec = std::get<ClassicalListDecoder>(code.decoder());
        const ProbDist &ref = as_classical(sigma);
        const std::uint64_t outputs = word_count(w.output_dim(), n);
        ExactMeanAccumulator s_acc;
        ExactMeanAccumulator coverage_acc;
        std::vector<std::size_t> y(n, 0);
        for (std::uint64_t yi = 0; yi < outputs; ++yi) {
            double mass = 1.0;
            for (std::size_t t = 0; t < n; ++t) {
                mass *= ref[y[t]];
            }
            coverage_acc.add(mass);
            // Each id listed for y contributes sigma^n(y) to its Y_i mass.
            for (std::size_t k = 0;
                 k < dec.list_for(static_cast<std::size_t>(yi)).size(); ++k) {
                s_acc.add(mass);
            }
            for (std::size_t t = n; t-- > 0;) {
                if (++y[t] < w.output_dim()) {
                    break;
                }
                y[t] = 0;
            }
        }
        summary.s_of_t = s_acc.mean(n_messages);
        summary.coverage_residual = std::fabs(coverage_acc.mean(1) - 1.0);
        return summary;
    }

    const auto &dec = std::get<QuantumListDecoder>(code.decoder());
    const Eigen::MatrixXcd &ref1 = as_quantum(sigma).matrix();
    Eigen::MatrixXcd sigma_n = ref1;
    for (std::size_t t = 1; t < n; ++t) {
        sigma_n = kron(sigma_n, ref1);
    }
    const Eigen::Index d = dec.dim();
    Eigen::MatrixXcd resolution = Eigen::MatrixXcd::Zero(d, d);
    ExactMeanAccumulator s_acc;
    for (std::size_t i = 0; i < n_messages; ++i) {
        Eigen::MatrixXcd aggregate = Eigen::MatrixXcd::Zero(d, d);
        for (const auto &e : dec.elements()) {
            if (std::binary_search(e.subset.begin(), e.subset.end(), i)) {
                aggregate += e.matrix;
            }
        }
        resolution += aggregate;
        s_acc.add((sigma_n * aggregate).trace().real());
    }
    summary.s_of_t = s_acc.mean(n_messages);
    resolution -= static_cast<double>(code.list_size()) *
                  Eigen::MatrixXcd::Identity(d, d);
    summary.quantum_resolution_residual = resolution.cwiseAbs().maxCoeff();
    return summary;
}

/// One evaluated point of the converse inequality.
struct BoundRow {
    double s = 0.0;
    double lhs = 0.0;    ///< (1 - P_e)^{1-s} N^{-s} L^{s}
    double rhs = 0.0;    ///< exp(n log phi_channel(s | W || sigma))
    double margin = 0.0; ///< rhs - lhs
};

/// Machine-checked instance of the converse bound at several s values.
struct BoundReport {
    std::vector<BoundRow> rows;
    bool violated = false; ///< true iff some margin < -1e-12
};

/// Slack below which a negative margin counts as a genuine violation.
inline constexpr double kBoundSlack = 1e-12;

/// Verifies (1 - P_e)^{1-s} N^{-s} L^{s} <= exp(n log phi_channel(s)) for
/// every requested s <= 0. Infinite phi makes the bound vacuous at that s.
inline BoundReport
verify_converse_bound(const ListCode &code, const Channel &w,
                      const State &sigma, const std::vector<double> &s_list,
                      std::uint64_t max_cells = kDefaultExtendBudget) {
    if (s_list.empty()) {
        throw InvalidArgumentError("need at least one s value");
    }
    for (double s : s_list) {
        if (!(s <= 0.0)) {
            throw InvalidArgumentError("s values must be <= 0");
        }
    }
    const CodeMetrics metrics = error_probability(code, w, max_cells);
    const auto n = static_cast<double>(code.n());
    const auto n_messages = static_cast<double>(code.num_messages());
    const auto list_size = static_cast<double>(code.list_size());

    BoundReport report;
    for (double s : s_list) {
        const double lhs = std::pow(metrics.success, 1.0 - s) *
                           std::pow(n_messages, -s) * std::pow(list_size, s);
        const double value = phi_channel(s, w, sigma);
        const double rhs = std::isinf(value)
                               ? std::numeric_limits<double>::infinity()
                               : std::exp(n * std::log(value));
        const double margin = rhs - lhs;
        report.rows.push_back(BoundRow{s, lhs, rhs, margin});
        if (margin < -kBoundSlack) {
            report.violated = true;
        }
    }
    return report;
}

} // namespace listcap
