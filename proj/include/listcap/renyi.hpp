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
#include <limits>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/divergence.hpp"
#include "listcap/errors.hpp"
#include "listcap/state.hpp"

namespace listcap {

/// Renyi overlap phi(s | a || b): sum_y a(y)^{1-s} b(y)^s classically,
/// Tr a^{1-s} b^s for density matrices. Powers are taken on the supports
/// (masses or eigenvalues above kSupportEps). By convention phi(0) = 1
/// exactly. For s < 0 the value is +infinity exactly when a puts mass
/// outside the support of b.
inline double phi(double s, const ProbDist &a, const ProbDist &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("phi needs equal alphabet sizes");
    }
    if (s == 0.0) {
        return 1.0;
    }
    double sum = 0.0;
    for (std::size_t y = 0; y < a.size(); ++y) {
        if (a[y] <= kSupportEps) {
            continue;
        }
        if (b[y] <= kSupportEps) {
            if (s < 0.0) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        sum += std::exp((1.0 - s) * std::log(a[y]) + s * std::log(b[y]));
    }
    return sum;
}

inline double phi(double s, const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("phi needs equal dimensions");
    }
    if (s == 0.0) {
        return 1.0;
    }
    // Overlap weights |<u_i|v_j>|^2 between the two eigenbases.
    const Eigen::MatrixXd overlap =
        (a.eigenvectors().adjoint() * b.eigenvectors()).cwiseAbs2();
    if (s < 0.0) {
        double kernel_mass = 0.0;
        for (Eigen::Index i = 0; i < a.dim(); ++i) {
            if (a.eigenvalues()[i] <= kSupportEps) {
                continue;
            }
            for (Eigen::Index j = 0; j < b.dim(); ++j) {
                if (b.eigenvalues()[j] <= kSupportEps) {
                    kernel_mass += a.eigenvalues()[i] * overlap(i, j);
                }
            }
        }
        if (kernel_mass > kSupportEps) {
            return std::numeric_limits<double>::infinity();
        }
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        const double alpha = a.eigenvalues()[i];
        if (alpha <= kSupportEps) {
            continue;
        }
        for (Eigen::Index j = 0; j < b.dim(); ++j) {
            const double beta = b.eigenvalues()[j];
            if (beta <= kSupportEps) {
                continue;
            }
            sum += std::exp((1.0 - s) * std::log(alpha) +
                            s * std::log(beta)) *
                   overlap(i, j);
        }
    }
    return sum;
}

/// Kind-dispatching phi.
inline double phi(double s, const State &a, const State &b) {
    if (kind_of(a) != kind_of(b)) {
        throw VariantMismatchError("phi needs states of the same kind");
    }
    if (kind_of(a) == StateKind::classical) {
        return phi(s, as_classical(a), as_classical(b));
    }
    return phi(s, as_quantum(a), as_quantum(b));
}

/// Channel overlap: max over inputs of phi(s | W_x || sigma); +infinity if
/// any input's term is.
inline double phi_channel(double s, const Channel &w, const State &sigma) {
    if (kind_of(sigma) != w.kind()) {
        throw VariantMismatchError(
            "reference state kind does not match channel");
    }
    if (out_dim(sigma) != w.output_dim()) {
        throw DimensionMismatchError(
            "reference state dimension does not match channel output");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w.input_count(); ++x) {
        best = std::max(best, phi(s, w.row(x), sigma));
    }
    return best;
}

/// One-sided derivative check of log phi_channel at s = 0.
struct SlopeCheck {
    double numeric_slope = 0.0; ///< log phi_channel(-h | W || sigma) / h
    double exact = 0.0;         ///< max_x D(W_x || sigma)
};

/// Compares the finite-difference slope of log phi_channel at 0 (one-sided,
/// from s < 0) with its closed form max_x D(W_x || sigma). The two agree to
/// O(h). Requires every D(W_x || sigma) finite.
inline SlopeCheck phi_slope_check(const Channel &w, const State &sigma,
                                  double h) {
    if (!(h > 0.0) || h > 0.01) {
        throw InvalidArgumentError("step must lie in (0, 0.01]");
    }
    double exact = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w.input_count(); ++x) {
        const double d = relative_entropy(w.row(x), sigma);
        if (std::isinf(d)) {
            throw InfiniteDivergenceError(
                "slope check needs finite divergences for every input");
        }
        exact = std::max(exact, d);
    }
    const double numeric = std::log(phi_channel(-h, w, sigma)) / h;
    return SlopeCheck{numeric, exact};
}

/// Strong-converse exponent query: rate and search grid over s.
struct ExponentQuery {
    double rate_r = 0.0;      ///< nats per channel use
    double s_lo = -8.0;       ///< grid lower end, must be < 0
    std::size_t grid_points = 257; ///< points per round, must be >= 3
};

/// One evaluated grid point of the exponent search.
struct ExponentTraceRow {
    double s = 0.0;
    double phi = 0.0;       ///< phi_channel(s | W || sigma)
    double objective = 0.0; ///< (-s r - log phi) / (1 - s)
};

/// Result of the exponent search. The exponent is never negative because
/// s = 0 always contributes objective 0.
struct ExponentResult {
    double exponent = 0.0;
    double s_star = 0.0;
    std::vector<ExponentTraceRow> trace;
};

/// Maximizes (-s r - log phi_channel(s)) / (1 - s) over s in [s_lo, 0].
///
/// A uniform grid pass is followed by three refinement rounds, each
/// shrinking the bracket around the best point eightfold. Grid points with
/// infinite phi contribute objective -infinity and are skipped; ties prefer
/// the smaller s. The trace records every evaluation in order.
inline ExponentResult sc_exponent(const ExponentQuery &query,
                                  const Channel &w, const State &sigma) {
    if (!(query.s_lo < 0.0)) {
        throw InvalidArgumentError("grid lower end must be negative");
    }
    if (query.grid_points < 3) {
        throw InvalidArgumentError("grid needs at least 3 points");
    }
    if (!std::isfinite(query.rate_r)) {
        throw InvalidArgumentError("rate must be finite");
    }

    ExponentResult result;
    result.exponent = -std::numeric_limits<double>::infinity();
    result.s_star = 0.0;

    const auto evaluate = [&](double s) {
        double value;
        double objective;
        if (s == 0.0) {
            value = 1.0;
            objective = 0.0;
        } else {
            value = phi_channel(s, w, sigma);
            objective = std::isinf(value)
                            ? -std::numeric_limits<double>::infinity()
                            : (-s * query.rate_r - std::log(value)) /
                                  (1.0 - s);
        }
        result.trace.push_back(ExponentTraceRow{s, value, objective});
        if (objective > result.exponent ||
            (objective == result.exponent && s < result.s_star)) {
            result.exponent = objective;
            result.s_star = s;
        }
    };

    double lo = query.s_lo;
    double hi = 0.0;
    const std::size_t g = query.grid_points;
    for (int round = 0; round < 4; ++round) {
        for (std::size_t k = 0; k < g; ++k) {
            double s = lo + (hi - lo) * static_cast<double>(k) /
                                static_cast<double>(g - 1);
            if (k == 0) {
                s = lo;
            } else if (k == g - 1) {
                s = hi; // exact endpoint, no accumulated drift
            }
            evaluate(s);
        }
        const double width = (hi - lo) / 8.0;
        lo = std::max(query.s_lo, result.s_star - 0.5 * width);
        hi = std::min(0.0, result.s_star + 0.5 * width);
    }
    // Probe a geometric ladder hugging s = 0. The objective's positive lobe
    // can be orders of magnitude narrower than any refined grid step when
    // the rate barely exceeds the worst divergence, and these points are the
    // only way the search sees it.
    for (double mag = 1e-2; mag >= 1e-9; mag /= 10.0) {
        const double s = -mag;
        if (s > query.s_lo) {
            evaluate(s);
        }
    }
    return result;
}

} // namespace listcap
