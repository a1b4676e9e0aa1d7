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
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/divergence.hpp"
#include "listcap/errors.hpp"
#include "listcap/prob.hpp"
#include "listcap/state.hpp"

namespace listcap {

/// Capacity estimate with its certifying optimizers and duality bounds.
struct CapacityResult {
    double value = 0.0; ///< (lower + upper) / 2, nats
    ProbDist p_star;    ///< input distribution at exit
    State sigma_star;   ///< output average at p_star
    double lower = 0.0; ///< I(p_star, W), nats
    double upper = 0.0; ///< max_x D(W_x || sigma_star), nats
    double gap = 0.0;   ///< upper - lower
    std::size_t iterations = 0;
};

/// Raised when the duality gap fails to reach tol within max_iter updates.
/// Carries the best certified result seen so far.
class NotConvergedError : public Error {
  public:
    NotConvergedError(const std::string &msg, CapacityResult best)
        : Error(msg), best_(std::move(best)) {}
    const CapacityResult &best() const { return best_; }

  private:
    CapacityResult best_;
};

/// Certified sandwich around C(W) at a fixed input distribution:
/// lower = I(p, W), upper = max_x D(W_x || W_p). The upper bound may be
/// +infinity when some row escapes the support of W_p.
inline std::pair<double, double> capacity_bounds(const Channel &w,
                                                 const ProbDist &p) {
    const double lower = mutual_information(p, w);
    const State avg = output_average(p, w);
    double upper = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w.input_count(); ++x) {
        upper = std::max(upper, relative_entropy(w.row(x), avg));
    }
    return {lower, upper};
}

namespace detail {

/// Divergence used inside the capacity iteration. Unlike relative_entropy
/// it treats only exact zeros (post-clip) as outside the support, so the
/// iteration stays finite as long as the average genuinely dominates.
inline double iteration_divergence(const State &row, const State &avg) {
    if (kind_of(row) == StateKind::classical) {
        const ProbDist &a = as_classical(row);
        const ProbDist &b = as_classical(avg);
        double sum = 0.0;
        for (std::size_t y = 0; y < a.size(); ++y) {
            if (a[y] <= 0.0) {
                continue;
            }
            if (b[y] <= 0.0) {
                return std::numeric_limits<double>::infinity();
            }
            sum += a[y] * (std::log(a[y]) - std::log(b[y]));
        }
        return sum;
    }
    const DensityMatrix &a = as_quantum(row);
    const DensityMatrix &b = as_quantum(avg);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        const double alpha = a.eigenvalues()[i];
        if (alpha > 0.0) {
            sum += alpha * std::log(alpha);
        }
    }
    double kernel_mass = 0.0;
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
        const Eigen::VectorXcd v = b.eigenvectors().col(j);
        const double c = (v.adjoint() * a.matrix() * v).value().real();
        const double beta = b.eigenvalues()[j];
        if (beta > 0.0) {
            sum -= c * std::log(beta);
        } else {
            kernel_mass += c;
        }
    }
    if (kernel_mass > kSupportEps) {
        return std::numeric_limits<double>::infinity();
    }
    return sum;
}

/// True when every row equals the first one to the given entrywise
/// tolerance, which forces capacity zero.
inline bool all_rows_identical(const Channel &w, double tol) {
    if (w.classical()) {
        const ProbDist &first = w.crow(0);
        for (std::size_t x = 1; x < w.input_count(); ++x) {
            const ProbDist &row = w.crow(x);
            for (std::size_t y = 0; y < first.size(); ++y) {
                if (std::fabs(row[y] - first[y]) > tol) {
                    return false;
                }
            }
        }
        return true;
    }
    const Eigen::MatrixXcd &first = w.qrow(0).matrix();
    for (std::size_t x = 1; x < w.input_count(); ++x) {
        if ((w.qrow(x).matrix() - first).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Per-iteration observer for the capacity iteration: (iteration, lower,
/// upper). Used by tests to assert monotone ascent.
using CapacityObserver =
    std::function<void(std::size_t, double, double)>;

/// Alternating maximization of I(p, W) with a duality-gap certificate.
///
/// Starting from the uniform input, repeats
///   p'(x) proportional to p(x) * exp(D(W_x || W_p))
/// until max_x D(W_x || W_p) - I(p, W) <= tol. The same update serves
/// classical and cq channels (quantum divergences inside). Channels whose
/// rows are all identical short-circuit to a zero result.
inline CapacityResult
arimoto_blahut(const Channel &w, double tol = 1e-8,
               std::size_t max_iter = 100000,
               const CapacityObserver &observer = nullptr) {
    if (!(tol > 0.0)) {
        throw InvalidArgumentError("tolerance must be positive");
    }
    const std::size_t nx = w.input_count();
    if (detail::all_rows_identical(w, 1e-14)) {
        ProbDist p = ProbDist::uniform(nx);
        State avg = output_average(p, w);
        return CapacityResult{0.0, std::move(p), std::move(avg),
                              0.0,  0.0,          0.0, 0};
    }

    std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
    std::vector<double> div(nx, 0.0);
    std::optional<CapacityResult> best;
    double best_gap = std::numeric_limits<double>::infinity();

    for (std::size_t t = 0;; ++t) {
        // Floor keeps the update well defined if some mass underflows.
        double floor_total = 0.0;
        for (double &v : p) {
            v = std::max(v, 1e-300);
            floor_total += v;
        }
        for (double &v : p) {
            v /= floor_total;
        }
        const ProbDist pd{std::vector<double>(p)};
        const State avg = output_average(pd, w);

        double lower = 0.0;
        double upper = -std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < nx; ++x) {
            div[x] = detail::iteration_divergence(w.row(x), avg);
            upper = std::max(upper, div[x]);
            if (p[x] > kSupportEps && std::isfinite(div[x])) {
                lower += p[x] * div[x];
            }
        }
        const double gap = upper - lower;
        if (observer) {
            observer(t, lower, upper);
        }
        if (gap < best_gap) {
            best_gap = gap;
            best = CapacityResult{0.5 * (lower + upper), pd, avg,
                                  lower, upper,           gap, t};
        }
        if (gap <= tol) {
            return CapacityResult{0.5 * (lower + upper), pd, avg,
                                  lower, upper,           gap, t};
        }
        if (t >= max_iter) {
            throw NotConvergedError(
                "capacity iteration gap " + std::to_string(best_gap) +
                    " above tolerance after " + std::to_string(t) +
                    " iterations",
                *best);
        }

        // Multiplicative update in the log domain. Infinite divergences
        // (only possible with vanishing mass on a needed input) make the
        // next iterate concentrate on the offending inputs.
        bool any_inf = false;
        for (std::size_t x = 0; x < nx; ++x) {
            if (std::isinf(div[x])) {
                any_inf = true;
                break;
            }
        }
        if (any_inf) {
            double count = 0.0;
            for (std::size_t x = 0; x < nx; ++x) {
                count += std::isinf(div[x]) ? 1.0 : 0.0;
            }
            for (std::size_t x = 0; x < nx; ++x) {
                p[x] = std::isinf(div[x]) ? 1.0 / count : 0.0;
            }
            continue;
        }
        double max_logw = -std::numeric_limits<double>::infinity();
        std::vector<double> logw(nx);
        for (std::size_t x = 0; x < nx; ++x) {
            logw[x] = std::log(p[x]) + div[x];
            max_logw = std::max(max_logw, logw[x]);
        }
        double norm = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            p[x] = std::exp(logw[x] - max_logw);
            norm += p[x];
        }
        for (std::size_t x = 0; x < nx; ++x) {
            p[x] /= norm;
        }
    }
}

} // namespace listcap
