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
#include <limits>
#include <variant>

#include "listcap/channel.hpp"
#include "listcap/density.hpp"
#include "listcap/errors.hpp"
#include "listcap/prob.hpp"
#include "listcap/state.hpp"

namespace listcap {

/// Relative entropy D(a || b) in nats. Returns +infinity when a puts mass
/// outside the support of b; masses at or below kSupportEps count as zero.
inline double relative_entropy(const ProbDist &a, const ProbDist &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError(
            "relative entropy needs equal alphabet sizes");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= kSupportEps) {
            continue;
        }
        if (b[i] <= kSupportEps) {
            return std::numeric_limits<double>::infinity();
        }
        sum += a[i] * (std::log(a[i]) - std::log(b[i]));
    }
    return sum;
}

/// Quantum relative entropy D(a || b) = Tr a (log a - log b) in nats.
/// Returns +infinity when a has mass on the kernel of b; eigenvalues at or
/// below kSupportEps count as zero.
inline double relative_entropy(const DensityMatrix &a,
                               const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("relative entropy needs equal dimensions");
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        const double alpha = a.eigenvalues()[i];
        if (alpha > kSupportEps) {
            sum += alpha * std::log(alpha);
        }
    }
    // Diagonal of a in the eigenbasis of b: c_j = <v_j| a |v_j>.
    double kernel_mass = 0.0;
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
        const Eigen::VectorXcd v = b.eigenvectors().col(j);
        const double c = (v.adjoint() * a.matrix() * v).value().real();
        const double beta = b.eigenvalues()[j];
        if (beta > kSupportEps) {
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

/// Kind-dispatching relative entropy.
inline double relative_entropy(const State &a, const State &b) {
    if (kind_of(a) != kind_of(b)) {
        throw VariantMismatchError(
            "relative entropy needs states of the same kind");
    }
    if (kind_of(a) == StateKind::classical) {
        return relative_entropy(as_classical(a), as_classical(b));
    }
    return relative_entropy(as_quantum(a), as_quantum(b));
}

/// Mutual information I(p, W) = sum_x p(x) D(W_x || W_p) in nats.
inline double mutual_information(const ProbDist &p, const Channel &w) {
    if (p.size() != w.input_count()) {
        throw DimensionMismatchError(
            "input distribution size does not match channel");
    }
    const State avg = output_average(p, w);
    double sum = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!p.in_support(x)) {
            continue;
        }
        const double d = relative_entropy(w.row(x), avg);
        if (std::isinf(d)) {
            return d;
        }
        sum += p[x] * d;
    }
    return sum;
}

/// Mixed divergence J(p, sigma, W) = sum_x p(x) D(W_x || sigma) in nats.
inline double j_functional(const ProbDist &p, const State &sigma,
                           const Channel &w) {
    if (p.size() != w.input_count()) {
        throw DimensionMismatchError(
            "input distribution size does not match channel");
    }
    if (kind_of(sigma) != w.kind()) {
        throw VariantMismatchError(
            "reference state kind does not match channel");
    }
    if (out_dim(sigma) != w.output_dim()) {
        throw DimensionMismatchError(
            "reference state dimension does not match channel output");
    }
    double sum = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!p.in_support(x)) {
            continue;
        }
        const double d = relative_entropy(w.row(x), sigma);
        if (std::isinf(d)) {
            return d;
        }
        sum += p[x] * d;
    }
    return sum;
}

} // namespace listcap
