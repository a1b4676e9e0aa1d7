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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "listcap/errors.hpp"

namespace listcap {

/// Masses below this threshold count as outside the support for all
/// divergence and entropy computations.
inline constexpr double kSupportEps = 1e-12;

/// Tolerance on |sum - 1| when validating probability vectors.
inline constexpr double kProbSumTol = 1e-12;

/// Finite probability distribution. Entries are validated at construction:
/// nonnegative, finite, and summing to one within kProbSumTol.
class ProbDist {
  public:
    explicit ProbDist(std::vector<double> p) : p_(std::move(p)) {
        if (p_.empty()) {
            throw InvalidArgumentError("probability vector must be nonempty");
        }
        double sum = 0.0;
        for (double v : p_) {
            if (!std::isfinite(v) || v < 0.0) {
                throw InvalidArgumentError(
                    "probability entries must be finite and nonnegative");
            }
            sum += v;
        }
        if (std::fabs(sum - 1.0) > kProbSumTol) {
            throw InvalidArgumentError(
                "probability vector sums to " + std::to_string(sum) +
                ", expected 1 within " + std::to_string(kProbSumTol));
        }
    }

    /// Uniform distribution on n outcomes.
    static ProbDist uniform(std::size_t n) {
        if (n == 0) {
            throw InvalidArgumentError("uniform distribution needs n >= 1");
        }
        return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    /// Wraps values derived from already-validated inputs (products or
    /// mixtures of valid rows) without the sum-tolerance check, so derived
    /// entries keep their exact floating-point values.
    static ProbDist trusted(std::vector<double> p) {
        ProbDist d;
        d.p_ = std::move(p);
        if (d.p_.empty()) {
            throw InvalidArgumentError("probability vector must be nonempty");
        }
        return d;
    }

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const { return p_; }

    /// True when outcome i carries non-negligible mass.
    bool in_support(std::size_t i) const { return p_[i] > kSupportEps; }

  private:
    ProbDist() = default;

    std::vector<double> p_;
};

} // namespace listcap
