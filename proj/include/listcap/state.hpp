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
#include <variant>

#include "listcap/density.hpp"
#include "listcap/errors.hpp"
#include "listcap/prob.hpp"

namespace listcap {

/// Channel output: a distribution over letters or a density matrix.
using State = std::variant<ProbDist, DensityMatrix>;

enum class StateKind { classical, quantum };

inline StateKind kind_of(const State &s) {
    return std::holds_alternative<ProbDist>(s) ? StateKind::classical
                                               : StateKind::quantum;
}

/// Output alphabet size for classical states, Hilbert space dimension for
/// quantum ones.
inline std::size_t out_dim(const State &s) {
    if (const auto *p = std::get_if<ProbDist>(&s)) {
        return p->size();
    }
    return static_cast<std::size_t>(std::get<DensityMatrix>(s).dim());
}

/// Checked access to the classical alternative.
inline const ProbDist &as_classical(const State &s) {
    if (const auto *p = std::get_if<ProbDist>(&s)) {
        return *p;
    }
    throw VariantMismatchError("expected a classical state");
}

/// Checked access to the quantum alternative.
inline const DensityMatrix &as_quantum(const State &s) {
    if (const auto *q = std::get_if<DensityMatrix>(&s)) {
        return *q;
    }
    throw VariantMismatchError("expected a quantum state");
}

} // namespace listcap
