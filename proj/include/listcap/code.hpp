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

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "listcap/density.hpp"
#include "listcap/errors.hpp"

namespace listcap {

/// Block encoder: a total table from message ids to input words.
/// Messages and letters are 0-based internally.
class Encoder {
  public:
    Encoder(std::size_t n, std::size_t alphabet,
            std::vector<std::vector<std::size_t>> table)
        : n_(n), alphabet_(alphabet), table_(std::move(table)) {
        if (n_ == 0 || alphabet_ == 0 || table_.empty()) {
            throw InvalidArgumentError(
                "encoder needs n >= 1, a nonempty alphabet, and >= 1 message");
        }
        for (const auto &word : table_) {
            if (word.size() != n_) {
                throw DimensionMismatchError(
                    "encoder word length differs from block length");
            }
            for (std::size_t letter : word) {
                if (letter >= alphabet_) {
                    throw InvalidArgumentError(
                        "encoder letter outside the input alphabet");
                }
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t alphabet() const { return alphabet_; }
    std::size_t num_messages() const { return table_.size(); }
    const std::vector<std::size_t> &word(std::size_t message) const {
        return table_[message];
    }
    const std::vector<std::vector<std::size_t>> &table() const {
        return table_;
    }

  private:
    std::size_t n_;
    std::size_t alphabet_;
    std::vector<std::vector<std::size_t>> table_;
};

namespace detail {

inline void check_subset(const std::vector<std::size_t> &subset,
                         std::size_t list_size) {
    if (subset.size() != list_size) {
        throw InvalidArgumentError("list entry size differs from list size");
    }
    for (std::size_t k = 1; k < subset.size(); ++k) {
        if (subset[k - 1] >= subset[k]) {
            throw InvalidArgumentError(
                "list entries must be strictly increasing message ids");
        }
    }
}

} // namespace detail

/// Total classical list decoder: every output word index maps to one sorted
/// subset of exactly L distinct message ids.
class ClassicalListDecoder {
  public:
    ClassicalListDecoder(std::size_t list_size,
                         std::vector<std::vector<std::size_t>> map)
        : list_size_(list_size), map_(std::move(map)) {
        if (list_size_ == 0 || map_.empty()) {
            throw InvalidArgumentError(
                "decoder needs list size >= 1 and a nonempty map");
        }
        for (const auto &subset : map_) {
            detail::check_subset(subset, list_size_);
        }
    }

    std::size_t list_size() const { return list_size_; }
    std::size_t num_words() const { return map_.size(); }
    const std::vector<std::size_t> &list_for(std::size_t word_index) const {
        return map_[word_index];
    }
    const std::vector<std::vector<std::size_t>> &map() const { return map_; }

  private:
    std::size_t list_size_;
    std::vector<std::vector<std::size_t>> map_;
};

/// One POVM element of a quantum list decoder, tagged with the sorted
/// L-subset of message ids it decides for.
struct PovmElement {
    std::vector<std::size_t> subset;
    Eigen::MatrixXcd matrix;
};

/// Quantum list decoder: a POVM indexed by L-subsets of message ids.
/// Elements must be PSD and sum to the identity, both within 1e-10.
class QuantumListDecoder {
  public:
    QuantumListDecoder(std::size_t list_size, std::vector<PovmElement> elements)
        : list_size_(list_size), elements_(std::move(elements)) {
        if (list_size_ == 0 || elements_.empty()) {
            throw InvalidArgumentError(
                "decoder needs list size >= 1 and >= 1 POVM element");
        }
        const Eigen::Index d = elements_.front().matrix.rows();
        Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d, d);
        std::vector<std::vector<std::size_t>> seen;
        for (const auto &e : elements_) {
            detail::check_subset(e.subset, list_size_);
            seen.push_back(e.subset);
            if (e.matrix.rows() != d || e.matrix.cols() != d) {
                throw DimensionMismatchError(
                    "POVM elements must share one square dimension");
            }
            if ((e.matrix - e.matrix.adjoint()).cwiseAbs().maxCoeff() >
                kDensityTol) {
                throw NotHermitianError("POVM element is not Hermitian");
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
                e.matrix, Eigen::EigenvaluesOnly);
            if (solver.eigenvalues().minCoeff() < -kDensityTol) {
                throw NotPositiveSemidefiniteError(
                    "POVM element has eigenvalue " +
                    std::to_string(solver.eigenvalues().minCoeff()));
            }
            total += e.matrix;
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            throw InvalidArgumentError("duplicate POVM subset");
        }
        const double completeness =
            (total - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
        if (completeness > kDensityTol) {
            throw InvalidArgumentError(
                "POVM does not resolve the identity; max deviation " +
                std::to_string(completeness));
        }
    }

    std::size_t list_size() const { return list_size_; }
    Eigen::Index dim() const { return elements_.front().matrix.rows(); }
    const std::vector<PovmElement> &elements() const { return elements_; }

  private:
    std::size_t list_size_;
    std::vector<PovmElement> elements_;
};

using ListDecoder = std::variant<ClassicalListDecoder, QuantumListDecoder>;

inline std::size_t list_size_of(const ListDecoder &d) {
    return std::visit([](const auto &v) { return v.list_size(); }, d);
}

inline bool decoder_is_classical(const ListDecoder &d) {
    return std::holds_alternative<ClassicalListDecoder>(d);
}

/// Encoder plus list decoder over the same message universe.
class ListCode {
  public:
    ListCode(Encoder encoder, ListDecoder decoder)
        : encoder_(std::move(encoder)), decoder_(std::move(decoder)) {
        const std::size_t n_messages = encoder_.num_messages();
        if (list_size_of(decoder_) > n_messages) {
            throw InvalidArgumentError(
                "list size exceeds the number of messages");
        }
        const auto check_ids = [n_messages](
                                   const std::vector<std::size_t> &subset) {
            for (std::size_t id : subset) {
                if (id >= n_messages) {
                    throw InvalidArgumentError(
                        "decoder names a message id outside the encoder");
                }
            }
        };
        if (const auto *c = std::get_if<ClassicalListDecoder>(&decoder_)) {
            for (const auto &subset : c->map()) {
                check_ids(subset);
            }
        } else {
            for (const auto &e :
                 std::get<QuantumListDecoder>(decoder_).elements()) {
                check_ids(e.subset);
            }
        }
    }

    const Encoder &encoder() const { return encoder_; }
    const ListDecoder &decoder() const { return decoder_; }
    std::size_t n() const { return encoder_.n(); }
    std::size_t num_messages() const { return encoder_.num_messages(); }
    std::size_t list_size() const { return list_size_of(decoder_); }
    bool classical() const { return decoder_is_classical(decoder_); }

  private:
    Encoder encoder_;
    ListDecoder decoder_;
};

/// Exact decoding metrics of one code over one channel.
struct CodeMetrics {
    double p_e = 0.0;     ///< average error probability
    double success = 0.0; ///< 1 - p_e
};

} // namespace listcap
