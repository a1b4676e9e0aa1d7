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

// Shared test utilities: deterministic random instances keyed by counter
// hashes, closed-form reference values, and small filesystem helpers.

#pragma once

#include <Eigen/Dense>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "listcap/channel.hpp"
#include "listcap/code.hpp"
#include "listcap/density.hpp"
#include "listcap/prob.hpp"
#include "listcap/rng.hpp"

namespace testutil {

// Binary entropy in nats.
inline double h2_nats(double q) {
    double out = 0.0;
    if (q > 0.0) {
        out -= q * std::log(q);
    }
    if (q < 1.0) {
        out -= (1.0 - q) * std::log(1.0 - q);
    }
    return out;
}

// Binary symmetric channel with the given flip probability.
inline listcap::Channel bsc(double flip) {
    return listcap::Channel::from_matrix(
        {{1.0 - flip, flip}, {flip, 1.0 - flip}});
}

// Asymmetric binary channel: input 0 is noiseless, input 1 flips to output 0
// with the given probability.
inline listcap::Channel z_channel(double flip) {
    return listcap::Channel::from_matrix({{1.0, 0.0}, {flip, 1.0 - flip}});
}

// Noiseless k-ary channel.
inline listcap::Channel identity_channel(std::size_t k) {
    std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
    for (std::size_t x = 0; x < k; ++x) {
        rows[x][x] = 1.0;
    }
    return listcap::Channel::from_matrix(rows);
}

// Channel whose rows are the two pure states |0> and |+>.
inline listcap::Channel two_pure_state_channel() {
    Eigen::VectorXcd zero(2);
    zero << 1.0, 0.0;
    Eigen::VectorXcd plus(2);
    plus << 1.0, 1.0;
    return listcap::Channel({listcap::State(listcap::DensityMatrix::pure(zero)),
                             listcap::State(listcap::DensityMatrix::pure(plus))});
}

// Strictly positive random distribution. Entries are bounded away from zero
// so divergences against these vectors stay finite.
inline std::vector<double> random_masses(std::size_t dim, std::uint64_t seed,
                                         std::uint64_t tag) {
    std::vector<double> v(dim);
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = 0.05 + listcap::counter_uniform(seed, tag, i);
        total += v[i];
    }
    for (double &x : v) {
        x /= total;
    }
    return v;
}

inline listcap::ProbDist random_prob(std::size_t dim, std::uint64_t seed,
                                     std::uint64_t tag) {
    return listcap::ProbDist(random_masses(dim, seed, tag));
}

// Classical channel with strictly positive random rows.
inline listcap::Channel random_classical_channel(std::size_t nx,
                                                 std::size_t ny,
                                                 std::uint64_t seed) {
    std::vector<std::vector<double>> rows;
    rows.reserve(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        rows.push_back(random_masses(ny, seed, 1000 + x));
    }
    return listcap::Channel::from_matrix(rows);
}

// Standard complex Gaussian via the Box-Muller transform on counter-hash
// uniforms. Each (tag, idx) pair yields an independent sample.
inline std::complex<double> gaussian(std::uint64_t seed, std::uint64_t tag,
                                     std::uint64_t idx) {
    const double u1 =
        1.0 - listcap::counter_uniform(seed, tag, 2 * idx); // in (0, 1]
    const double u2 = listcap::counter_uniform(seed, tag, 2 * idx + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

inline Eigen::MatrixXcd ginibre(Eigen::Index d, std::uint64_t seed,
                                std::uint64_t tag) {
    Eigen::MatrixXcd g(d, d);
    std::uint64_t idx = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            g(i, j) = gaussian(seed, tag, idx++);
        }
    }
    return g;
}

// Full-rank random density matrix. Mixing with the identity keeps the
// spectrum bounded away from zero.
inline listcap::DensityMatrix random_density(Eigen::Index d,
                                             std::uint64_t seed,
                                             std::uint64_t tag) {
    const Eigen::MatrixXcd g = ginibre(d, seed, tag);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho += 0.1 * Eigen::MatrixXcd::Identity(d, d);
    rho /= rho.trace().real();
    return listcap::DensityMatrix(rho);
}

inline listcap::Channel random_cq_channel(std::size_t nx, Eigen::Index d,
                                          std::uint64_t seed) {
    std::vector<listcap::State> rows;
    rows.reserve(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        rows.emplace_back(random_density(d, seed, 2000 + x));
    }
    return listcap::Channel(std::move(rows));
}

// Haar-ish random unitary from the QR factorization of a Ginibre matrix.
inline Eigen::MatrixXcd random_unitary(Eigen::Index d, std::uint64_t seed,
                                       std::uint64_t tag) {
    const Eigen::MatrixXcd g = ginibre(d, seed, tag);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ();
}

// Uniform integer in [0, n) from a counter-hash draw.
inline std::size_t random_index(std::size_t n, std::uint64_t seed,
                                std::uint64_t tag, std::uint64_t idx) {
    const double u = listcap::counter_uniform(seed, tag, idx);
    auto k = static_cast<std::size_t>(u * static_cast<double>(n));
    return k >= n ? n - 1 : k;
}

// Random encoder table: N codewords of length n over the given alphabet.
inline listcap::Encoder random_encoder(std::size_t n, std::size_t num_messages,
                                       std::size_t alphabet,
                                       std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> table(
        num_messages, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < num_messages; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            table[i][t] = random_index(alphabet, seed, 3000 + i, t);
        }
    }
    return listcap::Encoder(n, alphabet, std::move(table));
}

// Uniformly random sorted L-subset of {0, ..., N-1} via partial
// Fisher-Yates on counter-hash draws.
inline std::vector<std::size_t> random_subset(std::size_t num_messages,
                                              std::size_t list_size,
                                              std::uint64_t seed,
                                              std::uint64_t tag) {
    std::vector<std::size_t> pool(num_messages);
    for (std::size_t i = 0; i < num_messages; ++i) {
        pool[i] = i;
    }
    for (std::size_t k = 0; k < list_size; ++k) {
        const std::size_t j =
            k + random_index(num_messages - k, seed, tag, 4000 + k);
        std::swap(pool[k], pool[j]);
    }
    std::vector<std::size_t> subset(pool.begin(),
                                    pool.begin() + static_cast<long>(list_size));
    std::sort(subset.begin(), subset.end());
    return subset;
}

// Random total classical list decoder over num_words output words.
inline listcap::ClassicalListDecoder
random_classical_decoder(std::size_t num_words, std::size_t num_messages,
                         std::size_t list_size, std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> map;
    map.reserve(num_words);
    for (std::size_t yw = 0; yw < num_words; ++yw) {
        map.push_back(random_subset(num_messages, list_size, seed, 5000 + yw));
    }
    return listcap::ClassicalListDecoder(list_size, std::move(map));
}

// Projective quantum list decoder: a random orthonormal basis of C^dim is
// partitioned into num_messages groups, one projector per message.
inline listcap::QuantumListDecoder
random_projective_decoder(Eigen::Index dim, std::size_t num_messages,
                          std::uint64_t seed, std::uint64_t tag) {
    if (static_cast<std::size_t>(dim) < num_messages) {
        throw std::invalid_argument("need dim >= num_messages");
    }
    const Eigen::MatrixXcd u = random_unitary(dim, seed, tag);
    std::vector<listcap::PovmElement> elements;
    elements.reserve(num_messages);
    for (std::size_t i = 0; i < num_messages; ++i) {
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index c = static_cast<Eigen::Index>(i); c < dim;
             c += static_cast<Eigen::Index>(num_messages)) {
            proj += u.col(c) * u.col(c).adjoint();
        }
        elements.push_back({{i}, std::move(proj)});
    }
    return listcap::QuantumListDecoder(1, std::move(elements));
}

// Temporary directory removed at scope exit.
class TempDir {
  public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() /
                            "listcap_test_XXXXXX")
                               .string();
        if (mkdtemp(tmpl.data()) == nullptr) {
            throw std::runtime_error("mkdtemp failed");
        }
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    std::filesystem::path file(const std::string &name) const {
        return path_ / name;
    }
    const std::filesystem::path &path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path &path,
                       const std::string &content) {
    std::ofstream out(path);
    out << content;
    if (!out) {
        throw std::runtime_error("failed to write " + path.string());
    }
}

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace testutil
