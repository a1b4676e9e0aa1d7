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
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <utility>

#include "listcap/errors.hpp"
#include "listcap/prob.hpp"

namespace listcap {

/// Tolerance on Hermiticity, trace deviation, and eigenvalue negativity
/// when validating density matrices.
inline constexpr double kDensityTol = 1e-10;

/// Density matrix with a cached spectral decomposition.
///
/// Construction validates Hermiticity, positive semidefiniteness (eigenvalues
/// in [-kDensityTol, 0) are clipped to zero, anything lower is rejected), and
/// unit trace, each within kDensityTol. The stored matrix is the Hermitian
/// symmetrization of the input.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd m) {
        if (m.rows() == 0 || m.rows() != m.cols()) {
            throw DimensionMismatchError(
                "density matrix must be square and nonempty");
        }
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
            throw NotHermitianError("density matrix is not Hermitian within " +
                                    std::to_string(kDensityTol));
        }
        mat_ = 0.5 * (m + m.adjoint().eval());
        const double tr = mat_.trace().real();
        if (std::fabs(tr - 1.0) > kDensityTol) {
            throw TraceNotOneError("density matrix trace is " +
                                   std::to_string(tr) + ", expected 1");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_);
        if (solver.info() != Eigen::Success) {
            throw InvalidArgumentError(
                "eigendecomposition of density matrix failed");
        }
        eigvals_ = solver.eigenvalues();
        eigvecs_ = solver.eigenvectors();
        for (Eigen::Index i = 0; i < eigvals_.size(); ++i) {
            if (eigvals_[i] < -kDensityTol) {
                throw NotPositiveSemidefiniteError(
                    "density matrix has eigenvalue " +
                    std::to_string(eigvals_[i]));
            }
            if (eigvals_[i] < 0.0) {
                eigvals_[i] = 0.0;
            }
        }
    }

    /// Rank-one density matrix from a (not necessarily normalized) vector.
    static DensityMatrix pure(const Eigen::VectorXcd &v) {
        const double norm = v.norm();
        if (!(norm > 0.0)) {
            throw InvalidArgumentError("pure state vector must be nonzero");
        }
        const Eigen::VectorXcd u = v / norm;
        return DensityMatrix(u * u.adjoint());
    }

    /// Maximally mixed state on a d-dimensional space.
    static DensityMatrix maximally_mixed(Eigen::Index d) {
        if (d <= 0) {
            throw InvalidArgumentError("dimension must be positive");
        }
        return DensityMatrix(Eigen::MatrixXcd::Identity(d, d) /
                             static_cast<double>(d));
    }

    /// Wraps a matrix derived from already-validated states (tensor products
    /// of valid density matrices) without re-applying the trace and
    /// Hermiticity tolerances, so derived entries keep their exact
    /// floating-point values. Negative eigenvalues are clipped to zero.
    static DensityMatrix trusted(Eigen::MatrixXcd m) {
        DensityMatrix d;
        d.mat_ = std::move(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d.mat_);
        if (solver.info() != Eigen::Success) {
            throw InvalidArgumentError(
                "eigendecomposition of density matrix failed");
        }
        d.eigvals_ = solver.eigenvalues().cwiseMax(0.0);
        d.eigvecs_ = solver.eigenvectors();
        return d;
    }

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd &matrix() const { return mat_; }

    /// Eigenvalues in ascending order, clipped to be nonnegative.
    const Eigen::VectorXd &eigenvalues() const { return eigvals_; }

    /// Orthonormal eigenvectors, column i matching eigenvalues()[i].
    const Eigen::MatrixXcd &eigenvectors() const { return eigvecs_; }

  private:
    DensityMatrix() = default;

    Eigen::MatrixXcd mat_;
    Eigen::VectorXd eigvals_;
    Eigen::MatrixXcd eigvecs_;
};

/// Kronecker product of two complex matrices.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a,
                             const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

} // namespace listcap
