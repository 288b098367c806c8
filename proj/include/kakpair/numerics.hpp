// Copyright 2026 The kakpair Authors
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
#include <complex>
#include <cstdint>
#include <vector>

#include "kakpair/errors.hpp"

namespace kakpair {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Relative tolerances shared by every numerical routine.
///
/// eps_ortho bounds unitarity/orthogonality defects, eps_spec bounds
/// spectral and alcove-coordinate comparisons, eps_recon bounds
/// reconstruction residuals. Residual checks scale them by the dimension.
struct Tolerance {
  double eps_ortho = 1e-10;
  double eps_spec = 1e-8;
  double eps_recon = 1e-8;

  /// Tolerance with eps_recon = recon and the other two scaled in the same
  /// ratio as the defaults.
  static Tolerance scaled(double recon);

  /// Throws InvalidArgument unless all three are strictly positive.
  void validate() const;
};

double frobenius_distance(const CMatrix &a, const CMatrix &b);

/// ||A^dagger A - I||_F.
double unitarity_defect(const CMatrix &a);

/// A dense square matrix known to be unitary within the tolerance it was
/// constructed with. Immutable after construction.
class UnitaryMatrix {
 public:
  /// Throws NotUnitary (with the measured defect in the message) when
  /// ||U^dagger U - I||_F > eps_ortho * n, or, if `special`, when
  /// |det U - 1| > eps_spec. Throws InvalidArgument for empty/non-square input.
  explicit UnitaryMatrix(CMatrix m, const Tolerance &tol = {},
                         bool special = false);

  static UnitaryMatrix identity(Eigen::Index n);

  const CMatrix &mat() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  bool special() const noexcept { return special_; }

  UnitaryMatrix adjoint() const;

  /// Product, re-validated against `tol`.
  UnitaryMatrix times(const UnitaryMatrix &other,
                      const Tolerance &tol = {}) const;

 private:
  struct Unchecked {};
  UnitaryMatrix(CMatrix m, bool special, Unchecked)
      : m_(std::move(m)), special_(special) {}

  CMatrix m_;
  bool special_ = false;
};

struct UnitaryEigen {
  /// Unit-modulus eigenvalues, principal argument in [0, 2pi) descending.
  std::vector<Complex> values;
  /// Unitary eigenvector matrix: U = V diag(values) V^dagger.
  CMatrix vectors;
};

/// Eigendecomposition of a unitary matrix through its complex Schur form
/// (which is diagonal for normal matrices), so the eigenvector matrix is
/// unitary even for repeated eigenvalues.
UnitaryEigen eig_unitary(const UnitaryMatrix &u, const Tolerance &tol = {});

/// Principal argument mapped into [0, 2pi).
double arg_2pi(Complex z);

struct SymmetricUnitaryEigen {
  RMatrix q;                   ///< real orthogonal
  std::vector<Complex> values; ///< M = Q diag(values) Q^T
};

/// Diagonalizes a symmetric unitary M by a real orthogonal matrix.
///
/// Writing M = A + iB, A and B are commuting real symmetric matrices. A is
/// diagonalized first; within each eigenvalue cluster of A (gap threshold
/// eps_spec * max(1, ||A||)) the restriction of B is diagonalized.
/// Throws NotSymmetric when ||M - M^T||_F > eps_spec * n.
SymmetricUnitaryEigen diag_symmetric_unitary(const UnitaryMatrix &m,
                                             const Tolerance &tol = {});

/// Cosine-sine decomposition of a 2m x 2m unitary:
///
///   U = diag(P, Q) [[cos D, i sin D], [i sin D, cos D]] diag(R, S),
///
/// with D = diag(pi x_1, ..., pi x_m) and 1/2 >= x_1 >= ... >= x_m >= 0, so
/// sigma_{m-i+1}(U_11) = cos(pi x_i).
struct CSD {
  CMatrix p, q, r, s;
  std::vector<double> x;
};

/// Throws DimensionOdd for odd dimension.
CSD csd_2block(const UnitaryMatrix &u, const Tolerance &tol = {});

/// [[cos D, i sin D], [i sin D, cos D]] with D = diag(pi x).
CMatrix cs_block(const std::vector<double> &x);

/// Haar-distributed unitary from a seeded Gaussian matrix (QR with the
/// diagonal phases of R divided out). With `special`, det is normalized to
/// 1 by a global phase. Same (n, seed, special) gives bit-identical output.
UnitaryMatrix haar_unitary(Eigen::Index n, std::uint64_t seed,
                           bool special = false);

/// Haar-distributed real special orthogonal matrix.
RMatrix haar_orthogonal(Eigen::Index n, std::uint64_t seed);

/// Nearest unitary (polar factor) of a square matrix.
CMatrix nearest_unitary(const CMatrix &a);

/// Nearest real orthogonal matrix.
RMatrix nearest_orthogonal(const RMatrix &a);

CMatrix block_diag(const CMatrix &a, const CMatrix &b);

/// exp(iH) for Hermitian H (only the Hermitian part of `h` is used).
CMatrix expi_hermitian(const CMatrix &h);

}  // namespace kakpair
