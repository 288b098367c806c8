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

#include "kakpair/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace kakpair {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionOdd: return "DimensionOdd";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SumNotInteger: return "SumNotInteger";
    case ErrorCode::SignsInTypeA: return "SignsInTypeA";
    case ErrorCode::PairingFailure: return "PairingFailure";
    case ErrorCode::SpectralMismatch: return "SpectralMismatch";
    case ErrorCode::NotInAlcove: return "NotInAlcove";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::SynthesisFailure: return "SynthesisFailure";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Tolerance Tolerance::scaled(double recon) {
  Tolerance t;
  t.eps_ortho = recon * 1e-2;
  t.eps_spec = recon;
  t.eps_recon = recon;
  t.validate();
  return t;
}

void Tolerance::validate() const {
  if (!(eps_ortho > 0) || !(eps_spec > 0) || !(eps_recon > 0)) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerances must be strictly positive");
  }
}

double frobenius_distance(const CMatrix &a, const CMatrix &b) {
  return (a - b).norm();
}

double unitarity_defect(const CMatrix &a) {
  return (a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols())).norm();
}

UnitaryMatrix::UnitaryMatrix(CMatrix m, const Tolerance &tol, bool special)
    : m_(std::move(m)), special_(special) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw Error(ErrorCode::InvalidArgument,
                "unitary matrix must be square and nonempty");
  }
  const double n = static_cast<double>(m_.rows());
  const double defect = unitarity_defect(m_);
  if (!(defect <= tol.eps_ortho * n)) {
    std::ostringstream os;
    os << "matrix is not unitary: ||U^dagger U - I||_F = " << defect;
    throw Error(ErrorCode::NotUnitary, os.str());
  }
  if (special) {
    const double det_err = std::abs(m_.determinant() - Complex(1.0, 0.0));
    if (!(det_err <= tol.eps_spec)) {
      std::ostringstream os;
      os << "matrix is not special unitary: |det U - 1| = " << det_err;
      throw Error(ErrorCode::NotUnitary, os.str());
    }
  }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index n) {
  return UnitaryMatrix(CMatrix::Identity(n, n), true, Unchecked{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(m_.adjoint(), special_, Unchecked{});
}

UnitaryMatrix UnitaryMatrix::times(const UnitaryMatrix &other,
                                   const Tolerance &tol) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dimension mismatch in product");
  }
  return UnitaryMatrix(m_ * other.m_, tol, special_ && other.special_);
}

double arg_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * M_PI;
  if (a >= 2 * M_PI) a -= 2 * M_PI;
  return a;
}

UnitaryEigen eig_unitary(const UnitaryMatrix &u, const Tolerance &tol) {
  const Eigen::Index n = u.dim();
  Eigen::ComplexSchur<CMatrix> schur(n);
  schur.compute(u.mat(), true);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence,
                "Schur iteration did not converge in eig_unitary");
  }
  const CMatrix &t = schur.matrixT();
  const CMatrix &z = schur.matrixU();

  std::vector<Complex> raw(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex l = t(j, j);
    const double r = std::abs(l);
    if (std::abs(r - 1.0) > tol.eps_spec) {
      throw Error(ErrorCode::NonConvergence,
                  "eigenvalue off the unit circle in eig_unitary");
    }
    raw[j] = l / r;
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return arg_2pi(raw[a]) > arg_2pi(raw[b]);
  });

  UnitaryEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = raw[order[k]];
    out.vectors.col(k) = z.col(order[k]);
  }
  return out;
}

SymmetricUnitaryEigen diag_symmetric_unitary(const UnitaryMatrix &m,
                                             const Tolerance &tol) {
  const Eigen::Index n = m.dim();
  const CMatrix &mm = m.mat();
  if ((mm - mm.transpose()).norm() > tol.eps_spec * n) {
    throw Error(ErrorCode::NotSymmetric,
                "diag_symmetric_unitary requires M = M^T");
  }
  const RMatrix a = 0.5 * (mm.real() + mm.real().transpose());
  const RMatrix b = 0.5 * (mm.imag() + mm.imag().transpose());

  Eigen::SelfAdjointEigenSolver<RMatrix> ea(a);
  if (ea.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence,
                "symmetric eigensolver failed on Re M");
  }
  RMatrix q = ea.eigenvectors();
  const RVector &ev = ea.eigenvalues();  // ascending
  const double gap = tol.eps_spec * std::max(1.0, ev.cwiseAbs().maxCoeff());

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && ev(end) - ev(end - 1) <= gap) ++end;
    const Eigen::Index len = end - start;
    if (len > 1) {
      const RMatrix qc = q.middleCols(start, len);
      RMatrix bc = qc.transpose() * b * qc;
      bc = 0.5 * (bc + bc.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<RMatrix> eb(bc);
      if (eb.info() != Eigen::Success) {
        throw Error(ErrorCode::NonConvergence,
                    "symmetric eigensolver failed on an Im M cluster");
      }
      q.middleCols(start, len) = qc * eb.eigenvectors();
    }
    start = end;
  }

  SymmetricUnitaryEigen out;
  const CMatrix qc = q.cast<Complex>();
  const CMatrix d = qc.transpose() * mm * qc;
  out.values.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex l = d(j, j);
    out.values[j] = l / std::abs(l);
  }
  out.q = std::move(q);
  return out;
}

CMatrix cs_block(const std::vector<double> &x) {
  const Eigen::Index m = static_cast<Eigen::Index>(x.size());
  CMatrix out = CMatrix::Zero(2 * m, 2 * m);
  const Complex i(0.0, 1.0);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double c = std::cos(M_PI * x[j]);
    const double s = std::sin(M_PI * x[j]);
    out(j, j) = c;
    out(m + j, m + j) = c;
    out(j, m + j) = i * s;
    out(m + j, j) = i * s;
  }
  return out;
}

CSD csd_2block(const UnitaryMatrix &u, const Tolerance &tol) {
  (void)tol;
  const Eigen::Index big = u.dim();
  if (big % 2 != 0) {
    throw Error(ErrorCode::DimensionOdd,
                "cosine-sine decomposition needs an even dimension");
  }
  const Eigen::Index m = big / 2;
  const CMatrix &uu = u.mat();
  const CMatrix u11 = uu.topLeftCorner(m, m);
  const CMatrix u12 = uu.topRightCorner(m, m);
  const CMatrix u21 = uu.bottomLeftCorner(m, m);
  const CMatrix u22 = uu.bottomRightCorner(m, m);
  const Complex i(0.0, 1.0);

  Eigen::JacobiSVD<CMatrix> svd(u11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // Ascending cosines so that the angles come out descending.
  CMatrix p = svd.matrixU().rowwise().reverse();
  const CMatrix v = svd.matrixV().rowwise().reverse();
  const RVector c = svd.singularValues().reverse();
  CMatrix r = v.adjoint();

  // u21 R^dagger = Q (i S): its columns are orthogonal with norms sin(theta).
  // Householder QR yields a unitary Q and a diagonal triangular factor, and
  // completes Q where a sine vanishes.
  Eigen::HouseholderQR<CMatrix> qr(u21 * v);
  CMatrix q = qr.householderQ();
  const CMatrix tri = qr.matrixQR().triangularView<Eigen::Upper>();
  RVector s(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex z = tri(j, j);
    const double a = std::abs(z);
    s(j) = a;
    if (a > 0) q.col(j) *= (z / a) / i;
  }

  CMatrix t(m, m);
  const CMatrix top = p.adjoint() * u12;
  const CMatrix bottom = q.adjoint() * u22;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (s(j) > c(j)) {
      t.row(j) = top.row(j) / (i * s(j));
    } else {
      t.row(j) = bottom.row(j) / c(j);
    }
  }

  std::vector<double> x(m);
  for (Eigen::Index j = 0; j < m; ++j) x[j] = std::atan2(s(j), c(j)) / M_PI;
  std::vector<Eigen::Index> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return x[a] > x[b]; });

  CSD out;
  out.p.resize(m, m);
  out.q.resize(m, m);
  out.r.resize(m, m);
  out.s.resize(m, m);
  out.x.resize(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto j = order[k];
    out.p.col(k) = p.col(j);
    out.q.col(k) = q.col(j);
    out.r.row(k) = r.row(j);
    out.s.row(k) = t.row(j);
    out.x[k] = std::clamp(x[j], 0.0, 0.5);
  }
  return out;
}

UnitaryMatrix haar_unitary(Eigen::Index n, std::uint64_t seed, bool special) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "haar_unitary needs n >= 1");
  }
  if (n == 1 && special) return UnitaryMatrix::identity(1);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      const double re = normal(gen);
      const double im = normal(gen);
      z(row, col) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix &packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = packed(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  if (special) {
    const Complex det = q.determinant();
    q *= std::polar(1.0, -std::arg(det) / static_cast<double>(n));
  }
  return UnitaryMatrix(std::move(q), Tolerance{}, special);
}

RMatrix haar_orthogonal(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RMatrix z(n, n);
  for (Eigen::Index col = 0; col < n; ++col)
    for (Eigen::Index row = 0; row < n; ++row) z(row, col) = normal(gen);
  Eigen::HouseholderQR<RMatrix> qr(z);
  RMatrix q = qr.householderQ();
  for (Eigen::Index j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

CMatrix nearest_unitary(const CMatrix &a) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

RMatrix nearest_orthogonal(const RMatrix &a) {
  Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

CMatrix block_diag(const CMatrix &a, const CMatrix &b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix expi_hermitian(const CMatrix &h) {
  const CMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "Hermitian eigensolver failed");
  }
  CVector phases(herm.rows());
  for (Eigen::Index j = 0; j < herm.rows(); ++j)
    phases(j) = std::polar(1.0, es.eigenvalues()(j));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace kakpair
