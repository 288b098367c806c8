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

#include "kakpair/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace kakpair {

namespace {

void check_dim(const UnitaryMatrix &u, const PairType &pair) {
  if (u.dim() != pair.matrix_dim()) {
    std::ostringstream os;
    os << "matrix of dimension " << u.dim() << " does not match pair "
       << to_string(pair.kind) << " with m = " << pair.m;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

CMatrix theta_raw(const CMatrix &u, const PairType &pair) {
  const Eigen::Index m = pair.m;
  switch (pair.kind) {
    case PairKind::AI:
      return u.conjugate();
    case PairKind::AII: {
      // Omega [[A, B], [C, D]]^- Omega^{-1} = [[D, -C], [-B, A]]^-.
      const CMatrix c = u.conjugate();
      CMatrix out(2 * m, 2 * m);
      out.topLeftCorner(m, m) = c.bottomRightCorner(m, m);
      out.topRightCorner(m, m) = -c.bottomLeftCorner(m, m);
      out.bottomLeftCorner(m, m) = -c.topRightCorner(m, m);
      out.bottomRightCorner(m, m) = c.topLeftCorner(m, m);
      return out;
    }
    case PairKind::AIII: {
      CMatrix out = u;
      out.topRightCorner(m, m) *= -1.0;
      out.bottomLeftCorner(m, m) *= -1.0;
      return out;
    }
  }
  return u;
}

std::vector<double> spectrum_fractions(const std::vector<Complex> &values) {
  std::vector<double> t(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    t[j] = std::arg(values[j]) / (2 * M_PI);
  return t;
}

AlcovePoint aiii_corner_invariant(const UnitaryMatrix &u) {
  const Eigen::Index m = u.dim() / 2;
  const RVector c = Eigen::JacobiSVD<CMatrix>(u.mat().topLeftCorner(m, m))
                        .singularValues();
  const RVector s = Eigen::JacobiSVD<CMatrix>(u.mat().bottomLeftCorner(m, m))
                        .singularValues();
  AlcovePoint p{PairType(PairKind::AIII, static_cast<int>(m)),
                std::vector<double>(m)};
  for (Eigen::Index i = 0; i < m; ++i)
    p.x[i] = std::clamp(std::atan2(s(i), c(m - 1 - i)) / M_PI, 0.0, 0.5);
  return p;
}

}  // namespace

double CartanFactors::residual(const CMatrix &u) const {
  return frobenius_distance(k1.mat() * alcove_exp(x).mat() * k2.mat(), u);
}

CMatrix omega_matrix(Eigen::Index m) {
  CMatrix o = CMatrix::Zero(2 * m, 2 * m);
  o.topRightCorner(m, m) = -CMatrix::Identity(m, m);
  o.bottomLeftCorner(m, m) = CMatrix::Identity(m, m);
  return o;
}

UnitaryMatrix apply_involution(const UnitaryMatrix &u, const PairType &pair) {
  check_dim(u, pair);
  // theta maps unitaries to unitaries exactly (it only permutes, negates and
  // conjugates entries), so the input's certificate carries over.
  return UnitaryMatrix(theta_raw(u.mat(), pair),
                       Tolerance{1.0, 1.0, 1.0}, false);
}

UnitaryMatrix cartan_double(const UnitaryMatrix &u, const PairType &pair,
                            const Tolerance &tol) {
  check_dim(u, pair);
  const CMatrix t = theta_raw(u.mat(), pair);
  return UnitaryMatrix(u.mat() * t.adjoint(), tol, false);
}

EigenPairing pair_double_spectrum(const std::vector<Complex> &values,
                                  double radius) {
  if (values.size() % 2 != 0)
    throw Error(ErrorCode::PairingFailure, "odd number of eigenvalues");
  EigenPairing out;
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = values.size();
    double best_d = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(values[i] - values[j]);
      if (best == values.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == values.size() || best_d > radius) {
      std::ostringstream os;
      os << "eigenvalue " << values[i] << " has no partner within " << radius;
      throw Error(ErrorCode::PairingFailure, os.str());
    }
    used[best] = true;
    const Complex mid = values[i] + values[best];
    out.representatives.push_back(mid / std::abs(mid));
    out.max_separation = std::max(out.max_separation, best_d);
  }
  return out;
}

AlcovePoint a_invariant(const UnitaryMatrix &u, const PairType &pair,
                        const Tolerance &tol) {
  check_dim(u, pair);
  switch (pair.kind) {
    case PairKind::AI: {
      const auto eig = eig_unitary(cartan_double(u, pair, tol), tol);
      return reduce_type_A(spectrum_fractions(eig.values), pair.kind, tol);
    }
    case PairKind::AII: {
      const auto eig = eig_unitary(cartan_double(u, pair, tol), tol);
      const auto paired = pair_double_spectrum(eig.values, 10 * tol.eps_spec);
      return reduce_type_A(spectrum_fractions(paired.representatives),
                           pair.kind, tol);
    }
    case PairKind::AIII:
      return aiii_corner_invariant(u);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pair");
}

AlcovePoint a_invariant_aiii_spectral(const UnitaryMatrix &u,
                                      const Tolerance &tol) {
  const PairType pair = PairType::for_matrix(PairKind::AIII, u.dim());
  const auto eig = eig_unitary(cartan_double(u, pair, tol), tol);
  // e^{2 pi i x} and e^{-2 pi i x} both fold to x.
  const AlcovePoint folded = reduce_type_C(spectrum_fractions(eig.values));
  AlcovePoint p{pair, std::vector<double>(pair.m)};
  for (int j = 0; j < pair.m; ++j) {
    const double a = folded.x[2 * j];
    const double b = folded.x[2 * j + 1];
    // Near 0 and 1/2 the pair e^{+-2 pi i x} is a near-double eigenvalue,
    // whose angles are only determined to O(sqrt(eps)).
    const double slack = 10 * tol.eps_spec + 10 * std::sqrt(tol.eps_spec) *
                                                 (a < 0.01 || a > 0.49);
    if (std::abs(a - b) > slack) {
      std::ostringstream os;
      os << "Cartan-double spectrum is not closed under inversion (" << a
         << " vs " << b << ")";
      throw Error(ErrorCode::SpectralMismatch, os.str());
    }
    p.x[j] = 0.5 * (a + b);
  }
  return p;
}

UnitaryMatrix alcove_exp(const AlcovePoint &x, const Tolerance &tol) {
  if (!in_alcove(x.pair, x.x, tol.eps_spec)) {
    std::ostringstream os;
    os << "point (";
    for (std::size_t i = 0; i < x.x.size(); ++i)
      os << (i ? ", " : "") << x.x[i];
    os << ") is not in the " << to_string(x.pair.kind) << " alcove";
    throw Error(ErrorCode::NotInAlcove, os.str());
  }
  const Eigen::Index m = x.pair.m;
  CMatrix out;
  switch (x.pair.kind) {
    case PairKind::AI:
    case PairKind::AII: {
      CVector d(m);
      for (Eigen::Index j = 0; j < m; ++j) d(j) = std::polar(1.0, M_PI * x.x[j]);
      const CMatrix dm = d.asDiagonal();
      out = x.pair.kind == PairKind::AI ? dm : block_diag(dm, dm);
      break;
    }
    case PairKind::AIII:
      out = cs_block(x.x);
      break;
  }
  // det = e^{i pi sum x} = 1 exactly in exact arithmetic; allow the slack
  // permitted by in_alcove.
  Tolerance t = tol;
  t.eps_spec = std::max(tol.eps_spec, 4 * M_PI * tol.eps_spec);
  return UnitaryMatrix(std::move(out), t, true);
}

CartanFactors decompose_AI(const UnitaryMatrix &u, const Tolerance &tol) {
  const PairType pair = PairType::for_matrix(PairKind::AI, u.dim());
  const Eigen::Index n = u.dim();
  const UnitaryMatrix m = cartan_double(u, pair, tol);
  const auto sym = diag_symmetric_unitary(m, tol);
  const auto red = reduce_type_A_tracked(spectrum_fractions(sym.values), tol);

  RMatrix o1(n, n);
  CVector dinv(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    o1.col(k) = sym.q.col(red.source[k]);
    dinv(k) = std::polar(1.0, -M_PI * red.x[k]);
  }
  // O2 = D^{-1} O1^T U is real orthogonal in exact arithmetic.
  const CMatrix o2c = dinv.asDiagonal() * o1.transpose().cast<Complex>() *
                      u.mat();
  RMatrix o2 = nearest_orthogonal(o2c.real());
  o1 = nearest_orthogonal(o1);
  if (o1.determinant() < 0) {
    o1.col(0) *= -1.0;
    o2.row(0) *= -1.0;
  }
  AlcovePoint x{pair, red.x};
  return {pair, UnitaryMatrix(o1.cast<Complex>(), tol, true),
          UnitaryMatrix(o2.cast<Complex>(), tol, true), std::move(x)};
}

CartanFactors decompose_AIII(const UnitaryMatrix &u, const Tolerance &tol) {
  const PairType pair = PairType::for_matrix(PairKind::AIII, u.dim());
  const CSD csd = csd_2block(u, tol);
  CMatrix k1 = block_diag(csd.p, csd.q);
  CMatrix k2 = block_diag(csd.r, csd.s);
  // Move the determinant of k1 into k2 by a central phase.
  const double alpha =
      std::arg(k1.determinant()) / static_cast<double>(u.dim());
  k1 *= std::polar(1.0, -alpha);
  k2 *= std::polar(1.0, alpha);
  return {pair, UnitaryMatrix(std::move(k1), tol, true),
          UnitaryMatrix(std::move(k2), tol, true), AlcovePoint{pair, csd.x}};
}

CartanFactors decompose(const UnitaryMatrix &u, const PairType &pair,
                        const Tolerance &tol) {
  if (u.dim() != pair.matrix_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimension does not match pair");
  switch (pair.kind) {
    case PairKind::AI:
      return decompose_AI(u, tol);
    case PairKind::AIII:
      return decompose_AIII(u, tol);
    case PairKind::AII:
      break;
  }
  throw Error(ErrorCode::Unsupported,
              "factor recovery is not available for AII; use invariant");
}

bool in_K(const CMatrix &k, const PairType &pair, const Tolerance &tol) {
  const Eigen::Index n = pair.matrix_dim();
  if (k.rows() != n || k.cols() != n) return false;
  const double lim = tol.eps_ortho * static_cast<double>(n);
  if (unitarity_defect(k) > lim) return false;
  if (std::abs(k.determinant() - Complex(1.0, 0.0)) > tol.eps_spec)
    return false;
  return (theta_raw(k, pair) - k).norm() <= lim;
}

UnitaryMatrix random_k_element(const PairType &pair, std::uint64_t seed) {
  const Eigen::Index n = pair.matrix_dim();
  const Eigen::Index m = pair.m;
  switch (pair.kind) {
    case PairKind::AI:
      return UnitaryMatrix(haar_orthogonal(n, seed).cast<Complex>(),
                           Tolerance{}, true);
    case PairKind::AIII: {
      CMatrix k = block_diag(haar_unitary(m, seed).mat(),
                             haar_unitary(m, seed ^ 0x9e3779b97f4a7c15ULL).mat());
      k *= std::polar(1.0, -std::arg(k.determinant()) / static_cast<double>(n));
      return UnitaryMatrix(std::move(k), Tolerance{}, true);
    }
    case PairKind::AII: {
      std::mt19937_64 gen(seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      CMatrix h(n, n);
      for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
          h(r, c) = Complex(normal(gen), normal(gen));
      h = 0.5 * (h + h.adjoint()).eval();
      // Project iH onto the fixed algebra of theta, then exponentiate.
      const CMatrix x = CMatrix(Complex(0, 1) * h);
      const CMatrix y = 0.5 * (x + theta_raw(x, pair));
      return UnitaryMatrix(expi_hermitian(Complex(0, -1) * y), Tolerance{},
                           true);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pair");
}

}  // namespace kakpair
