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

#include "kakpair/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "kakpair/products.hpp"
#include "solver.hpp"

namespace kakpair {

namespace {

const Complex kI(0.0, 1.0);

std::uint64_t fnv1a(const CMatrix &m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double parts[2] = {m(r, c).real(), m(r, c).imag()};
      unsigned char bytes[sizeof parts];
      std::memcpy(bytes, parts, sizeof parts);
      for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
    }
  }
  return h;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Real skew-symmetric 4x4 matrix from 6 parameters, exponentiated.
RMatrix so4_exp(const RVector &p, Eigen::Index offset) {
  RMatrix a = RMatrix::Zero(4, 4);
  Eigen::Index k = offset;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      a(i, j) = p(k);
      a(j, i) = -p(k);
      ++k;
    }
  return expi_hermitian(CMatrix(-kI * a.cast<Complex>())).real();
}

CMatrix su2_normalize(const CMatrix &a) {
  CMatrix u = nearest_unitary(a);
  return u / std::sqrt(u.determinant());
}

}  // namespace

UnitaryMatrix berkeley_gate() {
  const double c1 = std::cos(M_PI / 8), s1 = std::sin(M_PI / 8);
  const double c3 = std::cos(3 * M_PI / 8), s3 = std::sin(3 * M_PI / 8);
  CMatrix b = CMatrix::Zero(4, 4);
  b(0, 0) = c1;
  b(0, 3) = kI * s1;
  b(1, 1) = c3;
  b(1, 2) = kI * s3;
  b(2, 1) = kI * s3;
  b(2, 2) = c3;
  b(3, 0) = kI * s1;
  b(3, 3) = c1;
  return UnitaryMatrix(std::move(b), Tolerance{}, true);
}

UnitaryMatrix magic_matrix() {
  CMatrix q(4, 4);
  q << 1, 1, kI, kI,
      -1, 1, kI, -kI,
      1, -1, kI, -kI,
      1, 1, -kI, -kI;
  q *= 0.5;
  return UnitaryMatrix(std::move(q), Tolerance{}, true);
}

CMatrix LocalGate::matrix() const { return phase * kron(a, b); }

LocalGate kron_factor(const CMatrix &l, double tol) {
  if (l.rows() != 4 || l.cols() != 4)
    throw Error(ErrorCode::DimensionMismatch, "kron_factor needs a 4x4 matrix");
  CMatrix r(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = l(2 * i1 + i2, 2 * j1 + j2);
  Eigen::JacobiSVD<CMatrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s = std::sqrt(svd.singularValues()(0));
  CMatrix a(2, 2), b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = s * svd.matrixU()(2 * i + j, 0);
      b(i, j) = s * std::conj(svd.matrixV()(2 * i + j, 0));
    }
  LocalGate g{su2_normalize(a), su2_normalize(b), 1.0};
  g.phase = (kron(g.a, g.b).adjoint() * l).trace() / 4.0;
  g.phase /= std::abs(g.phase);
  const double err = frobenius_distance(g.matrix(), l);
  if (!(err <= tol)) {
    std::ostringstream os;
    os << "matrix is not a Kronecker product (residual " << err << ")";
    throw Error(ErrorCode::SynthesisFailure, os.str());
  }
  return g;
}

CMatrix SU4Circuit::matrix() const {
  const CMatrix b = berkeley_gate().mat();
  return l1.matrix() * b * l2.matrix() * b * l3.matrix();
}

SU4Circuit synth_su4(const UnitaryMatrix &target, const Tolerance &tol) {
  if (target.dim() != 4)
    throw Error(ErrorCode::DimensionMismatch, "synth_su4 needs a 4x4 target");
  const Complex det = target.mat().determinant();
  const Complex norm = std::polar(1.0, -std::arg(det) / 4.0);
  const CMatrix t = target.mat() * norm;
  const CMatrix q = magic_matrix().mat();
  const CMatrix bm = q.adjoint() * berkeley_gate().mat() * q;
  const CMatrix w = q.adjoint() * t * q;
  const CMatrix mw = w * w.transpose();

  // Unknowns: k = k0 exp(A) and O = o0 exp(A'); we want
  // (B_m k B_m)(B_m k B_m)^T = O (W W^T) O^T, which certifies
  // B_m k B_m = O W R for a real orthogonal R.
  const double limit = 1e-6 * 4;
  std::mt19937_64 gen(fnv1a(target.mat()));
  double best = INFINITY;
  for (int start = 0; start < 32; ++start) {
    const std::uint64_t s1 = gen(), s2 = gen();
    const RMatrix k0 = haar_orthogonal(4, s1);
    const RMatrix o0 = haar_orthogonal(4, s2);
    auto residual = [&](const RVector &p) {
      const CMatrix k = (k0 * so4_exp(p, 0)).cast<Complex>();
      const CMatrix o = (o0 * so4_exp(p, 6)).cast<Complex>();
      const CMatrix mid = bm * k * bm;
      const CMatrix diff = mid * mid.transpose() - o * mw * o.transpose();
      RVector r(32);
      for (int i = 0; i < 16; ++i) {
        r(2 * i) = diff(i / 4, i % 4).real();
        r(2 * i + 1) = diff(i / 4, i % 4).imag();
      }
      return r;
    };
    const auto lm =
        detail::levenberg_marquardt(residual, RVector::Zero(12), 1e-14, 300);
    if (!(lm.cost < 1e-9)) {
      best = std::min(best, lm.cost);
      continue;
    }
    const RMatrix k = k0 * so4_exp(lm.x, 0);
    const RMatrix o = o0 * so4_exp(lm.x, 6);
    const CMatrix mid = bm * k.cast<Complex>() * bm;
    // R = (O W)^{-1} mid is real orthogonal in exact arithmetic.
    const CMatrix ow = o.cast<Complex>() * w;
    const RMatrix r = nearest_orthogonal((ow.adjoint() * mid).real());
    // W = O^T mid R^T.
    SU4Circuit c;
    try {
      c.l1 = kron_factor(q * o.transpose().cast<Complex>() * q.adjoint(),
                         1e-7);
      c.l2 = kron_factor(q * k.cast<Complex>() * q.adjoint(), 1e-7);
      c.l3 = kron_factor(q * r.transpose().cast<Complex>() * q.adjoint(),
                         1e-7);
    } catch (const Error &) {
      continue;
    }
    c.phase = norm;
    const double err = frobenius_distance(c.matrix(), c.phase * target.mat());
    best = std::min(best, err);
    if (err <= limit) return c;
  }
  (void)tol;
  std::ostringstream os;
  os << "synth_su4 found no verified circuit in 32 starts (best residual "
     << best << ")";
  throw Error(ErrorCode::SynthesisFailure, os.str());
}

CMatrix aiii_corner(const std::vector<double> &x, const GatePair &k) {
  const Eigen::Index m = static_cast<Eigen::Index>(x.size());
  RVector c(m), s(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    c(j) = std::cos(M_PI * x[j]);
    s(j) = std::sin(M_PI * x[j]);
  }
  return c.asDiagonal() * k.k1 * c.asDiagonal() -
         s.asDiagonal() * k.k2 * s.asDiagonal();
}

namespace {

CMatrix rot(double a) {
  CMatrix r(2, 2);
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

/// Phase-shifted X rotation family, K2 = K1^dagger (valid for t >= 1/8).
GatePair family_x(double s, double tau) {
  CMatrix k1(2, 2);
  k1 << std::cos(tau), kI * std::sin(tau), kI * std::sin(tau), std::cos(tau);
  k1 *= std::polar(1.0, s);
  return {k1, k1.adjoint()};
}

/// SO(2) x SO(2) family (valid for t <= 1/8).
GatePair family_rot(double s, double tau) { return {rot(s), rot(tau)}; }

double sigma_error(const CMatrix &m, double s1, double s2) {
  const RVector sv = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  return std::max(std::abs(sv(0) - s1), std::abs(sv(1) - s2));
}

}  // namespace

GatePair synth_aiii_2x2(double t, double sigma1, double sigma2) {
  constexpr double slack = 1e-12;
  if (!(t >= -slack && t <= 0.25 + slack))
    throw Error(ErrorCode::InvalidArgument, "t must lie in [0, 1/4]");
  if (!(sigma1 <= 1 + slack && sigma1 >= sigma2 - slack && sigma2 >= -slack))
    throw Error(ErrorCode::InvalidArgument,
                "need 1 >= sigma1 >= sigma2 >= 0");
  t = std::clamp(t, 0.0, 0.25);
  sigma1 = std::clamp(sigma1, 0.0, 1.0);
  sigma2 = std::clamp(sigma2, 0.0, sigma1);
  const std::vector<double> x{0.5 - t, t};

  if (sigma2 == 1.0) {
    // M = cos^2 D + sin^2 D = I.
    return {CMatrix::Identity(2, 2), -CMatrix::Identity(2, 2)};
  }

  const double half_norm = 0.5 * (sigma1 * sigma1 + sigma2 * sigma2);
  const double prod = sigma1 * sigma2;
  using Family = GatePair (*)(double, double);
  std::vector<Family> families{family_x, family_rot};
  if (t < 0.125) std::swap(families[0], families[1]);

  GatePair best_pair;
  double best = INFINITY;
  for (Family fam : families) {
    for (double sign : {1.0, -1.0}) {
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          auto residual = [&](const RVector &p) {
            const CMatrix m = aiii_corner(x, fam(p(0), p(1)));
            const Complex d = m.determinant();
            RVector r(3);
            r << 0.5 * m.squaredNorm() - half_norm, d.real() - sign * prod,
                d.imag();
            return r;
          };
          RVector p0(2);
          p0 << (i + 0.5) * M_PI / 6, (j + 0.5) * M_PI / 6;
          const auto lm = detail::levenberg_marquardt(residual, p0, 1e-15, 100);
          const GatePair g = fam(lm.x(0), lm.x(1));
          const double err = sigma_error(aiii_corner(x, g), sigma1, sigma2);
          if (err < best) {
            best = err;
            best_pair = g;
          }
          if (best <= 1e-10) return best_pair;
        }
      }
    }
  }
  if (best <= 1e-7) return best_pair;
  std::ostringstream os;
  os << "no solution for t = " << t << ", sigma = (" << sigma1 << ", "
     << sigma2 << "); best singular-value error " << best;
  throw Error(ErrorCode::SolverFailure, os.str());
}

CMatrix AIIIFactors::matrix() const {
  return k1.mat() * v.mat() * k2.mat() * v_inv.mat() * k3.mat();
}

AlcovePoint default_fixed_line_point(int m) {
  const PairType pair(PairKind::AIII, m);
  const int p = m / 2;
  AlcovePoint x{pair, std::vector<double>(m, 0.25)};
  for (int j = 1; j <= p; ++j) {
    const double t = static_cast<double>(j) / (4.0 * (p + 1));
    x.x[j - 1] = 0.5 - t;
    x.x[m - j] = t;
  }
  return x;
}

AIIIFactors synth_aiii(const UnitaryMatrix &target,
                       const std::optional<AlcovePoint> &x_star,
                       const Tolerance &tol) {
  const PairType pair = PairType::for_matrix(PairKind::AIII, target.dim());
  const int m = pair.m;
  const AlcovePoint xs = x_star ? *x_star : default_fixed_line_point(m);
  if (xs.pair != pair || !in_alcove(pair, xs.x, tol.eps_spec) ||
      !in_B(xs, tol))
    throw Error(ErrorCode::NotInAlcove,
                "x_star must be an AIII alcove point on the fixed line");

  const RVector sigma =
      Eigen::JacobiSVD<CMatrix>(target.mat().topLeftCorner(m, m))
          .singularValues();
  CMatrix k = CMatrix::Zero(2 * m, 2 * m);
  const int p = m / 2;
  for (int j = 0; j < p; ++j) {
    const int a = j, b = m - 1 - j;
    const GatePair g = synth_aiii_2x2(xs.x[b], sigma(2 * j), sigma(2 * j + 1));
    const int idx[2] = {a, b};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        k(idx[r], idx[c]) = g.k1(r, c);
        k(m + idx[r], m + idx[c]) = -g.k2(r, c);
      }
  }
  if (m % 2 == 1) {
    // x = 1/4: the corner is (K1 - K2)/2 = i sin(phi).
    const double phi = std::asin(std::clamp(sigma(m - 1), 0.0, 1.0));
    k(p, p) = std::polar(1.0, phi);
    k(m + p, m + p) = -std::polar(1.0, -phi);
  }
  k *= std::polar(1.0, -std::arg(k.determinant()) / (2.0 * m));

  const UnitaryMatrix v = alcove_exp(xs, tol);
  const UnitaryMatrix kk(k, tol, true);
  const UnitaryMatrix y(v.mat() * k * v.mat().adjoint(), tol, true);
  const CartanFactors fu = decompose_AIII(target, tol);
  const CartanFactors fy = decompose_AIII(y, tol);
  AIIIFactors out{UnitaryMatrix(fu.k1.mat() * fy.k1.mat().adjoint(), tol, true),
                  v,
                  kk,
                  v.adjoint(),
                  UnitaryMatrix(fy.k2.mat().adjoint() * fu.k2.mat(), tol, true),
                  xs};
  const double err = frobenius_distance(out.matrix(), target.mat());
  if (!(err <= 1e-6 * 2 * m)) {
    std::ostringstream os;
    os << "synth_aiii reconstruction residual " << err << " exceeds bound";
    throw Error(ErrorCode::SynthesisFailure, os.str());
  }
  return out;
}

CMatrix ZXZFactors::matrix() const {
  const Eigen::Index h = ap.rows();
  const CMatrix id = CMatrix::Identity(h, h);
  CMatrix had(2, 2);
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  const CMatrix hi = kron(had, id);
  return block_diag(id, ap) * hi * block_diag(id, bp) * hi * block_diag(s, cp);
}

ZXZFactors block_zxz(const UnitaryMatrix &u, const Tolerance &tol) {
  const Eigen::Index dim = u.dim();
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw Error(ErrorCode::InvalidArgument,
                "block_zxz needs a 2^n x 2^n matrix with n >= 1");
  const CSD csd = csd_2block(u, tol);
  const Eigen::Index h = dim / 2;
  CVector e1(h), e2(h);
  for (Eigen::Index j = 0; j < h; ++j) {
    e1(j) = std::polar(1.0, M_PI * csd.x[j]);
    e2(j) = std::polar(1.0, -2 * M_PI * csd.x[j]);
  }
  ZXZFactors z;
  z.n = 0;
  for (Eigen::Index d = dim; d > 1; d /= 2) ++z.n;
  z.ap = csd.q * csd.p.adjoint();
  z.bp = csd.p * e2.asDiagonal() * csd.p.adjoint();
  z.s = csd.p * e1.asDiagonal() * csd.r;
  z.cp = csd.p * e1.asDiagonal() * csd.s;
  return z;
}

}  // namespace kakpair
