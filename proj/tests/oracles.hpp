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

// Brute-force reference implementations shared by the unit tests and the
// acceptance binary. They trade speed for independence from the library.

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "kakpair/exact.hpp"
#include "kakpair/polytope.hpp"

namespace kakpair {
namespace oracle {

/// p in conv(points) via Caratheodory: some full simplex of the point set
/// contains p. Assumes the hull is full-dimensional.
inline bool hull_contains(const std::vector<Eigen::VectorXd> &points,
                          const Eigen::VectorXd &p, double eps = 1e-9) {
  const int d = static_cast<int>(p.size());
  const int n = static_cast<int>(points.size());
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  if (n < d + 1) return false;
  while (true) {
    Eigen::MatrixXd a(d + 1, d + 1);
    Eigen::VectorXd b(d + 1);
    for (int j = 0; j <= d; ++j) {
      a.block(0, j, d, 1) = points[idx[j]];
      a(d, j) = 1.0;
    }
    b.head(d) = p;
    b(d) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.isInvertible()) {
      const Eigen::VectorXd lam = lu.solve(b);
      if (lam.minCoeff() >= -eps) return true;
    }
    int k = d;
    while (k >= 0 && idx[k] == n - (d + 1 - k)) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int j = k + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Eigen::VectorXd> to_eigen(const std::vector<RatVec> &v) {
  std::vector<Eigen::VectorXd> out;
  for (const auto &x : v) {
    Eigen::VectorXd e(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
      e(static_cast<Eigen::Index>(i)) = to_double(x[i]);
    out.push_back(e);
  }
  return out;
}

/// y is fat iff (pi_1(p), y) lies in Q for every input point p; convexity
/// extends that to all of pi_1(Q).
inline bool is_fat(const std::vector<Eigen::VectorXd> &points, int d1,
                   const Eigen::VectorXd &y) {
  for (const auto &p : points) {
    Eigen::VectorXd z(p.size());
    z.head(d1) = p.head(d1);
    z.tail(y.size()) = y;
    if (!hull_contains(points, z)) return false;
  }
  return true;
}

/// Random polytope with `count` points in [0, 1]^dim, coordinates of
/// denominator `den`.
inline std::vector<RatVec> random_points(int dim, int count, std::uint64_t seed,
                                         int den = 13) {
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<int> u(0, den);
  std::vector<RatVec> pts(count, RatVec(dim));
  for (auto &p : pts)
    for (auto &c : p) c = Rational(u(g), den);
  return pts;
}

/// A full-dimensional polytope in [0, 1]^dim with a typically nonempty
/// fat set over the last coordinate: (random base) x [lo, hi], with the
/// fibres over some base points stretched, and occasionally one fully
/// random point that may add a vertex to the base.
inline std::vector<RatVec> random_fat_candidate(int dim, std::uint64_t seed,
                                                int den = 13) {
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<int> u(0, den), coin(0, 2);
  for (;;) {
    const auto base = random_points(dim - 1, dim, g(), den);
    int lo = u(g), hi = u(g);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) continue;
    std::vector<RatVec> pts;
    for (const auto &b : base) {
      for (int y : {lo, hi}) {
        RatVec p = b;
        p.push_back(Rational(y, den));
        pts.push_back(p);
      }
      if (coin(g) != 0) {
        RatVec p = b;
        p.push_back(Rational(u(g), den));
        pts.push_back(p);
      }
    }
    if (coin(g) == 0)
      for (const auto &e : random_points(dim, 1, g(), den)) pts.push_back(e);
    if (VPolytope(dim, pts).affine_dim() == dim) return pts;
  }
}

struct GridResult {
  int checked = 0;
  int mismatches = 0;
  int fat = 0;  ///< grid points the oracle reports as fat
};

/// Compares fat_points(Q, d1, 1) against is_fat on the grid k/res of
/// [0, 1] (the range of the random polytopes).
inline GridResult compare_fat_1d(const std::vector<RatVec> &points,
                                 const VPolytope &fat, int d1, int res) {
  const auto pts = to_eigen(points);
  GridResult r;
  for (int k = 0; k <= res; ++k) {
    Eigen::VectorXd y(1);
    y(0) = static_cast<double>(k) / res;
    const bool expect = is_fat(pts, d1, y);
    const bool got = !fat.is_empty() && fat.contains(RatVec{Rational(k, res)});
    ++r.checked;
    r.fat += expect;
    r.mismatches += expect != got;
  }
  return r;
}

}  // namespace oracle
}  // namespace kakpair
