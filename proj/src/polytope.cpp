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

#include "kakpair/polytope.hpp"

#include <algorithm>
#include <functional>

#include "kakpair/errors.hpp"

namespace kakpair {

namespace {

constexpr int kMaxDim = 4;

void dedupe(std::vector<RatVec> &pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t> &)>
                         &f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Affine hull of a point set: the hull is parameterized injectively by the
/// coordinates listed in `pivots`.
struct AffineHull {
  RatVec base;
  std::vector<std::size_t> pivots;
  RatMat eq_a;  // eq_a x = eq_b cuts out the hull
  RatVec eq_b;
};

AffineHull affine_hull(const std::vector<RatVec> &pts, int dim) {
  AffineHull h;
  h.base = pts.front();
  RatMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = pts[i][j] - h.base[j];
    diffs.push_back(std::move(d));
  }
  h.pivots = rref(diffs);
  // Normals of the hull: null space of the direction rows.
  RatMat dir = diffs.empty() ? RatMat{RatVec(dim, Rational(0))} : diffs;
  RatVec part;
  std::vector<RatVec> normals;
  solve_affine(dir, RatVec(dir.size(), Rational(0)), part, normals);
  for (auto &nrm : normals) {
    h.eq_b.push_back(dot(nrm, h.base));
    h.eq_a.push_back(std::move(nrm));
  }
  return h;
}

RatVec restrict(const RatVec &x, const std::vector<std::size_t> &cols) {
  RatVec y(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) y[i] = x[cols[i]];
  return y;
}

struct Facet {
  RatVec a;  // in hull coordinates
  Rational b;
  bool operator<(const Facet &o) const {
    return std::tie(a, b) < std::tie(o.a, o.b);
  }
  bool operator==(const Facet &o) const { return a == o.a && b == o.b; }
};

/// Facets of a full-dimensional point set in R^r.
std::vector<Facet> facets(const std::vector<RatVec> &ys, std::size_t r) {
  std::vector<Facet> out;
  for_each_subset(ys.size(), r, [&](const std::vector<std::size_t> &s) {
    RatMat rows;
    for (std::size_t k = 1; k < s.size(); ++k) {
      RatVec d(r);
      for (std::size_t j = 0; j < r; ++j) d[j] = ys[s[k]][j] - ys[s[0]][j];
      rows.push_back(std::move(d));
    }
    if (rows.empty()) rows.push_back(RatVec(r, Rational(0)));
    RatVec part;
    std::vector<RatVec> null;
    solve_affine(rows, RatVec(rows.size(), Rational(0)), part, null);
    if (null.size() != 1) return;
    Facet f{null.front(), 0};
    f.b = dot(f.a, ys[s[0]]);
    bool le = true, ge = true;
    for (const auto &y : ys) {
      const Rational v = dot(f.a, y);
      if (v > f.b) le = false;
      if (v < f.b) ge = false;
    }
    if (!le && !ge) return;
    if (!le) {
      for (auto &c : f.a) c = -c;
      f.b = -f.b;
    }
    // Normalize so the first nonzero coefficient has magnitude 1.
    const auto lead = std::find_if(f.a.begin(), f.a.end(),
                                   [](const Rational &c) { return c != 0; });
    const Rational scale = abs(*lead);
    for (auto &c : f.a) c /= scale;
    f.b /= scale;
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool HPolytope::contains(const RatVec &x) const {
  if (static_cast<int>(x.size()) != dim) return false;
  for (std::size_t i = 0; i < eq_a.size(); ++i)
    if (dot(eq_a[i], x) != eq_b[i]) return false;
  for (std::size_t i = 0; i < ineq_a.size(); ++i)
    if (dot(ineq_a[i], x) > ineq_b[i]) return false;
  return true;
}

VPolytope::VPolytope(int dim, std::vector<RatVec> points) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim)
    throw Error(ErrorCode::InvalidArgument,
                "polytope dimension must be in 1..4, got " +
                    std::to_string(dim));
  if (points.empty())
    throw Error(ErrorCode::InvalidArgument, "polytope needs a vertex");
  for (const auto &p : points)
    if (static_cast<int>(p.size()) != dim)
      throw Error(ErrorCode::InvalidArgument,
                  "vertex length does not match polytope dimension");
  dedupe(points);
  const AffineHull hull = affine_hull(points, dim);
  const std::size_t r = hull.pivots.size();
  if (r == 0) {
    vertices_ = std::move(points);
    return;
  }
  std::vector<RatVec> ys;
  for (const auto &p : points) ys.push_back(restrict(p, hull.pivots));
  const auto fs = facets(ys, r);
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatMat active;
    for (const auto &f : fs)
      if (dot(f.a, ys[i]) == f.b) active.push_back(f.a);
    if (rank(active) == r) vertices_.push_back(points[i]);
  }
}

VPolytope VPolytope::empty(int dim) {
  VPolytope p;
  p.dim_ = dim;
  return p;
}

int VPolytope::affine_dim() const {
  if (is_empty()) return -1;
  return static_cast<int>(affine_hull(vertices_, dim_).pivots.size());
}

HPolytope VPolytope::to_hrep() const {
  HPolytope h;
  h.dim = dim_;
  if (is_empty()) {
    // 0 <= -1.
    h.ineq_a.push_back(RatVec(dim_, Rational(0)));
    h.ineq_b.push_back(-1);
    return h;
  }
  const AffineHull hull = affine_hull(vertices_, dim_);
  h.eq_a = hull.eq_a;
  h.eq_b = hull.eq_b;
  const std::size_t r = hull.pivots.size();
  if (r == 0) return h;
  std::vector<RatVec> ys;
  for (const auto &p : vertices_) ys.push_back(restrict(p, hull.pivots));
  for (const auto &f : facets(ys, r)) {
    RatVec a(dim_, Rational(0));
    for (std::size_t j = 0; j < r; ++j) a[hull.pivots[j]] = f.a[j];
    h.ineq_a.push_back(std::move(a));
    h.ineq_b.push_back(f.b);
  }
  return h;
}

bool VPolytope::contains(const RatVec &x) const {
  return to_hrep().contains(x);
}

std::vector<RatVec> hrep_vertices(const HPolytope &h) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  const std::size_t eq_rank = rank(h.eq_a);
  std::vector<RatVec> out;
  if (eq_rank > d) return out;
  const std::size_t need = d - eq_rank;
  for_each_subset(h.ineq_a.size(), need,
                  [&](const std::vector<std::size_t> &s) {
                    RatMat a = h.eq_a;
                    RatVec b = h.eq_b;
                    for (auto i : s) {
                      a.push_back(h.ineq_a[i]);
                      b.push_back(h.ineq_b[i]);
                    }
                    if (a.empty()) {
                      a.push_back(RatVec(d, Rational(0)));
                      b.push_back(0);
                    }
                    RatVec x;
                    std::vector<RatVec> null;
                    if (!solve_affine(a, b, x, null) || !null.empty()) return;
                    if (h.contains(x)) out.push_back(std::move(x));
                  });
  dedupe(out);
  return out;
}

VPolytope project(const VPolytope &q, int first, int count) {
  if (first < 0 || count < 1 || first + count > q.dim())
    throw Error(ErrorCode::InvalidArgument, "bad projection range");
  if (q.is_empty()) return VPolytope::empty(count);
  std::vector<RatVec> pts;
  for (const auto &v : q.vertices())
    pts.emplace_back(v.begin() + first, v.begin() + first + count);
  return VPolytope(count, std::move(pts));
}

VPolytope fat_points(const VPolytope &q, int d1, int d2) {
  if (d1 < 1 || d2 < 1 || d1 + d2 != q.dim())
    throw Error(ErrorCode::InvalidArgument,
                "split must satisfy d1, d2 >= 1 and d1 + d2 = dim");
  if (q.is_empty()) return VPolytope::empty(d2);
  const HPolytope hq = q.to_hrep();
  const VPolytope base = project(q, 0, d1);

  // Fibre over v: a2 . y <= b - a1 . v for each constraint (a1, a2) <= b.
  HPolytope fib;
  fib.dim = d2;
  auto split = [&](const RatVec &a, const Rational &b, const RatVec &v,
                   RatVec &a2, Rational &rhs) {
    a2.assign(a.begin() + d1, a.end());
    rhs = b;
    for (int j = 0; j < d1; ++j) rhs -= a[j] * v[j];
  };
  for (const auto &v : base.vertices()) {
    for (std::size_t i = 0; i < hq.eq_a.size(); ++i) {
      RatVec a2;
      Rational rhs;
      split(hq.eq_a[i], hq.eq_b[i], v, a2, rhs);
      if (std::all_of(a2.begin(), a2.end(),
                      [](const Rational &c) { return c == 0; })) {
        if (rhs != 0) return VPolytope::empty(d2);
        continue;
      }
      fib.eq_a.push_back(std::move(a2));
      fib.eq_b.push_back(rhs);
    }
    for (std::size_t i = 0; i < hq.ineq_a.size(); ++i) {
      RatVec a2;
      Rational rhs;
      split(hq.ineq_a[i], hq.ineq_b[i], v, a2, rhs);
      fib.ineq_a.push_back(std::move(a2));
      fib.ineq_b.push_back(rhs);
    }
  }
  // Constraints with a zero normal are either vacuous or infeasible.
  for (std::size_t i = 0; i < fib.ineq_a.size(); ++i) {
    if (std::all_of(fib.ineq_a[i].begin(), fib.ineq_a[i].end(),
                    [](const Rational &c) { return c == 0; }) &&
        fib.ineq_b[i] < 0)
      return VPolytope::empty(d2);
  }
  // Equalities must be consistent before vertex enumeration.
  if (!fib.eq_a.empty()) {
    RatVec x;
    std::vector<RatVec> null;
    if (!solve_affine(fib.eq_a, fib.eq_b, x, null))
      return VPolytope::empty(d2);
  }
  auto verts = hrep_vertices(fib);
  if (verts.empty()) return VPolytope::empty(d2);
  return VPolytope(d2, std::move(verts));
}

VPolytope swap_factors(const VPolytope &q, int d1) {
  if (d1 < 1 || d1 >= q.dim())
    throw Error(ErrorCode::InvalidArgument, "bad factor split");
  if (q.is_empty()) return q;
  std::vector<RatVec> pts;
  for (const auto &v : q.vertices()) {
    RatVec w(v.begin() + d1, v.end());
    w.insert(w.end(), v.begin(), v.begin() + d1);
    pts.push_back(std::move(w));
  }
  return VPolytope(q.dim(), std::move(pts));
}

}  // namespace kakpair
