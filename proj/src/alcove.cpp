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

#include "kakpair/alcove.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace kakpair {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::AI:
      return "ai";
    case PairKind::AII:
      return "aii";
    case PairKind::AIII:
      return "aiii";
  }
  return "?";
}

PairKind parse_pair_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ai") return PairKind::AI;
  if (lower == "aii") return PairKind::AII;
  if (lower == "aiii") return PairKind::AIII;
  throw Error(ErrorCode::InvalidArgument,
              "unknown pair type '" + std::string(text) + "'");
}

PairType::PairType(PairKind k, int m_) : kind(k), m(m_) {
  if (m < 1)
    throw Error(ErrorCode::InvalidArgument, "pair dimension must be >= 1");
}

PairType PairType::for_matrix(PairKind k, Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  if (k == PairKind::AI) return PairType(k, static_cast<int>(n));
  if (n % 2 != 0)
    throw Error(ErrorCode::DimensionOdd,
                to_string(k) + " requires even dimension, got " +
                    std::to_string(n));
  return PairType(k, static_cast<int>(n / 2));
}

bool in_alcove(const PairType &pair, std::span<const double> x,
               double slack) {
  const std::size_t m = x.size();
  if (m != static_cast<std::size_t>(pair.m)) return false;
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (x[i] < x[i + 1] - slack) return false;
  if (pair.type_c()) {
    return x[0] <= 0.5 + slack && x[m - 1] >= -slack;
  }
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  return std::abs(sum) <= slack && x[m - 1] >= x[0] - 1.0 - slack;
}

double linf_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// ---------------------------------------------------------------------------
// Signed permutations and affine maps

SignedPermutation::SignedPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  const int m = size();
  std::vector<bool> seen(m, false);
  for (int w : images_) {
    const int a = std::abs(w);
    if (a < 1 || a > m || seen[a - 1])
      throw Error(ErrorCode::InvalidArgument,
                  "images do not form a signed permutation");
    seen[a - 1] = true;
  }
}

SignedPermutation SignedPermutation::identity(int m) {
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

bool SignedPermutation::all_positive() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](int w) { return w > 0; });
}

SignedPermutation SignedPermutation::compose(
    const SignedPermutation &other) const {
  if (other.size() != size())
    throw Error(ErrorCode::DimensionMismatch, "permutation sizes differ");
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) {
    const int o = other.images_[i];
    const int t = images_[std::abs(o) - 1];
    im[i] = o > 0 ? t : -t;
  }
  return SignedPermutation(std::move(im));
}

RatVec AffineMap::apply(const RatVec &x) const {
  RatVec out = linear.apply(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation[i];
  return out;
}

std::vector<double> AffineMap::apply(std::span<const double> x) const {
  std::vector<double> out =
      linear.apply(std::vector<double>(x.begin(), x.end()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += to_double(translation[i]);
  return out;
}

AffineMap AffineMap::compose(const AffineMap &other) const {
  AffineMap r{linear.compose(other.linear), linear.apply(other.translation)};
  for (std::size_t i = 0; i < r.translation.size(); ++i)
    r.translation[i] += translation[i];
  return r;
}

// ---------------------------------------------------------------------------
// Alcove reduction

TrackedReduction reduce_type_A_tracked(std::span<const double> theta,
                                       const Tolerance &tol) {
  const std::size_t m = theta.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty vector");
  const double total = std::accumulate(theta.begin(), theta.end(), 0.0);
  if (std::abs(total - std::round(total)) > tol.eps_spec) {
    std::ostringstream os;
    os << "coordinate sum " << total << " is not an integer";
    throw Error(ErrorCode::SumNotInteger, os.str());
  }

  std::vector<double> t(m);
  for (std::size_t i = 0; i < m; ++i) {
    t[i] = theta[i] - std::floor(theta[i]);
    if (t[i] >= 1.0) t[i] = 0.0;
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t[a] > t[b]; });

  const double reduced_sum = std::accumulate(t.begin(), t.end(), 0.0);
  const std::size_t s = static_cast<std::size_t>(
      std::clamp<long>(std::lround(reduced_sum), 0, static_cast<long>(m)));

  TrackedReduction r;
  r.x.reserve(m);
  r.source.reserve(m);
  for (std::size_t k = s; k < m; ++k) {
    r.x.push_back(t[order[k]]);
    r.source.push_back(order[k]);
  }
  for (std::size_t k = 0; k < s; ++k) {
    r.x.push_back(t[order[k]] - 1.0);
    r.source.push_back(order[k]);
  }
  const double mean =
      std::accumulate(r.x.begin(), r.x.end(), 0.0) / static_cast<double>(m);
  for (double &v : r.x) v -= mean;
  return r;
}

AlcovePoint reduce_type_A(std::span<const double> theta, PairKind kind,
                          const Tolerance &tol) {
  if (kind == PairKind::AIII)
    throw Error(ErrorCode::InvalidArgument,
                "type-A reduction requested for an AIII pair");
  TrackedReduction r = reduce_type_A_tracked(theta, tol);
  return {PairType(kind, static_cast<int>(theta.size())), std::move(r.x)};
}

AlcovePoint reduce_type_C(std::span<const double> theta) {
  if (theta.empty()) throw Error(ErrorCode::InvalidArgument, "empty vector");
  std::vector<double> r(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    double t = theta[i] - std::floor(theta[i]);
    if (t >= 1.0) t = 0.0;
    r[i] = std::min(t, 1.0 - t);
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  return {PairType(PairKind::AIII, static_cast<int>(theta.size())),
          std::move(r)};
}

// ---------------------------------------------------------------------------
// Root data

std::vector<std::vector<int>> affine_simple_roots(const PairType &pair) {
  const int m = pair.m;
  std::vector<std::vector<int>> roots(pair.rank() + 1,
                                      std::vector<int>(m, 0));
  if (pair.type_c()) {
    roots[0][0] = -2;
    roots[m][m - 1] = 2;
  } else {
    roots[0][m - 1] += 1;
    roots[0][0] -= 1;
  }
  for (int i = 1; i < m; ++i) {
    roots[i][i - 1] = 1;
    roots[i][i] = -1;
  }
  return roots;
}

std::vector<RatVec> fundamental_coweights(const PairType &pair) {
  const int m = pair.m;
  std::vector<RatVec> w(pair.rank() + 1, RatVec(m, Rational(0)));
  for (int i = 1; i <= pair.rank(); ++i) {
    for (int j = 0; j < m; ++j) {
      if (pair.type_c()) {
        w[i][j] = i == m ? Rational(1, 2) : Rational(j < i ? 1 : 0);
      } else {
        w[i][j] = j < i ? Rational(m - i, m) : Rational(-i, m);
      }
    }
  }
  return w;
}

std::vector<int> coweight_marks(const PairType &pair) {
  const auto roots = affine_simple_roots(pair);
  const auto w = fundamental_coweights(pair);
  std::vector<int> a(pair.rank() + 1, 1);
  for (int i = 1; i <= pair.rank(); ++i) {
    Rational v = 0;
    for (int j = 0; j < pair.m; ++j) v -= roots[0][j] * w[i][j];
    a[i] = static_cast<int>(boost::multiprecision::numerator(v));
  }
  return a;
}

std::vector<RatVec> alcove_vertices(const PairType &pair) {
  auto w = fundamental_coweights(pair);
  const auto a = coweight_marks(pair);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (auto &c : w[i]) c /= a[i];
  return w;
}

RatVec type_a_centroid(int m) {
  RatVec z(m);
  for (int j = 1; j <= m; ++j) z[j - 1] = Rational(m - 2 * j + 1, 2 * m);
  return z;
}

// ---------------------------------------------------------------------------
// Cyclic descents

namespace {

bool is_negative(const std::vector<int> &v) {
  for (int c : v)
    if (c != 0) return c < 0;
  return false;
}

void check_permutation(const SignedPermutation &w, const PairType &pair) {
  if (w.size() != pair.m)
    throw Error(ErrorCode::DimensionMismatch,
                "permutation size " + std::to_string(w.size()) +
                    " does not match pair dimension " +
                    std::to_string(pair.m));
  if (!pair.type_c() && !w.all_positive())
    throw Error(ErrorCode::SignsInTypeA,
                "signed permutation used with a type-A pair");
}

}  // namespace

CyclicDescents cyclic_descents(const SignedPermutation &w,
                               const PairType &pair) {
  check_permutation(w, pair);
  CyclicDescents d;
  if (pair.rank() == 0 && !pair.type_c()) {
    // SU(1): the alcove is a point and the identity is the only element.
    d.indices = {0};
    d.cdes = 1;
    return d;
  }
  const auto roots = affine_simple_roots(pair);
  const auto a = coweight_marks(pair);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (is_negative(w.apply(roots[i]))) {
      d.indices.push_back(static_cast<int>(i));
      d.cdes += a[i];
    }
  }
  return d;
}

std::vector<SignedPermutation> unit_cdes_elements(const PairType &pair) {
  const int m = pair.m;
  if (!pair.type_c() && m == 1) return {SignedPermutation::identity(1)};

  const auto roots = affine_simple_roots(pair);
  const auto a = coweight_marks(pair);
  std::vector<SignedPermutation> out;
  std::vector<int> images;
  std::vector<bool> used(m, false);

  // Root alpha_i (i >= 1) only involves coordinates i and i+1 (or m for
  // alpha_m), so its descent status is decided once those are placed.
  auto partial_cdes = [&](std::size_t placed) {
    int c = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      int last = 0;
      for (int j = 0; j < m; ++j)
        if (roots[i][j] != 0) last = j;
      if (static_cast<std::size_t>(last) >= placed) continue;
      std::vector<int> img(m, 0);
      for (int j = 0; j <= last; ++j) {
        const int wj = images[j];
        img[std::abs(wj) - 1] += wj > 0 ? roots[i][j] : -roots[i][j];
      }
      if (is_negative(img)) c += a[i];
    }
    return c;
  };

  std::function<void()> dfs = [&]() {
    const std::size_t k = images.size();
    if (partial_cdes(k) > 1) return;
    if (k == static_cast<std::size_t>(m)) {
      SignedPermutation w(images);
      if (cyclic_descents(w, pair).cdes == 1) out.push_back(std::move(w));
      return;
    }
    const int signs = pair.type_c() ? 2 : 1;
    for (int s = 0; s < signs; ++s) {
      for (int v = 1; v <= m; ++v) {
        if (used[v - 1]) continue;
        used[v - 1] = true;
        images.push_back(s == 0 ? v : -v);
        dfs();
        images.pop_back();
        used[v - 1] = false;
      }
    }
  };
  dfs();
  return out;
}

StabilizerGroup stabilizer_group(const PairType &pair) {
  const auto coweights = fundamental_coweights(pair);
  const auto verts = alcove_vertices(pair);
  StabilizerGroup g;
  for (const auto &w : unit_cdes_elements(pair)) {
    const auto d = cyclic_descents(w, pair);
    // cdes = 1 forces a single descent j with a_j = 1; delta_w = omega_j.
    const RatVec &delta = coweights[d.indices.front()];
    RatVec t = w.apply(delta);
    for (auto &c : t) c = -c;
    g.elements.push_back({w, std::move(t)});
  }
  // A generator: the element sending vertex 0 to vertex 1 (the group acts
  // simply transitively on the mark-1 vertices).
  if (g.elements.size() == 1) {
    g.generators.push_back(g.elements.front());
  } else {
    for (const auto &f : g.elements) {
      if (f.apply(verts[0]) == verts.back() && pair.type_c()) {
        g.generators.push_back(f);
        break;
      }
      if (!pair.type_c() && f.apply(verts[0]) == verts[1]) {
        g.generators.push_back(f);
        break;
      }
    }
  }
  return g;
}

AffineSubspace fixed_point_set(const PairType &pair) {
  const int m = pair.m;
  const auto group = stabilizer_group(pair);
  RatMat a;
  RatVec b;
  for (const auto &f : group.elements) {
    for (int i = 0; i < m; ++i) {
      RatVec row(m, Rational(0));
      row[i] -= 1;
      a.push_back(row);
      b.push_back(-f.translation[i]);
    }
    // Row i of the linear part: (w x)_i = sgn * x_j where |w(j)| = i.
    for (int j = 0; j < m; ++j) {
      const int wj = f.linear(j + 1);
      a[a.size() - m + std::abs(wj) - 1][j] += wj > 0 ? 1 : -1;
    }
  }
  if (!pair.type_c()) {
    a.push_back(RatVec(m, Rational(1)));
    b.push_back(0);
  }
  AffineSubspace s;
  std::vector<RatVec> null;
  if (!solve_affine(a, b, s.basepoint, null))
    throw Error(ErrorCode::InvalidArgument, "stabilizer has no fixed point");

  // Minimum-norm basepoint: remove the component along span(null).
  std::vector<RatVec> ortho;
  for (const auto &v : null) {
    RatVec u = v;
    for (const auto &o : ortho) {
      const Rational c = dot(u, o) / dot(o, o);
      for (int i = 0; i < m; ++i) u[i] -= c * o[i];
    }
    ortho.push_back(std::move(u));
  }
  for (const auto &o : ortho) {
    const Rational c = dot(s.basepoint, o) / dot(o, o);
    for (int i = 0; i < m; ++i) s.basepoint[i] -= c * o[i];
  }

  for (auto v : null) {
    auto lead = std::find_if(v.begin(), v.end(),
                             [](const Rational &c) { return c != 0; });
    const Rational scale = *lead;
    for (auto &c : v) c /= scale;
    s.directions.push_back(std::move(v));
  }
  std::sort(s.directions.begin(), s.directions.end(), std::greater<>());
  return s;
}

}  // namespace kakpair
