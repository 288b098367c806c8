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

#include "kakpair/products.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kakpair {

bool in_B(const AlcovePoint &x, const Tolerance &tol) {
  const int m = x.pair.m;
  if (static_cast<int>(x.x.size()) != m)
    throw Error(ErrorCode::DimensionMismatch, "alcove point has wrong length");
  if (x.pair.type_c()) {
    for (int i = 0; i < m; ++i)
      if (std::abs(x.x[i] + x.x[m - 1 - i] - 0.5) > tol.eps_spec) return false;
    return true;
  }
  const auto zeta = to_double(type_a_centroid(m));
  return linf_distance(x.x, zeta) <= tol.eps_spec;
}

bool thm12_necessary(const AlcovePoint &x, const StabilizerGroup &group,
                     const Tolerance &tol) {
  for (const auto &f : group.elements)
    if (linf_distance(f.apply(x.x), x.x) > tol.eps_spec) return false;
  return true;
}

bool thm12_necessary(const AlcovePoint &x, const Tolerance &tol) {
  return thm12_necessary(x, stabilizer_group(x.pair), tol);
}

PairCertificate pair_large_product(const UnitaryMatrix &u,
                                   const UnitaryMatrix &v,
                                   const PairType &pair,
                                   const Tolerance &tol) {
  if (u.dim() != v.dim())
    throw Error(ErrorCode::DimensionMismatch, "U and V differ in dimension");
  PairCertificate c;
  c.a_u = a_invariant(u, pair, tol);
  c.a_v_inv = a_invariant(v.adjoint(), pair, tol);
  c.large = in_B(c.a_u, tol) &&
            linf_distance(c.a_u.x, c.a_v_inv.x) <= tol.eps_spec;
  return c;
}

void SubsetTriple::validate() const {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "need d >= 0");
  for (const auto *s : {&I, &J, &K}) {
    if (static_cast<int>(s->size()) != k)
      throw Error(ErrorCode::InvalidArgument, "subset size differs from k");
    for (int i = 0; i < k; ++i) {
      if ((*s)[i] < 1 || (*s)[i] > n || (i > 0 && (*s)[i] <= (*s)[i - 1]))
        throw Error(ErrorCode::InvalidArgument,
                    "subsets must be strictly increasing within 1..n");
    }
  }
}

namespace {

long sum(const std::vector<int> &s) {
  return std::accumulate(s.begin(), s.end(), 0L);
}

long top_degree(long n, long k) { return k * (n - k) + k * (k + 1) / 2; }

}  // namespace

bool qlr_degree_ok(const SubsetTriple &t) {
  t.validate();
  return sum(t.I) + sum(t.J) - sum(t.K) ==
         top_degree(t.n, t.k) - static_cast<long>(t.n) * t.d;
}

long schubert_degree(int n, const std::vector<int> &subset) {
  return top_degree(n, static_cast<long>(subset.size())) - sum(subset);
}

void for_each_k_subset(int n, int k,
                       const std::function<void(const std::vector<int> &)> &f) {
  if (k < 0 || k > n) return;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    f(s);
    int i = k;
    while (i > 0 && s[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (int j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<CentroidViolation> centroid_feasibility_scan(int n) {
  if (n < 2 || n > 8)
    throw Error(ErrorCode::BoundExceeded,
                "centroid scan supports 2 <= n <= 8, got " + std::to_string(n));
  const PairType pair(PairKind::AI, n);
  const auto verts = alcove_vertices(pair);
  const RatVec zeta = type_a_centroid(n);
  auto partial = [](const RatVec &x, const std::vector<int> &s) {
    Rational r = 0;
    for (int i : s) r += x[i - 1];
    return r;
  };

  std::vector<CentroidViolation> out;
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<int>> subsets;
    for_each_k_subset(n, k,
                      [&](const std::vector<int> &s) { subsets.push_back(s); });
    std::vector<Rational> zeta_sum(subsets.size());
    std::vector<std::vector<Rational>> vert_sum(
        verts.size(), std::vector<Rational>(subsets.size()));
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      zeta_sum[s] = partial(zeta, subsets[s]);
      for (std::size_t v = 0; v < verts.size(); ++v)
        vert_sum[v][s] = partial(verts[v], subsets[s]);
    }
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        for (std::size_t c = 0; c < subsets.size(); ++c) {
          const long rhs = top_degree(n, k) - sum(subsets[a]) -
                           sum(subsets[b]) + sum(subsets[c]);
          if (rhs < 0 || rhs % n != 0) continue;
          const long d = rhs / n;
          for (std::size_t v = 0; v < verts.size(); ++v) {
            const Rational lhs = -vert_sum[v][c] + zeta_sum[a] + zeta_sum[b];
            if (lhs <= d) continue;
            out.push_back({SubsetTriple{n, k, subsets[a], subsets[b],
                                        subsets[c], static_cast<int>(d)},
                           static_cast<int>(v), lhs});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return std::tie(x.triple, x.vertex) < std::tie(y.triple, y.vertex);
  });
  return out;
}

}  // namespace kakpair
