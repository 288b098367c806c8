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

#include <catch_amalgamated.hpp>
#include <chrono>
#include <map>
#include <random>

#include "kakpair/products.hpp"
#include "kakpair/synthesis.hpp"

namespace kakpair {
namespace test_products {

static const Tolerance tol{};

TEST_CASE("in_B examples") {
  const PairType a4(PairKind::AI, 4);
  CHECK(in_B(AlcovePoint{a4, {3.0 / 8, 1.0 / 8, -1.0 / 8, -3.0 / 8}}));
  for (auto kind : {PairKind::AI, PairKind::AII, PairKind::AIII})
    // m = 1 in type A is degenerate: the centroid is 0 itself.
    for (int m = kind == PairKind::AIII ? 1 : 2; m <= 5; ++m)
      CHECK_FALSE(in_B(AlcovePoint{PairType(kind, m),
                                   std::vector<double>(m, 0.0)}));
  const PairType c2(PairKind::AIII, 2);
  CHECK(in_B(AlcovePoint{c2, {0.3, 0.2}}));
  CHECK_FALSE(in_B(AlcovePoint{c2, {0.3, 0.1}}));
}

TEST_CASE("thm12_necessary examples") {
  for (int m = 1; m <= 6; ++m) {
    const PairType pair(PairKind::AI, m);
    CHECK(thm12_necessary(AlcovePoint{pair, to_double(type_a_centroid(m))}));
  }
  const PairType a3(PairKind::AI, 3);
  const auto v = alcove_vertices(a3);
  CHECK_FALSE(thm12_necessary(AlcovePoint{a3, to_double(v[1])}));
  for (int m = 1; m <= 5; ++m)
    CHECK(thm12_necessary(
        AlcovePoint{PairType(PairKind::AIII, m), std::vector<double>(m, 0.25)}));
}

TEST_CASE("in_B agrees with the stabilizer condition") {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 3);
  for (auto kind : {PairKind::AI, PairKind::AII, PairKind::AIII}) {
    for (int m = 1; m <= 5; ++m) {
      const PairType pair(kind, m);
      const auto group = stabilizer_group(pair);
      const auto fixed = fixed_point_set(pair);
      for (int trial = 0; trial < 1000 / 15; ++trial) {
        std::vector<double> x;
        if (coin(g) == 0) {
          // A point of the fixed set, so both predicates should hold.
          x = to_double(fixed.basepoint);
          for (const auto &d : fixed.directions) {
            const double s = (u(g) - 0.5) * 0.5;
            for (int i = 0; i < m; ++i) x[i] += s * to_double(d[i]);
          }
          const AlcovePoint p =
              pair.type_c() ? reduce_type_C(x) : reduce_type_A(x, kind);
          x = p.x;
        } else {
          std::vector<double> raw(m);
          for (auto &t : raw) t = u(g);
          if (pair.type_c()) {
            x = reduce_type_C(raw).x;
          } else {
            double s = 0;
            for (double t : raw) s += t;
            raw.back() -= s;
            x = reduce_type_A(raw, kind).x;
          }
        }
        const AlcovePoint p{pair, x};
        CHECK(in_B(p) == thm12_necessary(p, group));
      }
    }
  }
}

TEST_CASE("pair_large_product examples") {
  const CMatrix q = magic_matrix().mat();
  const UnitaryMatrix v(q.adjoint() * berkeley_gate().mat() * q);
  const PairType a4(PairKind::AI, 4);
  const auto cert = pair_large_product(v, v, a4);
  CHECK(cert.large);
  CHECK(linf_distance(cert.a_u.x, to_double(type_a_centroid(4))) < 1e-10);

  const auto id = UnitaryMatrix::identity(4);
  CHECK_FALSE(pair_large_product(id, id, a4).large);

  const PairType c2(PairKind::AIII, 2);
  const double t = 0.15;
  const auto u = alcove_exp(AlcovePoint{c2, {0.5 - t, t}});
  CHECK(pair_large_product(u, u.adjoint(), c2).large);
  // a(U^{-1}) = a(U) here: the line is fixed by the reversal.
  CHECK(pair_large_product(u, u, c2).large);
}

TEST_CASE("pair_large_product is double-coset invariant") {
  const PairType c2(PairKind::AIII, 2);
  const auto u = alcove_exp(AlcovePoint{c2, {0.4, 0.1}});
  const auto v = alcove_exp(AlcovePoint{c2, {0.3, 0.2}});
  for (auto pr : {std::pair{u, u.adjoint()}, std::pair{u, v}}) {
    const bool base = pair_large_product(pr.first, pr.second, c2).large;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const UnitaryMatrix u2(random_k_element(c2, 4 * s).mat() *
                             pr.first.mat() *
                             random_k_element(c2, 4 * s + 1).mat());
      const UnitaryMatrix v2(random_k_element(c2, 4 * s + 2).mat() *
                             pr.second.mat() *
                             random_k_element(c2, 4 * s + 3).mat());
      CHECK(pair_large_product(u2, v2, c2).large == base);
    }
  }
  const PairType a3(PairKind::AI, 3);
  const auto h = haar_unitary(3, 8, true);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const UnitaryMatrix h2(random_k_element(a3, s).mat() * h.mat() *
                           random_k_element(a3, s + 50).mat());
    CHECK_FALSE(pair_large_product(h2, h2.adjoint(), a3).large);
  }
}

TEST_CASE("qlr_degree_ok examples") {
  CHECK(qlr_degree_ok(SubsetTriple{2, 1, {1}, {1}, {2}, 1}));
  CHECK_FALSE(qlr_degree_ok(SubsetTriple{2, 1, {1}, {1}, {1}, 0}));
  // Linearity in d: at most one d works for given subsets.
  for_each_k_subset(5, 2, [](const std::vector<int> &i) {
    for_each_k_subset(5, 2, [&](const std::vector<int> &j) {
      int hits = 0;
      for (int d = 0; d <= 4; ++d)
        hits += qlr_degree_ok(SubsetTriple{5, 2, i, j, {1, 2}, d});
      CHECK(hits <= 1);
    });
  });
}

TEST_CASE("qlr_degree_ok depends only on the subset sums") {
  const int n = 7, k = 3;
  std::map<int, std::vector<std::vector<int>>> by_sum;
  for_each_k_subset(n, k, [&](const std::vector<int> &s) {
    int t = 0;
    for (int v : s) t += v;
    by_sum[t].push_back(s);
  });
  for (const auto &[sum, group] : by_sum) {
    if (group.size() < 2) continue;
    for (int d = 0; d <= 2; ++d) {
      const bool ref = qlr_degree_ok(
          SubsetTriple{n, k, group[0], {1, 2, 3}, {5, 6, 7}, d});
      for (const auto &s : group)
        CHECK(qlr_degree_ok(SubsetTriple{n, k, s, {1, 2, 3}, {5, 6, 7}, d}) ==
              ref);
    }
  }
}

TEST_CASE("schubert degrees lie in [0, k(n-k)]") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for_each_k_subset(n, k, [&](const std::vector<int> &s) {
        const long d = schubert_degree(n, s);
        CHECK(d >= 0);
        CHECK(d <= static_cast<long>(k) * (n - k));
      });
  CHECK(schubert_degree(4, {1, 2}) == 4);
  CHECK(schubert_degree(4, {3, 4}) == 0);
}

TEST_CASE("subset triple validation") {
  CHECK_THROWS_AS((SubsetTriple{3, 2, {2, 1}, {1, 2}, {1, 2}, 0}.validate()),
                  Error);
  CHECK_THROWS_AS((SubsetTriple{3, 2, {1, 4}, {1, 2}, {1, 2}, 0}.validate()),
                  Error);
  CHECK_THROWS_AS((SubsetTriple{3, 2, {1, 2}, {1, 2}, {1, 2}, -1}.validate()),
                  Error);
  CHECK_NOTHROW((SubsetTriple{3, 2, {1, 2}, {1, 3}, {2, 3}, 0}.validate()));
}

TEST_CASE("for_each_k_subset enumerates binomial counts in order") {
  std::vector<std::vector<int>> seen;
  for_each_k_subset(5, 3, [&](const std::vector<int> &s) { seen.push_back(s); });
  CHECK(seen.size() == 10);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::vector<int>{1, 2, 3});
  CHECK(seen.back() == std::vector<int>{3, 4, 5});
}

TEST_CASE("centroid feasibility scan finds no violations") {
  for (int n : {2, 3, 4}) CHECK(centroid_feasibility_scan(n).empty());
  const auto start = std::chrono::steady_clock::now();
  CHECK(centroid_feasibility_scan(5).empty());
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  CHECK(secs < 10.0);
}

TEST_CASE("centroid feasibility scan bounds") {
  for (int n : {1, 9}) {
    try {
      centroid_feasibility_scan(n);
      FAIL("expected BoundExceeded");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::BoundExceeded);
    }
  }
}

}  // namespace test_products
}  // namespace kakpair
