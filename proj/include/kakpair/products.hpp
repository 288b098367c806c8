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

#include <functional>
#include <vector>

#include "kakpair/alcove.hpp"
#include "kakpair/cartan.hpp"

namespace kakpair {

/// Membership in B(G, K), the set of X with K e^{i pi X} K e^{-i pi X} K = G:
/// AI/AII: X = zeta; AIII: x_i + x_{m-i+1} = 1/2 for all i. Both within
/// eps_spec in the max norm.
bool in_B(const AlcovePoint &x, const Tolerance &tol = {});

/// True iff every element of the alcove stabilizer fixes x within eps_spec.
bool thm12_necessary(const AlcovePoint &x, const Tolerance &tol = {});
/// Same, against a precomputed stabilizer of x.pair.
bool thm12_necessary(const AlcovePoint &x, const StabilizerGroup &group,
                     const Tolerance &tol = {});

struct PairCertificate {
  bool large = false;  ///< K U K V K = G
  AlcovePoint a_u;
  AlcovePoint a_v_inv;
};

/// K U K V K = G iff a(U) = a(V^{-1}) and a(U) is in B.
PairCertificate pair_large_product(const UnitaryMatrix &u,
                                   const UnitaryMatrix &v,
                                   const PairType &pair,
                                   const Tolerance &tol = {});

/// Index data (n, k, I, J, K, d) of a quantum Littlewood-Richardson
/// coefficient; subsets are 1-based and strictly increasing.
struct SubsetTriple {
  int n = 0;
  int k = 0;
  std::vector<int> I, J, K;
  int d = 0;

  /// Throws InvalidArgument if the fields are inconsistent.
  void validate() const;
  bool operator==(const SubsetTriple &) const = default;
  auto operator<=>(const SubsetTriple &) const = default;
};

/// sum I + sum J - sum K == k(n-k) + C(k+1, 2) - n d.
bool qlr_degree_ok(const SubsetTriple &t);

/// deg(sigma_I) = k(n-k) + C(k+1, 2) - sum I.
long schubert_degree(int n, const std::vector<int> &subset);

struct CentroidViolation {
  SubsetTriple triple;
  int vertex = 0;  ///< index i of the alcove vertex omega_i
  Rational lhs;    ///< -X_K + zeta_I + zeta_J
  bool operator==(const CentroidViolation &) const = default;
};

/// Checks -X_K + zeta_I + zeta_J <= d at every alcove vertex X for every
/// (k, I, J, K) with the degree equation solvable by an integer d >= 0.
/// Returns the failures sorted. Throws BoundExceeded outside 2 <= n <= 8.
std::vector<CentroidViolation> centroid_feasibility_scan(int n);

/// Calls f on every strictly increasing k-subset of {1..n} in lexicographic
/// order.
void for_each_k_subset(int n, int k,
                       const std::function<void(const std::vector<int> &)> &f);

}  // namespace kakpair
