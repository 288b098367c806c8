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

#include <vector>

#include "kakpair/exact.hpp"

namespace kakpair {

/// Half-space description {x : eq_a x = eq_b, ineq_a x <= ineq_b}.
struct HPolytope {
  int dim = 0;
  RatMat eq_a;
  RatVec eq_b;
  RatMat ineq_a;
  RatVec ineq_b;

  bool contains(const RatVec &x) const;
};

/// Convex polytope in vertex form over exact rationals. Construction
/// discards duplicate and non-extreme points, so the stored list is the
/// minimal vertex set. Ambient dimension is limited to 4.
class VPolytope {
 public:
  /// Throws InvalidArgument for an empty point list, a point of the wrong
  /// length, or dim outside 1..4.
  VPolytope(int dim, std::vector<RatVec> points);

  /// The empty polytope (only produced as a fat-point result).
  static VPolytope empty(int dim);

  int dim() const noexcept { return dim_; }
  bool is_empty() const noexcept { return vertices_.empty(); }
  /// Extreme points in lexicographic order.
  const std::vector<RatVec> &vertices() const noexcept { return vertices_; }
  /// Dimension of the affine hull (-1 when empty).
  int affine_dim() const;

  HPolytope to_hrep() const;
  bool contains(const RatVec &x) const;

  bool operator==(const VPolytope &) const = default;

 private:
  VPolytope() = default;
  int dim_ = 0;
  std::vector<RatVec> vertices_;
};

/// Vertices of a bounded H-polytope. Returns an empty list if infeasible.
std::vector<RatVec> hrep_vertices(const HPolytope &h);

/// Projection onto the coordinates [first, first + count).
VPolytope project(const VPolytope &q, int first, int count);

/// {y : pi_1(Q) x {y} subset Q} for Q in R^{d1} x R^{d2}, via the
/// intersection of the fibres over the vertices of pi_1(Q).
/// Throws InvalidArgument unless d1, d2 >= 1 and d1 + d2 = Q.dim().
VPolytope fat_points(const VPolytope &q, int d1, int d2);

/// Reorders coordinates (x, y) -> (y, x) where x has length d1.
VPolytope swap_factors(const VPolytope &q, int d1);

}  // namespace kakpair
