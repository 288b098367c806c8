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

#include <span>
#include <string>
#include <vector>

#include "kakpair/exact.hpp"
#include "kakpair/numerics.hpp"

namespace kakpair {

enum class PairKind { AI, AII, AIII };

std::string to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);

/// Selects the symmetric pair. `m` is the length of alcove vectors: the
/// matrix size n for AI, half the matrix size for AII and AIII.
struct PairType {
  PairKind kind = PairKind::AI;
  int m = 1;

  PairType() = default;
  PairType(PairKind k, int m_);

  /// Pair for a given matrix dimension; throws DimensionOdd for AII/AIII
  /// with odd n.
  static PairType for_matrix(PairKind k, Eigen::Index n);

  Eigen::Index matrix_dim() const { return kind == PairKind::AI ? m : 2 * m; }
  /// Restricted root system is A_{m-1} (AI, AII) or C_m (AIII).
  bool type_c() const { return kind == PairKind::AIII; }
  /// Number of simple roots.
  int rank() const { return type_c() ? m : m - 1; }

  bool operator==(const PairType &) const = default;
};

/// A point of the closed fundamental alcove:
///   AI/AII: x_1 >= ... >= x_m >= x_1 - 1, sum x = 0;
///   AIII:   1/2 >= x_1 >= ... >= x_m >= 0.
struct AlcovePoint {
  PairType pair;
  std::vector<double> x;
};

bool in_alcove(const PairType &pair, std::span<const double> x, double slack);
double linf_distance(std::span<const double> a, std::span<const double> b);

/// A signed permutation w of {1..m}; images[i-1] = w(i). Acts on vectors by
/// w(e_i) = sgn(w(i)) e_{|w(i)|}. Type-A elements have all signs positive.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws InvalidArgument unless |images| is a permutation of 1..m.
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int> &images() const { return images_; }
  bool all_positive() const;

  template <typename T>
  std::vector<T> apply(const std::vector<T> &v) const {
    std::vector<T> out(v.size(), T(0));
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const int w = images_[i];
      out[std::abs(w) - 1] = w > 0 ? T(v[i]) : T(-v[i]);
    }
    return out;
  }

  /// (this * other)(i) = this(other(i)).
  SignedPermutation compose(const SignedPermutation &other) const;

  bool operator==(const SignedPermutation &) const = default;

 private:
  std::vector<int> images_;
};

/// x -> w(x) + translation.
struct AffineMap {
  SignedPermutation linear;
  RatVec translation;

  RatVec apply(const RatVec &x) const;
  std::vector<double> apply(std::span<const double> x) const;
  /// (this o other)(x) = this(other(x)).
  AffineMap compose(const AffineMap &other) const;
  bool operator==(const AffineMap &) const = default;
};

/// Lands theta (sum within eps_spec of an integer) in the type-A alcove
/// with the same multiset of e^{2 pi i theta_j}. Throws SumNotInteger.
AlcovePoint reduce_type_A(std::span<const double> theta,
                          PairKind kind = PairKind::AI,
                          const Tolerance &tol = {});

/// Same, also reporting which input each output coordinate came from:
/// x[k] = theta[source[k]] + integer.
struct TrackedReduction {
  std::vector<double> x;
  std::vector<int> source;
};
TrackedReduction reduce_type_A_tracked(std::span<const double> theta,
                                       const Tolerance &tol = {});

/// Folds each coordinate to min(t mod 1, 1 - t mod 1) and sorts descending.
AlcovePoint reduce_type_C(std::span<const double> theta);

struct CyclicDescents {
  std::vector<int> indices;  ///< subset of 0..rank, ascending
  int cdes = 0;              ///< sum of a_i over the descents
};

/// Throws SignsInTypeA for a signed element in a type-A pair, and
/// DimensionMismatch if w.size() != pair.m.
CyclicDescents cyclic_descents(const SignedPermutation &w,
                               const PairType &pair);

/// Simple roots alpha_0 .. alpha_rank (alpha_0 = minus the highest root),
/// as integer coefficient vectors on e_1..e_m.
std::vector<std::vector<int>> affine_simple_roots(const PairType &pair);

/// Fundamental coweights omega_0 = 0, omega_1, ..., omega_rank, with
/// omega_i dual to alpha_i.
std::vector<RatVec> fundamental_coweights(const PairType &pair);

/// Marks a_0 = 1, a_i = -alpha_0(omega_i).
std::vector<int> coweight_marks(const PairType &pair);

/// Vertices a_i^{-1} omega_i of the closed alcove, i = 0..rank.
std::vector<RatVec> alcove_vertices(const PairType &pair);

/// The alcove stabilizer in the extended affine Weyl group, realized as
/// w tau_{-delta_w} over the w with cdes(w) = 1.
struct StabilizerGroup {
  std::vector<AffineMap> elements;   ///< identity first
  std::vector<AffineMap> generators; ///< a single generator (cyclic group)
};

StabilizerGroup stabilizer_group(const PairType &pair);

/// The w with cdes(w) = 1, in enumeration order.
std::vector<SignedPermutation> unit_cdes_elements(const PairType &pair);

struct AffineSubspace {
  RatVec basepoint;              ///< minimum-norm point
  std::vector<RatVec> directions;
};

/// Points of the alcove's affine span fixed by every stabilizer element.
AffineSubspace fixed_point_set(const PairType &pair);

/// zeta_j = (m - 2j + 1) / (2m): the type-A alcove centroid.
RatVec type_a_centroid(int m);

}  // namespace kakpair
