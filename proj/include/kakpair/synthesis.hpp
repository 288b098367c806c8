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

#include <optional>
#include <vector>

#include "kakpair/alcove.hpp"
#include "kakpair/cartan.hpp"

namespace kakpair {

/// The Berkeley gate
///   [[c1, 0, 0, i s1], [0, c3, i s3, 0], [0, i s3, c3, 0], [i s1, 0, 0, c1]]
/// with c_k = cos(k pi/8), s_k = sin(k pi/8).
UnitaryMatrix berkeley_gate();

/// Magic (Bell) basis matrix Q with Q^dagger (SU(2) x SU(2)) Q = SO(4).
UnitaryMatrix magic_matrix();

/// phase * (a kron b) with a, b in SU(2).
struct LocalGate {
  CMatrix a;
  CMatrix b;
  Complex phase{1.0, 0.0};

  CMatrix matrix() const;
};

/// Factors a 4x4 element of U(2) x U(2) by a rank-one fit of its
/// reshuffled matrix. Throws SynthesisFailure if the input is not a
/// Kronecker product within `tol`.
LocalGate kron_factor(const CMatrix &l, double tol = 1e-8);

/// l1 * B * l2 * B * l3 = phase * target.
struct SU4Circuit {
  LocalGate l1, l2, l3;
  Complex phase{1.0, 0.0};

  CMatrix matrix() const;
};

/// Writes any U(4) gate as L1 B L2 B L3 (up to global phase). The middle
/// local gate is found by matching the SO(4)-double-coset invariant of
/// B_m k B_m (B_m = Q^dagger B Q) with that of the target; the outer gates
/// come from aligning both AI decompositions. Multi-start seeds derive from
/// the target entries. Throws SynthesisFailure if no start verifies.
SU4Circuit synth_su4(const UnitaryMatrix &target, const Tolerance &tol = {});

/// K1, K2 in U(2) (or U(1)).
struct GatePair {
  CMatrix k1;
  CMatrix k2;
};

/// cos(D) K1 cos(D) - sin(D) K2 sin(D) with D = pi diag(x).
CMatrix aiii_corner(const std::vector<double> &x, const GatePair &k);

/// Finds K1, K2 such that the corner matrix for x = (1/2 - t, t) has
/// singular values (sigma1, sigma2). Throws InvalidArgument outside
/// t in [0, 1/4], 1 >= sigma1 >= sigma2 >= 0 (up to 1e-12), and
/// SolverFailure if no start converges.
GatePair synth_aiii_2x2(double t, double sigma1, double sigma2);

/// target = k1 * v * k2 * v_inv * k3, k_i in S(U(m) x U(m)).
struct AIIIFactors {
  UnitaryMatrix k1, v, k2, v_inv, k3;
  AlcovePoint x_star;

  CMatrix matrix() const;
};

/// A generic point of the AIII fixed line: (1/2 - t_1, ..., t_1) with
/// t_j = j / (4(p + 1)), p = floor(m/2), and 1/4 in the middle for odd m.
AlcovePoint default_fixed_line_point(int m);

/// Five-factor synthesis through V = alcove_exp(x_star). x_star defaults to
/// default_fixed_line_point; an override must lie on the fixed line
/// (throws NotInAlcove otherwise).
AIIIFactors synth_aiii(const UnitaryMatrix &target,
                       const std::optional<AlcovePoint> &x_star = {},
                       const Tolerance &tol = {});

/// U = diag(I, A') (H x I) diag(I, B') (H x I) diag(S, C').
struct ZXZFactors {
  int n = 0;  ///< qubits
  CMatrix ap, bp, cp, s;

  CMatrix matrix() const;
};

/// Block-ZXZ decomposition of a 2^n x 2^n unitary, built from its
/// cosine-sine decomposition U = diag(P, Q) cs(x) diag(R, T):
///   A' = Q P^dagger, B' = P e^{-2 i pi x} P^dagger,
///   S = P e^{i pi x} R, C' = P e^{i pi x} T.
/// Throws InvalidArgument unless the dimension is a power of two >= 2.
ZXZFactors block_zxz(const UnitaryMatrix &u, const Tolerance &tol = {});

}  // namespace kakpair
