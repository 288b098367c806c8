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

#include <cstdint>
#include <vector>

#include "kakpair/alcove.hpp"
#include "kakpair/numerics.hpp"

namespace kakpair {

/// U = k1 * alcove_exp(x) * k2 with k1, k2 in K.
struct CartanFactors {
  PairType pair;
  UnitaryMatrix k1;
  UnitaryMatrix k2;
  AlcovePoint x;

  /// ||k1 exp(i pi x) k2 - u||_F.
  double residual(const CMatrix &u) const;
};

/// Omega = [[0, -I], [I, 0]] of size 2m.
CMatrix omega_matrix(Eigen::Index m);

/// theta(U): conj(U) for AI, Omega conj(U) Omega^{-1} for AII, J U J for
/// AIII with J = diag(I, -I). Evaluated by sign/block permutations, so
/// theta(theta(U)) = U exactly. Throws DimensionMismatch.
UnitaryMatrix apply_involution(const UnitaryMatrix &u, const PairType &pair);

/// U theta(U)^{-1}.
UnitaryMatrix cartan_double(const UnitaryMatrix &u, const PairType &pair,
                            const Tolerance &tol = {});

/// The canonical alcove point a(U). AI and AII read it off the spectrum of
/// the Cartan double (AII pairs the doubly degenerate eigenvalues, throwing
/// PairingFailure); AIII uses the singular values of the corner blocks.
AlcovePoint a_invariant(const UnitaryMatrix &u, const PairType &pair,
                        const Tolerance &tol = {});

/// AIII invariant from the Cartan-double spectrum {e^{+-2 pi i x_j}}.
/// Throws SpectralMismatch if the spectrum does not split into +- pairs.
AlcovePoint a_invariant_aiii_spectral(const UnitaryMatrix &u,
                                      const Tolerance &tol = {});

/// Eigenvalues of the AII Cartan double grouped into pairs; returns one
/// representative per pair together with the largest pair separation.
struct EigenPairing {
  std::vector<Complex> representatives;
  double max_separation = 0.0;
};
EigenPairing pair_double_spectrum(const std::vector<Complex> &values,
                                  double radius);

/// exp(i pi X) embedded for the pair: diag(e^{i pi x}) (AI),
/// diag(D, D) (AII), [[cos D, i sin D], [i sin D, cos D]] (AIII).
/// Throws NotInAlcove.
UnitaryMatrix alcove_exp(const AlcovePoint &x, const Tolerance &tol = {});

/// U = O1 D O2 with O1, O2 in SO(n).
CartanFactors decompose_AI(const UnitaryMatrix &u, const Tolerance &tol = {});

/// U = diag(P, Q) cs(x) diag(R, S) with both block factors of det 1.
CartanFactors decompose_AIII(const UnitaryMatrix &u,
                             const Tolerance &tol = {});

/// Dispatches on the pair; AII throws Unsupported.
CartanFactors decompose(const UnitaryMatrix &u, const PairType &pair,
                        const Tolerance &tol = {});

/// Membership of K = SO(n), Sp(m), S(U(m) x U(m)) within eps_ortho * n.
bool in_K(const CMatrix &k, const PairType &pair, const Tolerance &tol = {});

/// Random element of K (Haar for AI/AIII; exp of a random Lie-algebra
/// element for AII).
UnitaryMatrix random_k_element(const PairType &pair, std::uint64_t seed);

}  // namespace kakpair
