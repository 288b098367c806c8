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

#include "solver.hpp"

#include <cmath>

namespace kakpair::detail {

LMResult levenberg_marquardt(
    const std::function<RVector(const RVector &)> &residual, RVector x0,
    double target, int max_iter) {
  LMResult out;
  out.x = std::move(x0);
  RVector r = residual(out.x);
  out.cost = r.norm();
  double lambda = 1e-3;
  const Eigen::Index p = out.x.size();
  for (int it = 0; it < max_iter && out.cost > target; ++it) {
    out.iterations = it + 1;
    RMatrix jac(r.size(), p);
    for (Eigen::Index j = 0; j < p; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(out.x(j)));
      RVector xp = out.x, xm = out.x;
      xp(j) += h;
      xm(j) -= h;
      jac.col(j) = (residual(xp) - residual(xm)) / (2 * h);
    }
    const RMatrix jtj = jac.transpose() * jac;
    const RVector g = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      RMatrix a = jtj;
      a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      const RVector step = a.ldlt().solve(-g);
      const RVector xn = out.x + step;
      const RVector rn = residual(xn);
      const double cn = rn.norm();
      if (std::isfinite(cn) && cn < out.cost) {
        out.x = xn;
        r = rn;
        out.cost = cn;
        lambda = std::max(lambda / 5, 1e-15);
        improved = true;
        break;
      }
      lambda *= 8;
    }
    if (!improved) break;
  }
  return out;
}

}  // namespace kakpair::detail
