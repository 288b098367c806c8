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

#include "kakpair/numerics.hpp"

namespace kakpair::detail {

struct LMResult {
  RVector x;
  double cost = 0.0;  ///< ||r(x)||_2
  int iterations = 0;
};

/// Levenberg-Marquardt on r: R^p -> R^q with a central-difference Jacobian.
/// Stops when ||r|| <= target, when a step no longer improves the cost, or
/// after max_iter iterations; never throws on non-convergence.
LMResult levenberg_marquardt(
    const std::function<RVector(const RVector &)> &residual, RVector x0,
    double target, int max_iter = 200);

}  // namespace kakpair::detail
