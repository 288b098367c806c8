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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace kakpair {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

double to_double(const Rational &q);
std::vector<double> to_double(const RatVec &v);

/// Parses "p/q", "p", or a decimal/scientific literal (converted exactly
/// from its decimal digits). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double.
Rational from_double(double v);

std::string to_string(const Rational &q);

Rational dot(const RatVec &a, const RatVec &b);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(RatMat &rows);

/// Rank of a set of row vectors.
std::size_t rank(RatMat rows);

/// Solution set of A x = b: a particular solution plus a basis of the
/// null space of A. Returns false if inconsistent.
bool solve_affine(const RatMat &a, const RatVec &b, RatVec &particular,
                  std::vector<RatVec> &null_basis);

}  // namespace kakpair
