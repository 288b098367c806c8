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

#include "kakpair/exact.hpp"

#include <cctype>
#include <cmath>

#include "kakpair/errors.hpp"

namespace kakpair {

double to_double(const Rational &q) { return q.convert_to<double>(); }

std::vector<double> to_double(const RatVec &v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto &q : v) out.push_back(to_double(q));
  return out;
}

namespace {

Rational parse_decimal(std::string_view s) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  boost::multiprecision::cpp_int mant = 0;
  long exp10 = 0;
  bool digits = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    mant = mant * 10 + (s[i++] - '0');
    digits = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mant = mant * 10 + (s[i++] - '0');
      --exp10;
      digits = true;
    }
  }
  if (!digits) throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    long e = 0;
    bool edigits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      e = e * 10 + (s[i++] - '0');
      edigits = true;
      if (e > 100000) throw Error(ErrorCode::ParseError, "exponent too large");
    }
    if (!edigits) throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(s) + "'");
    exp10 += eneg ? -e : e;
  }
  if (i != s.size()) throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
  boost::multiprecision::cpp_int scale = 1;
  for (long k = 0; k < std::abs(exp10); ++k) scale *= 10;
  Rational out = exp10 >= 0 ? Rational(mant * scale) : Rational(mant, scale);
  return neg ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  int e = 0;
  double frac = std::frexp(v, &e);
  // frac * 2^53 is an exact integer.
  const auto mant = static_cast<long long>(std::ldexp(frac, 53));
  e -= 53;
  Rational out(mant);
  boost::multiprecision::cpp_int p = 1;
  p <<= std::abs(e);
  return e >= 0 ? Rational(out * p) : Rational(out / p);
}

std::string to_string(const Rational &q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational dot(const RatVec &a, const RatVec &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> rref(RatMat &rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = 1 / rows[r][c];
    for (auto &v : rows[r]) v *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(RatMat rows) { return rref(rows).size(); }

bool solve_affine(const RatMat &a, const RatVec &b, RatVec &particular,
                  std::vector<RatVec> &null_basis) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  RatMat aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVec row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug);
  for (auto p : pivots)
    if (p == n) return false;
  particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    particular[pivots[r]] = aug[r][n];
    is_pivot[pivots[r]] = true;
  }
  null_basis.clear();
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][f];
    null_basis.push_back(std::move(v));
  }
  return true;
}

}  // namespace kakpair
