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

#include "kakpair/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace kakpair {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &msg) {
  throw Error(ErrorCode::ParseError, msg);
}

RMatrix read_array(const json &j, const char *field, std::size_t n) {
  if (!j.contains(field)) parse_error(std::string("missing field '") + field + "'");
  const json &a = j.at(field);
  if (!a.is_array() || a.size() != n) {
    std::ostringstream os;
    os << "field '" << field << "' must be an array of " << n << " rows";
    parse_error(os.str());
  }
  RMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json &row = a[r];
    if (!row.is_array() || row.size() != n) {
      std::ostringstream os;
      os << "field '" << field << "' row " << r << " must have " << n
         << " entries";
      parse_error(os.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number()) {
        std::ostringstream os;
        os << "field '" << field << "' entry (" << r << ", " << c
           << ") is not a number";
        parse_error(os.str());
      }
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

}  // namespace

MatrixFile matrix_from_json(const json &j) {
  if (!j.is_object()) parse_error("matrix document must be a JSON object");
  for (const auto &[key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "re" && key != "im" && key != "pair")
      parse_error("unexpected field '" + key + "'");
  }
  if (!j.contains("n") || !j.at("n").is_number_integer() ||
      j.at("n").get<long long>() < 1)
    parse_error("field 'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(j.at("n").get<long long>());
  MatrixFile f;
  const RMatrix re = read_array(j, "re", n);
  const RMatrix im = read_array(j, "im", n);
  f.m.resize(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) f.m(r, c) = Complex(re(r, c), im(r, c));
  if (j.contains("pair")) {
    if (!j.at("pair").is_string()) parse_error("field 'pair' must be a string");
    f.pair = j.at("pair").get<std::string>();
  }
  return f;
}

json matrix_to_json(const CMatrix &m, const std::optional<std::string> &pair) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json j{{"n", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
  if (pair) j["pair"] = *pair;
  return j;
}

json read_json(const std::string &path) {
  std::string file = path, pointer;
  if (const auto hash = path.find('#'); hash != std::string::npos) {
    file = path.substr(0, hash);
    pointer = path.substr(hash + 1);
  }
  std::ifstream in(file);
  if (!in) parse_error("cannot open '" + file + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception &e) {
    parse_error("'" + file + "': " + e.what());
  }
  if (pointer.empty()) return doc;
  try {
    return doc.at(json::json_pointer(pointer));
  } catch (const json::exception &e) {
    parse_error("'" + path + "': " + e.what());
  }
}

UnitaryMatrix parse_matrix(const std::string &path, const Tolerance &tol,
                           std::optional<std::string> *pair) {
  MatrixFile f;
  try {
    f = matrix_from_json(read_json(path));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::ParseError) throw;
    parse_error("'" + path + "': " + e.what());
  }
  if (pair) *pair = f.pair;
  return UnitaryMatrix(std::move(f.m), tol);
}

VPolytope polytope_from_json(const json &j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer())
    parse_error("polytope needs an integer field 'dim'");
  const long long dim = j.at("dim").get<long long>();
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    parse_error("polytope needs an array field 'vertices'");
  std::vector<RatVec> pts;
  for (const auto &v : j.at("vertices")) {
    if (!v.is_array() || static_cast<long long>(v.size()) != dim)
      parse_error("each vertex must be an array of 'dim' coordinates");
    RatVec p;
    for (const auto &c : v) {
      if (c.is_string()) {
        p.push_back(parse_rational(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        p.push_back(Rational(c.get<long long>()));
      } else if (c.is_number()) {
        p.push_back(from_double(c.get<double>()));
      } else {
        parse_error("vertex coordinates must be numbers or \"p/q\" strings");
      }
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty()) parse_error("polytope has no vertices");
  try {
    return VPolytope(static_cast<int>(dim), std::move(pts));
  } catch (const Error &e) {
    parse_error(e.what());
  }
}

json polytope_to_json(const VPolytope &p) {
  json verts = json::array();
  for (const auto &v : p.vertices()) {
    json row = json::array();
    for (const auto &c : v) row.push_back(to_string(c));
    verts.push_back(std::move(row));
  }
  return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

}  // namespace kakpair
