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

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "kakpair/numerics.hpp"
#include "kakpair/polytope.hpp"

namespace kakpair {

/// A matrix file: {"n": int, "re": [[...]], "im": [[...]], "pair"?: str}.
struct MatrixFile {
  CMatrix m;
  std::optional<std::string> pair;
};

/// Throws ParseError naming the offending field.
MatrixFile matrix_from_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(const CMatrix &m,
                              const std::optional<std::string> &pair = {});

/// Reads a JSON document from `path`. A suffix "#/json/pointer" selects a
/// sub-document, so factor matrices inside reports can be re-ingested.
/// Throws ParseError.
nlohmann::json read_json(const std::string &path);

/// Reads and validates a unitary (NotUnitary carries the measured defect).
UnitaryMatrix parse_matrix(const std::string &path, const Tolerance &tol = {},
                           std::optional<std::string> *pair = nullptr);

/// {"dim": d, "vertices": [[coord, ...], ...]}; coordinates are "p/q"
/// strings, integer strings, or JSON numbers (taken at their exact binary
/// value). Throws ParseError.
VPolytope polytope_from_json(const nlohmann::json &j);
/// Coordinates are written as exact "p/q" strings.
nlohmann::json polytope_to_json(const VPolytope &p);

}  // namespace kakpair
