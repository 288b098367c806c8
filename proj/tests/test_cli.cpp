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

#include <catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unistd.h>

#include "kakpair/cli.hpp"
#include "kakpair/matrix_io.hpp"
#include "kakpair/synthesis.hpp"

namespace kakpair {
namespace test_cli {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

static Result call(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("kakpair_cli_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string &name) const {
    return (path_ / name).string();
  }
  std::string write(const std::string &name, const std::string &text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
  std::string write(const std::string &name, const json &j) const {
    return write(name, j.dump());
  }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

static json magic_berkeley() {
  const CMatrix q = magic_matrix().mat();
  return matrix_to_json(q.adjoint() * berkeley_gate().mat() * q, "ai");
}

TEST_CASE("matrix json round trip is bit exact") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const CMatrix u = haar_unitary(1 + s % 6, s).mat();
    const json j = json::parse(matrix_to_json(u).dump());
    CHECK(matrix_from_json(j).m == u);
  }
  const CMatrix odd{{Complex(1e-300, -0.1), Complex(1.0 / 3, 5e-324)}};
  CHECK(matrix_from_json(json::parse(matrix_to_json(odd.transpose() *
                                                    odd).dump()))
            .m == odd.transpose() * odd);
}

TEST_CASE("parse_matrix fixtures") {
  TempDir dir;
  const auto id = dir.write("id.json", matrix_to_json(CMatrix::Identity(3, 3)));
  CHECK(parse_matrix(id).mat() == CMatrix::Identity(3, 3));
  const auto b = dir.write("b.json", matrix_to_json(berkeley_gate().mat()));
  CHECK(parse_matrix(b).mat() == berkeley_gate().mat());

  json bad = matrix_to_json(CMatrix::Identity(2, 2));
  bad["im"] = json::array({json::array({0, 0})});
  try {
    parse_matrix(dir.write("bad.json", bad));
    FAIL("expected ParseError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("im") != std::string::npos);
  }
  json extra = matrix_to_json(CMatrix::Identity(2, 2));
  extra["junk"] = 1;
  CHECK_THROWS_AS(parse_matrix(dir.write("extra.json", extra)), Error);

  CMatrix nu = CMatrix::Identity(2, 2);
  nu(0, 1) = 0.1;
  try {
    parse_matrix(dir.write("nu.json", matrix_to_json(nu)));
    FAIL("expected NotUnitary");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotUnitary);
  }
  CHECK_THROWS_AS(parse_matrix(dir.file("missing.json")), Error);
}

TEST_CASE("polytope json accepts rationals and floats") {
  const json j = json::parse(
      R"({"dim": 2, "vertices": [["0", 0], [0, "1"], [1, 1], ["3/2", 0.5], [1, 0]]})");
  const VPolytope q = polytope_from_json(j);
  CHECK(q.vertices().size() == 5);
  CHECK(polytope_from_json(polytope_to_json(q)) == q);
}

TEST_CASE("decompose reports factors that re-ingest") {
  TempDir dir;
  const auto u = dir.write("u.json", matrix_to_json(haar_unitary(4, 5, true).mat()));
  for (const std::string pair : {"ai", "aiii"}) {
    const auto r = call({"decompose", "--pair", pair, "--in", u});
    REQUIRE(r.code == kExitOk);
    const json rep = r.report();
    CHECK(rep["status"] == "ok");
    CHECK(rep["residuals"][u].get<double>() < 1e-8);
    const auto out = dir.write("rep.json", rep);
    for (const std::string k : {"k1", "k2", "a"})
      CHECK_NOTHROW(parse_matrix(out + "#/outputs/results/0/" + k));
  }
}

TEST_CASE("decompose rejects AII") {
  TempDir dir;
  const auto u = dir.write("u.json", matrix_to_json(haar_unitary(4, 5, true).mat()));
  const auto r = call({"decompose", "--pair", "aii", "--in", u});
  CHECK(r.code == kExitError);
  CHECK(r.error()["error"] == "Unsupported");
}

TEST_CASE("invariant handles several inputs and the AIII cross-check") {
  TempDir dir;
  const auto a = dir.write("a.json", matrix_to_json(berkeley_gate().mat()));
  const auto b = dir.write("b.json", matrix_to_json(CMatrix::Identity(4, 4)));
  const auto r = call({"invariant", "--pair", "aiii", "--in", a, "--in", b});
  REQUIRE(r.code == kExitOk);
  const json res = r.report()["outputs"]["results"];
  REQUIRE(res.size() == 2);
  CHECK(std::abs(res[0]["x"][0].get<double>() - 0.375) < 1e-12);
  CHECK(std::abs(res[0]["x"][1].get<double>() - 0.125) < 1e-12);
  CHECK(res[1]["x"] == json::array({0.0, 0.0}));
}

TEST_CASE("check-pair exit codes") {
  TempDir dir;
  const auto bm = dir.write("bm.json", magic_berkeley());
  const auto id = dir.write("id.json", matrix_to_json(CMatrix::Identity(4, 4)));
  const auto yes = call({"check-pair", "--pair", "ai", "--u", bm, "--v", bm});
  CHECK(yes.code == kExitOk);
  CHECK(yes.report()["outputs"]["large"] == true);
  const auto no = call({"check-pair", "--pair", "ai", "--u", id, "--v", id});
  CHECK(no.code == kExitFalse);
  CHECK(no.report()["outputs"]["large"] == false);
  CHECK(no.report()["status"] == "false");
}

TEST_CASE("check-point") {
  const auto c = call({"check-point", "--pair", "ai", "--x",
                       "3/8,1/8,-1/8,-3/8"});
  CHECK(c.code == kExitOk);
  CHECK(c.report()["outputs"]["thm12"] == true);
  const auto z = call({"check-point", "--pair", "aiii", "--x", "0.3,0.1"});
  CHECK(z.code == kExitFalse);
  const auto bad = call({"check-point", "--pair", "aiii", "--x", "0.1,0.3"});
  CHECK(bad.code == kExitError);
  CHECK(bad.error()["error"] == "NotInAlcove");
}

TEST_CASE("synthesis subcommands") {
  TempDir dir;
  const auto u4 = dir.write("u4.json", matrix_to_json(haar_unitary(4, 9).mat()));
  const auto s4 = call({"synth-su4", "--in", u4});
  REQUIRE(s4.code == kExitOk);
  CHECK(s4.report()["residuals"]["reconstruction"].get<double>() < 4e-6);

  const auto u6 =
      dir.write("u6.json", matrix_to_json(haar_unitary(6, 21, true).mat()));
  const auto s3 = call({"synth-aiii", "--in", u6});
  REQUIRE(s3.code == kExitOk);
  CHECK(s3.report()["residuals"]["reconstruction"].get<double>() < 6e-6);
  const auto s3x = call({"synth-aiii", "--in", u6, "--x-star",
                         "3/8,1/4,1/8"});
  CHECK(s3x.code == kExitOk);

  const auto u8 = dir.write("u8.json", matrix_to_json(haar_unitary(8, 4).mat()));
  const auto z = call({"zxz", "--in", u8});
  REQUIRE(z.code == kExitOk);
  CHECK(z.report()["outputs"]["qubits"] == 3);
}

TEST_CASE("fat-points subcommand") {
  TempDir dir;
  const auto q = dir.write(
      "q.json",
      std::string(R"({"dim": 2, "vertices": [[0,0],[0,1],[1,1],["3/2","1/2"],[1,0]]})"));
  const auto a = call({"fat-points", "--in", q, "--split", "1,1"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.report()["outputs"]["fat_points"]["vertices"] ==
        json::parse(R"([["1/2"]])"));
  const auto b = call({"fat-points", "--in", q, "--split", "1,1", "--swap"});
  REQUIRE(b.code == kExitOk);
  CHECK(b.report()["outputs"]["fat_points"]["vertices"] ==
        json::parse(R"([["0"],["1"]])"));
}

TEST_CASE("scan-centroid and haar") {
  const auto s = call({"scan-centroid", "--n", "4"});
  CHECK(s.code == kExitOk);
  CHECK(s.report()["outputs"]["violations"].empty());
  const auto e = call({"scan-centroid", "--n", "9"});
  CHECK(e.code == kExitError);
  CHECK(e.error()["error"] == "BoundExceeded");

  const auto h = call({"haar", "--n", "3", "--seed", "5", "--special"});
  REQUIRE(h.code == kExitOk);
  const CMatrix m =
      matrix_from_json(h.report()["outputs"]["matrix"]).m;
  CHECK(std::abs(m.determinant() - Complex(1, 0)) < 1e-12);
}

TEST_CASE("reports are deterministic and can go to a file") {
  TempDir dir;
  const std::vector<std::string> args{"haar", "--n", "4", "--seed", "11"};
  const auto a = call(args), b = call(args);
  CHECK(a.out == b.out);
  CHECK(a.report().contains("inputs_digest"));
  CHECK_FALSE(a.report().contains("elapsed_ms"));
  auto timed = args;
  timed.push_back("--timing");
  CHECK(call(timed).report().contains("elapsed_ms"));

  const auto path = dir.file("out.json");
  auto to_file = args;
  to_file.insert(to_file.end(), {"--out", path});
  const auto f = call(to_file);
  CHECK(f.code == kExitOk);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  // Identical apart from the echoed command line.
  json from_file = json::parse(ss.str()), direct = a.report();
  from_file.erase("command");
  direct.erase("command");
  CHECK(from_file == direct);

  const auto u = dir.write("u.json", matrix_to_json(haar_unitary(4, 2).mat()));
  const auto d1 = call({"synth-su4", "--in", u});
  const auto d2 = call({"synth-su4", "--in", u});
  CHECK(d1.out == d2.out);
}

TEST_CASE("errors are structured") {
  TempDir dir;
  CHECK(call({}).code == kExitError);
  const auto unknown = call({"frobnicate"});
  CHECK(unknown.code == kExitError);
  CHECK(unknown.error()["error"] == "ParseError");

  json bad = matrix_to_json(CMatrix::Identity(2, 2));
  bad["re"] = json::array({json::array({1, 0})});
  const auto p = dir.write("bad.json", bad);
  const auto r = call({"decompose", "--pair", "ai", "--in", p});
  CHECK(r.code == kExitError);
  CHECK(r.error()["error"] == "ParseError");
  CHECK(r.error()["message"].get<std::string>().find("re") !=
        std::string::npos);

  const auto odd = dir.write("odd.json", matrix_to_json(haar_unitary(3, 1, true).mat()));
  const auto o = call({"invariant", "--pair", "aiii", "--in", odd});
  CHECK(o.code == kExitError);
  CHECK(o.error()["error"] == "DimensionOdd");
  const auto pk = call({"invariant", "--pair", "bdi", "--in", odd});
  CHECK(pk.code == kExitError);
}

}  // namespace test_cli
}  // namespace kakpair
