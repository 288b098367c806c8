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

#include "kakpair/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kakpair/cartan.hpp"
#include "kakpair/matrix_io.hpp"
#include "kakpair/products.hpp"
#include "kakpair/synthesis.hpp"

namespace kakpair {

using nlohmann::json;

namespace {

struct Options {
  std::string pair = "ai";
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;

  std::vector<std::string> in;
  std::string u, v;
  std::string x;
  std::string x_star;
  std::string split;
  bool swap = false;
  int n = 0;
  bool special = false;
};

class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char b : bytes) {
      h_ ^= b;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ULL;
  }
  void add_file(const std::string &path) {
    const std::string file = path.substr(0, path.find('#'));
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    add(ss.str());
  }
  std::string hex() const {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h_;
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

json point_json(const AlcovePoint &p) { return json(p.x); }

std::vector<double> parse_vector(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(ErrorCode::ParseError, "empty coordinate in '" + text + "'");
    out.push_back(to_double(parse_rational(item.substr(b, e - b + 1))));
  }
  if (out.empty())
    throw Error(ErrorCode::ParseError, "no coordinates in '" + text + "'");
  return out;
}

UnitaryMatrix special_input(const std::string &path, const Tolerance &tol) {
  const UnitaryMatrix u = parse_matrix(path, tol);
  return UnitaryMatrix(u.mat(), tol, true);
}

void check_residual(json &residuals, const std::string &name, double value,
                    double bound) {
  residuals[name] = value;
  if (!(value <= bound)) {
    std::ostringstream os;
    os << "residual '" << name << "' = " << value << " exceeds " << bound;
    throw Error(ErrorCode::NonConvergence, os.str());
  }
}

json local_json(const LocalGate &g) {
  return json{{"a", matrix_to_json(g.a)},
              {"b", matrix_to_json(g.b)},
              {"phase", {g.phase.real(), g.phase.imag()}}};
}

/// Runs one subcommand; fills outputs and residuals and returns the exit
/// code (0 or 2).
int dispatch(const std::string &cmd, const Options &o, const Tolerance &tol,
             json &outputs, json &residuals, Digest &digest) {
  for (const auto &p : o.in) digest.add_file(p);
  if (!o.u.empty()) digest.add_file(o.u);
  if (!o.v.empty()) digest.add_file(o.v);
  const PairKind kind = parse_pair_kind(o.pair);

  if (cmd == "decompose" || cmd == "invariant") {
    json results = json::array();
    for (const auto &path : o.in) {
      const UnitaryMatrix u = special_input(path, tol);
      const PairType pair = PairType::for_matrix(kind, u.dim());
      json r{{"input", path}};
      if (cmd == "invariant") {
        const AlcovePoint x = a_invariant(u, pair, tol);
        r["x"] = point_json(x);
        if (kind == PairKind::AIII) {
          const AlcovePoint xs = a_invariant_aiii_spectral(u, tol);
          r["x_spectral"] = point_json(xs);
          residuals[path + ":spectral_gap"] = linf_distance(x.x, xs.x);
        }
      } else {
        const CartanFactors f = decompose(u, pair, tol);
        r["x"] = point_json(f.x);
        r["k1"] = matrix_to_json(f.k1.mat(), o.pair);
        r["k2"] = matrix_to_json(f.k2.mat(), o.pair);
        r["a"] = matrix_to_json(alcove_exp(f.x, tol).mat(), o.pair);
        check_residual(residuals, path, f.residual(u.mat()),
                       tol.eps_recon * static_cast<double>(u.dim()));
      }
      results.push_back(std::move(r));
    }
    outputs["results"] = std::move(results);
    return kExitOk;
  }

  if (cmd == "check-pair") {
    const UnitaryMatrix u = special_input(o.u, tol);
    const UnitaryMatrix v = special_input(o.v, tol);
    const PairType pair = PairType::for_matrix(kind, u.dim());
    const PairCertificate c = pair_large_product(u, v, pair, tol);
    outputs["large"] = c.large;
    outputs["a_u"] = point_json(c.a_u);
    outputs["a_v_inv"] = point_json(c.a_v_inv);
    outputs["in_B"] = in_B(c.a_u, tol);
    return c.large ? kExitOk : kExitFalse;
  }

  if (cmd == "check-point") {
    digest.add(o.x);
    const std::vector<double> x = parse_vector(o.x);
    const AlcovePoint p{PairType(kind, static_cast<int>(x.size())), x};
    if (!in_alcove(p.pair, p.x, tol.eps_spec))
      throw Error(ErrorCode::NotInAlcove, "point is not in the closed alcove");
    const bool b = in_B(p, tol);
    outputs["in_B"] = b;
    outputs["thm12"] = thm12_necessary(p, tol);
    outputs["x"] = x;
    return b ? kExitOk : kExitFalse;
  }

  if (cmd == "synth-su4") {
    const UnitaryMatrix u = parse_matrix(o.in.at(0), tol);
    const SU4Circuit c = synth_su4(u, tol);
    outputs["l1"] = local_json(c.l1);
    outputs["l2"] = local_json(c.l2);
    outputs["l3"] = local_json(c.l3);
    outputs["phase"] = {c.phase.real(), c.phase.imag()};
    outputs["berkeley"] = matrix_to_json(berkeley_gate().mat());
    check_residual(residuals, "reconstruction",
                   frobenius_distance(c.matrix(), c.phase * u.mat()), 4e-6);
    return kExitOk;
  }

  if (cmd == "synth-aiii") {
    const UnitaryMatrix u = special_input(o.in.at(0), tol);
    std::optional<AlcovePoint> xs;
    if (!o.x_star.empty()) {
      digest.add(o.x_star);
      xs = AlcovePoint{PairType::for_matrix(PairKind::AIII, u.dim()),
                       parse_vector(o.x_star)};
    }
    const AIIIFactors f = synth_aiii(u, xs, tol);
    outputs["x_star"] = point_json(f.x_star);
    outputs["k1"] = matrix_to_json(f.k1.mat(), "aiii");
    outputs["v"] = matrix_to_json(f.v.mat(), "aiii");
    outputs["k2"] = matrix_to_json(f.k2.mat(), "aiii");
    outputs["v_inv"] = matrix_to_json(f.v_inv.mat(), "aiii");
    outputs["k3"] = matrix_to_json(f.k3.mat(), "aiii");
    check_residual(residuals, "reconstruction",
                   frobenius_distance(f.matrix(), u.mat()),
                   1e-6 * static_cast<double>(u.dim()));
    return kExitOk;
  }

  if (cmd == "zxz") {
    const UnitaryMatrix u = parse_matrix(o.in.at(0), tol);
    const ZXZFactors z = block_zxz(u, tol);
    outputs["qubits"] = z.n;
    outputs["a_prime"] = matrix_to_json(z.ap);
    outputs["b_prime"] = matrix_to_json(z.bp);
    outputs["c_prime"] = matrix_to_json(z.cp);
    outputs["s"] = matrix_to_json(z.s);
    check_residual(residuals, "reconstruction",
                   frobenius_distance(z.matrix(), u.mat()),
                   tol.eps_recon * static_cast<double>(u.dim()));
    return kExitOk;
  }

  if (cmd == "fat-points") {
    const VPolytope q = polytope_from_json(read_json(o.in.at(0)));
    digest.add(o.split);
    const std::vector<double> s = parse_vector(o.split);
    if (s.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "--split takes 'd1,d2'");
    const int d1 = static_cast<int>(s[0]), d2 = static_cast<int>(s[1]);
    const VPolytope r = o.swap ? fat_points(swap_factors(q, d1), d2, d1)
                               : fat_points(q, d1, d2);
    outputs["fat_points"] = polytope_to_json(r);
    outputs["empty"] = r.is_empty();
    return kExitOk;
  }

  if (cmd == "scan-centroid") {
    digest.add(std::to_string(o.n));
    const auto v = centroid_feasibility_scan(o.n);
    json list = json::array();
    for (const auto &c : v) {
      list.push_back({{"k", c.triple.k},
                      {"I", c.triple.I},
                      {"J", c.triple.J},
                      {"K", c.triple.K},
                      {"d", c.triple.d},
                      {"vertex", c.vertex},
                      {"lhs", to_string(c.lhs)}});
    }
    outputs["violations"] = std::move(list);
    return v.empty() ? kExitOk : kExitFalse;
  }

  if (cmd == "haar") {
    digest.add(std::to_string(o.n) + ":" + std::to_string(o.seed));
    const UnitaryMatrix u = haar_unitary(o.n, o.seed, o.special);
    outputs["matrix"] = matrix_to_json(u.mat());
    residuals["unitarity"] = unitarity_defect(u.mat());
    return kExitOk;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Cartan decompositions, double-coset certificates and "
               "fixed-depth synthesis for SU(n)",
               "kakpair"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *s) {
    s->add_option("--pair", o.pair, "symmetric pair: ai, aii, aiii")
        ->check(CLI::IsMember({"ai", "aii", "aiii"}, CLI::ignore_case));
    s->add_option("--tol", o.tol,
                  "reconstruction tolerance; the others scale with it")
        ->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "random seed");
    s->add_option("--out", o.out, "write the report to this path");
    s->add_flag("--timing", o.timing, "include elapsed time in the report");
  };
  auto with_in = [&](CLI::App *s, bool many) {
    auto *opt = s->add_option("--in", o.in, "input file (path[#/pointer])")
                    ->required();
    if (!many) opt->expected(1);
  };

  auto *dec = app.add_subcommand("decompose", "KAK factorization (AI, AIII)");
  with_in(dec, true);
  auto *inv = app.add_subcommand("invariant", "alcove invariant a(U)");
  with_in(inv, true);
  auto *cp = app.add_subcommand("check-pair", "certify K U K V K = G");
  cp->add_option("--u", o.u)->required();
  cp->add_option("--v", o.v)->required();
  auto *cpt = app.add_subcommand("check-point",
                                 "B-membership and fixed-point test");
  cpt->add_option("--x", o.x, "comma-separated coordinates")->required();
  auto *s4 = app.add_subcommand("synth-su4", "L B L B L circuit");
  with_in(s4, false);
  auto *s3 = app.add_subcommand("synth-aiii", "five-factor AIII synthesis");
  with_in(s3, false);
  s3->add_option("--x-star", o.x_star, "fixed-line point (comma-separated)");
  auto *zx = app.add_subcommand("zxz", "block-ZXZ decomposition");
  with_in(zx, false);
  auto *fp = app.add_subcommand("fat-points", "fat points of a polytope");
  with_in(fp, false);
  fp->add_option("--split", o.split, "d1,d2")->required();
  fp->add_flag("--swap", o.swap, "fat points over the first factor instead");
  auto *sc = app.add_subcommand("scan-centroid",
                                "check the centroid inequalities for SU(n)");
  sc->add_option("--n", o.n)->required();
  auto *hr = app.add_subcommand("haar", "Haar-random unitary");
  hr->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  hr->add_flag("--special", o.special, "normalize det to 1");
  for (auto *s : {dec, inv, cp, cpt, s4, s3, zx, fp, sc, hr}) common(s);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return kExitError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  json report{{"tool", "kakpair"}, {"version", kVersion}, {"command", args}};
  json outputs = json::object(), residuals = json::object();
  Digest digest;
  int code = kExitOk;
  try {
    const Tolerance tol = o.tol > 0 ? Tolerance::scaled(o.tol) : Tolerance{};
    code = dispatch(cmd, o, tol, outputs, residuals, digest);
  } catch (const Error &e) {
    err << json{{"error", std::string(error_code_name(e.code()))},
                {"message", e.what()}}
               .dump()
        << "\n";
    return kExitError;
  } catch (const std::exception &e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitError;
  }
  report["inputs_digest"] = digest.hex();
  report["outputs"] = std::move(outputs);
  report["residuals"] = std::move(residuals);
  report["status"] = code == kExitOk ? "ok" : "false";
  if (o.timing) {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
  }
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << json{{"error", "ParseError"},
                  {"message", "cannot write '" + o.out + "'"}}
                 .dump()
          << "\n";
      return kExitError;
    }
    f << text;
  }
  return code;
}

}  // namespace kakpair
