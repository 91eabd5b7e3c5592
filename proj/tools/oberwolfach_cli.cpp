// Copyright 2026 The oberwolfach-construct Authors
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

// oberwolfach: command-line front end.
//
//   solve    -y 26 -L 3,4 [--seed 7] [--out cert.json] [--format json|dot]
//   verify   FILE                 decomposition or certificate JSON
//   tables                        bound for every pair 3 <= l1 < l2 <= 9
//   bounds   -L 3,4 [-y Y]
//   graceful -k K -L 3,4
//   double   -x X -L 3,4
//   halve    --in orbit.json [--witness w.json] [--redistribute]
//   extend   --in parts.json [--seed S] [--budget N]
//
// Exit status: 0 success, 1 verification failed or generic error,
// 2 infeasible / invalid request, 3 budget exceeded, 4 no graceful labeling,
// 5 extension failed, 6 unreadable input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oberwolfach/oberwolfach.hpp"

namespace ow = oberwolfach;
using ow::json_io::json;

namespace {

int exit_code(ow::ErrorCode c) {
  switch (c) {
    case ow::ErrorCode::Infeasible:
    case ow::ErrorCode::InvalidRequest:
    case ow::ErrorCode::InvalidLength: return 2;
    case ow::ErrorCode::BudgetExceeded: return 3;
    case ow::ErrorCode::GracefulNotFound: return 4;
    case ow::ErrorCode::ExtendFailed: return 5;
    case ow::ErrorCode::ParseError: return 6;
    default: return 1;
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ow::Error(ow::ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ow::Error(ow::ErrorCode::ParseError, path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw ow::Error(ow::ErrorCode::ParseError, "cannot write " + out);
  f << j.dump(2) << "\n";
}

std::string dot_label(ow::Vertex v) { return "\"" + v.to_string() + "\""; }

std::string to_dot(const ow::StructuredGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (ow::Vertex v : g.vertices()) os << "  " << dot_label(v) << ";\n";
  for (const ow::Edge& e : g.edges()) os << "  " << dot_label(e.first()) << " -- " << dot_label(e.second()) << ";\n";
  os << "}\n";
  return os.str();
}

void write_dot(const ow::Decomposition& d, const std::string& out) {
  const std::string stem = out.empty() || out == "-" ? "factor" : std::filesystem::path(out).replace_extension("").string();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const std::string path = stem + "." + std::to_string(i) + ".dot";
    std::ofstream f(path);
    if (!f) throw ow::Error(ow::ErrorCode::ParseError, "cannot write " + path);
    f << to_dot(d.factors[i], "F" + std::to_string(i));
  }
  std::cerr << "wrote " << d.factors.size() << " dot files with stem " << stem << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Oberwolfach 2-factorizations: construct and verify"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Build and verify a solution of OP(y, L)");
  ow::SolveRequest req;
  req.allow_below_bound = true;
  bool require_bound = false;
  std::string solve_out, solve_format = "json";
  solve->add_option("-y", req.y, "Length of the long cycle")->required();
  solve->add_option("-L", req.lengths, "Other cycle lengths")->delimiter(',')->required();
  solve->add_option("--seed", req.seed, "Random seed");
  solve->add_option("--graceful-budget", req.graceful_budget, "Node budget for the graceful search");
  solve->add_option("--extend-budget", req.extend_budget, "Augmentation budget for the extension");
  solve->add_flag("--require-bound", require_bound, "Refuse y below the guaranteed bound");
  solve->add_option("--out", solve_out, "Certificate path (default stdout)");
  solve->add_option("--format", solve_format, "json, or dot for one file per factor")
      ->check(CLI::IsMember({"json", "dot"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Check a decomposition or certificate");
  std::string verify_in;
  verify->add_option("file", verify_in, "JSON file")->required();

  // tables
  auto* tables = app.add_subcommand("tables", "Bound for every pair 3 <= l1 < l2 <= 9");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for L");
  std::vector<std::int64_t> bounds_l;
  std::optional<std::int64_t> bounds_y;
  bounds->add_option("-L", bounds_l, "Cycle lengths")->delimiter(',')->required();
  bounds->add_option("-y", bounds_y, "Also split this target length");

  // graceful
  auto* graceful = app.add_subcommand("graceful", "Search a graceful labeling of [k | L]");
  ow::ZillionShape shape;
  ow::GracefulSearchOptions gopt;
  graceful->add_option("-k", shape.k, "Path length")->required();
  graceful->add_option("-L", shape.cycles, "Cycle lengths")->delimiter(',')->required();
  graceful->add_option("--budget", gopt.budget, "Node budget");
  graceful->add_option("--seed", gopt.seed, "Random seed");

  // double
  auto* dbl = app.add_subcommand("double", "Pyramidal solution of OP(x, 2L) with matching witness");
  std::int64_t dbl_x = 0;
  std::vector<std::int64_t> dbl_l;
  ow::DoubleOptions dopt;
  std::string dbl_out;
  dbl->add_option("-x", dbl_x, "Length of the long cycle")->required();
  dbl->add_option("-L", dbl_l, "Cycle lengths")->delimiter(',')->required();
  dbl->add_option("--seed", dopt.seed, "Random seed");
  dbl->add_option("--budget", dopt.budget, "Graceful search budget");
  dbl->add_option("--out", dbl_out, "Output path (default stdout)");

  // halve
  auto* halve = app.add_subcommand("halve", "Split each factor into two (1,2)-graphs");
  std::string halve_in, halve_witness, halve_out;
  bool halve_redistribute = false;
  halve->add_option("--in", halve_in, "Orbit JSON (pyramidal or plain decomposition)")->required();
  halve->add_option("--witness", halve_witness, "Matching witness JSON");
  halve->add_flag("--redistribute", halve_redistribute, "Dissolve the witness factor along its matching");
  halve->add_option("--out", halve_out, "Output path (default stdout)");

  // extend
  auto* ext = app.add_subcommand("extend", "Extend a (1,2)-decomposition to a 2-factorization");
  std::string ext_in, ext_out;
  ow::ExtendOptions eopt;
  ext->add_option("--in", ext_in, "(1,2)-decomposition JSON")->required();
  ext->add_option("--seed", eopt.seed, "Random seed");
  ext->add_option("--budget", eopt.budget, "Augmentation budget");
  ext->add_option("--out", ext_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      req.allow_below_bound = !require_bound;
      const auto cert = ow::solve(req);
      if (solve_format == "dot") {
        write_dot(cert.solution, solve_out);
      } else {
        emit(ow::json_io::certificate_to_json(cert), solve_out);
      }
      std::cerr << "OP(" << req.y;
      for (auto l : req.lengths) std::cerr << "," << l;
      std::cerr << ") solved on " << cert.solution.order << " vertices, " << cert.solution.factors.size()
                << " factors, verified\n";
      return 0;
    }
    if (*verify) {
      const json j = read_json(verify_in);
      const bool is_cert = j.contains("solution");
      const ow::Decomposition d = ow::json_io::decomposition_from_json(is_cert ? j.at("solution") : j);
      const ow::Report r = ow::verify_decomposition(d);
      json out = ow::json_io::report_to_json(r);
      bool ok = r.valid();
      if (is_cert) {
        auto want = j.at("request").at("L").get<std::vector<std::int64_t>>();
        want.push_back(j.at("request").at("y").get<std::int64_t>());
        const bool shape_ok = ow::all_factors_have(r, ow::sorted_lengths(want));
        out["target_cycle_structure"] = ow::sorted_lengths(want);
        out["target_matches"] = shape_ok;
        ok = ok && shape_ok;
      }
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    if (*tables) {
      for (const auto& e : ow::pair_table()) {
        std::cout << "l1=" << e.l1 << " l2=" << e.l2 << " y0=" << e.y_bar << "\n";
      }
      return 0;
    }
    if (*bounds) {
      json out = ow::json_io::bounds_to_json(ow::structure_bounds(bounds_l));
      if (bounds_y) out["split"] = ow::json_io::split_to_json(ow::split_target(*bounds_y, bounds_l));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*graceful) {
      shape.validate();
      const auto res = ow::search_graceful(shape, gopt);
      std::cout << ow::json_io::search_result_to_json(shape, res).dump(2) << "\n";
      if (res.status == ow::SearchStatus::Found) return 0;
      return res.status == ow::SearchStatus::Exhausted ? 4 : 3;
    }
    if (*dbl) {
      const auto p = ow::solve_double(dbl_x, dbl_l, dopt);
      emit(ow::json_io::pyramidal_to_json(p), dbl_out);
      return 0;
    }
    if (*halve) {
      const json j = read_json(halve_in);
      ow::OneTwoDecomposition parts;
      std::optional<ow::MatchingWitness> witness;
      if (j.contains("labeling")) {
        const auto p = ow::json_io::pyramidal_from_json(j);
        witness = halve_witness.empty() ? p.witness
                                        : ow::json_io::witness_from_json(read_json(halve_witness), 2 * p.a);
        parts = ow::decompose_factorization(p.orbit, witness);
      } else {
        const ow::Decomposition d = ow::json_io::decomposition_from_json(j);
        const std::int64_t modulus = d.order - (d.order % 2 == 1 ? 1 : 2);
        if (!halve_witness.empty()) witness = ow::json_io::witness_from_json(read_json(halve_witness), modulus);
        parts = ow::decompose_factorization(d, witness);
      }
      if (halve_redistribute) {
        if (!witness) throw ow::Error(ow::ErrorCode::WitnessInvalid, "--redistribute needs a witness");
        parts = ow::redistribute(parts, *witness);
      }
      emit(ow::json_io::one_two_to_json(parts), halve_out);
      return 0;
    }
    if (*ext) {
      const auto parts = ow::json_io::one_two_from_json(read_json(ext_in));
      const auto out = ow::extend(parts, eopt);
      emit(ow::json_io::decomposition_to_json(out), ext_out);
      return 0;
    }
  } catch (const ow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 1;
}
