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

// Decompositions of K_v (v odd) or K_v minus a 1-factor (v even), and the
// independent verifier that every construction in this library must pass.
// The verifier looks at edge sets only; it never trusts metadata recorded by
// whichever stage produced the decomposition.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oberwolfach/graph.hpp"

namespace oberwolfach {

enum class Regime { Odd, Even };

inline std::string to_string(Regime r) { return r == Regime::Odd ? "odd" : "even"; }
inline Regime regime_for_order(std::int64_t v) { return v % 2 == 1 ? Regime::Odd : Regime::Even; }

struct Decomposition {
  std::int64_t order = 0;
  Regime regime = Regime::Odd;
  std::vector<StructuredGraph> factors;
  /// The removed perfect matching for even orders, when known.
  std::optional<StructuredGraph> one_factor;
};

struct FactorReport {
  CycleStructure cs;
  bool degree_ok = true;           // max degree <= 2
  bool spanning_two_regular = false;
};

struct Report {
  std::int64_t order = 0;
  std::size_t vertex_count = 0;
  bool vertex_count_ok = false;
  bool disjoint = true;
  std::vector<Edge> repeated_edges;  // edges found in more than one factor
  std::vector<Edge> leftover;        // edges of K_v covered by no factor
  bool leftover_empty = false;
  bool leftover_perfect_matching = false;
  /// Only set when the decomposition declares a one_factor.
  std::optional<bool> one_factor_matches;
  std::vector<FactorReport> factors;
  bool all_factors_two_regular = false;
  bool valid_odd = false;
  bool valid_even = false;
  std::vector<std::string> problems;

  /// Edge partition of K*_v, plus spanning 2-regular factors when requested.
  bool valid() const { return valid_odd || valid_even; }
};

/// Vertices of the ambient complete graph: everything mentioned by a factor
/// or by the declared one-factor.
inline std::set<Vertex> vertex_universe(const Decomposition& d) {
  std::set<Vertex> out;
  for (const auto& f : d.factors) out.insert(f.vertices().begin(), f.vertices().end());
  if (d.one_factor) out.insert(d.one_factor->vertices().begin(), d.one_factor->vertices().end());
  return out;
}

inline Report verify_decomposition(const Decomposition& d, bool expect_two_factorization = true) {
  Report r;
  r.order = d.order;
  const std::set<Vertex> universe = vertex_universe(d);
  r.vertex_count = universe.size();
  r.vertex_count_ok = static_cast<std::int64_t>(universe.size()) == d.order;
  if (!r.vertex_count_ok) {
    r.problems.push_back("factors mention " + std::to_string(universe.size()) +
                         " vertices, order is " + std::to_string(d.order));
  }

  std::set<Edge> covered;
  for (const auto& f : d.factors) {
    for (const Edge& e : f.edges()) {
      if (!covered.insert(e).second) {
        r.disjoint = false;
        r.repeated_edges.push_back(e);
      }
    }
  }
  if (!r.disjoint) r.problems.push_back("factors share edges");

  const std::vector<Vertex> verts(universe.begin(), universe.end());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Edge e(verts[i], verts[j]);
      if (!covered.count(e)) r.leftover.push_back(e);
    }
  }
  r.leftover_empty = r.leftover.empty();
  {
    std::map<Vertex, int> deg;
    for (const Edge& e : r.leftover) {
      ++deg[e.first()];
      ++deg[e.second()];
    }
    bool pm = deg.size() == universe.size();
    for (const auto& [v, k] : deg) pm = pm && k == 1;
    r.leftover_perfect_matching = pm && !universe.empty();
  }
  if (d.one_factor) {
    std::set<Edge> left(r.leftover.begin(), r.leftover.end());
    r.one_factor_matches = left == d.one_factor->edges();
    if (!*r.one_factor_matches) r.problems.push_back("leftover differs from declared one_factor");
  }

  r.all_factors_two_regular = true;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& f = d.factors[i];
    FactorReport fr;
    auto deg = f.degrees();
    for (const auto& [v, k] : deg) fr.degree_ok = fr.degree_ok && k <= 2;
    if (fr.degree_ok) fr.cs = cycle_structure(f);
    bool spanning = f.vertices().size() == universe.size();
    bool two_reg = fr.degree_ok && spanning;
    for (const auto& [v, k] : deg) two_reg = two_reg && k == 2;
    fr.spanning_two_regular = two_reg;
    if (!two_reg) {
      r.all_factors_two_regular = false;
      if (expect_two_factorization) {
        r.problems.push_back("factor " + std::to_string(i) + " is not a spanning 2-regular graph");
      }
    }
    r.factors.push_back(std::move(fr));
  }

  const bool factor_ok = !expect_two_factorization || r.all_factors_two_regular;
  const bool base = r.vertex_count_ok && r.disjoint && factor_ok;
  r.valid_odd = base && d.order % 2 == 1 && r.leftover_empty && d.regime == Regime::Odd;
  r.valid_even = base && d.order % 2 == 0 && r.leftover_perfect_matching &&
                 d.regime == Regime::Even && r.one_factor_matches.value_or(true);
  if (d.order % 2 == 1 && !r.leftover_empty) {
    r.problems.push_back(std::to_string(r.leftover.size()) + " edges of K_v are uncovered");
  }
  if (d.order % 2 == 0 && !r.leftover_perfect_matching) {
    r.problems.push_back("uncovered edges do not form a perfect matching");
  }
  if (regime_for_order(d.order) != d.regime) r.problems.push_back("regime does not match order parity");
  return r;
}

/// Every factor has exactly the given cycle structure (no paths).
inline bool all_factors_have(const Report& r, const std::vector<std::int64_t>& cycles) {
  auto want = sorted_lengths(cycles);
  for (const auto& f : r.factors) {
    if (f.cs.cycles != want || !f.cs.paths.empty()) return false;
  }
  return true;
}

}  // namespace oberwolfach
