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

// Doubling construction: a graceful labeling T of [k-1 | L] on {0, ..., a-1}
// (a = k + sum L) gives the starter
//
//     G = T  u  (T + a)  u  {inf1 p0, inf1 p0+a, p1 p1+a}      over Z_2a u {inf1}
//
// whose a distinct translates factor K_{2a+1} into copies of
// [2k+1, 2*l1, ..., 2*lu]. Inserting inf2 along {p1, p1+a} gives the even
// variant, a factorization of K_{2a+2} minus I with
// I = {inf1 inf2} u {p1+i, p1+a+i}. Both come with a matching witness.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oberwolfach/decomposition.hpp"
#include "oberwolfach/graceful.hpp"
#include "oberwolfach/graph.hpp"

namespace oberwolfach {

/// Data for the matching property: a matching M of orbit member G, and a
/// halving h of another member G' with cs(G - M) = L = cs(h u M) and
/// h u M a (1,2)-graph.
struct MatchingWitness {
  StructuredGraph matching;
  std::size_t g_index = 0;
  std::size_t gp_index = 0;
  StructuredGraph halving;
};

struct PyramidalSolution {
  int epsilon = 1;
  std::int64_t a = 0;
  std::int64_t x = 0;                 // length of the long cycle, 2k + epsilon
  std::vector<std::int64_t> lengths;  // L, sorted
  GracefulLabeling labeling;          // T, the labeling that was doubled
  StructuredGraph base_starter;       // G, before any inf2 insertion
  StructuredGraph starter;            // G (eps 1) or G* (eps 2)
  Decomposition orbit;                // starter + 1, ..., starter + a
  std::optional<StructuredGraph> one_factor;
  MatchingWitness witness;
  /// The edge of the long cycle that lies in the halving of G; used to
  /// resolve which cycle gets split when x coincides with some l_i.
  Edge split_edge{Vertex::inf1(), fin(0)};
};

/// F + a = F and the differences of F cover Z_2a \ {0}.
inline bool check_starter(const StructuredGraph& f, std::int64_t a) {
  if (a < 1 || f.modulus() != 2 * a) return false;
  for (Vertex v : f.vertices()) {
    if (v.is_inf2()) return false;
  }
  if (!translate(f, a).same_edges(f)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(2 * a), false);
  for (auto d : difference_list(f)) seen[static_cast<std::size_t>(d)] = true;
  for (std::int64_t d = 1; d < 2 * a; ++d) {
    if (!seen[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

inline std::vector<std::int64_t> doubled(const std::vector<std::int64_t>& lengths) {
  std::vector<std::int64_t> out;
  for (auto l : lengths) {
    out.push_back(l);
    out.push_back(l);
  }
  return sorted_lengths(out);
}

inline bool check_matching_property(const Decomposition& orbit, const MatchingWitness& w,
                                    const std::vector<std::int64_t>& lengths) {
  const auto want = sorted_lengths(lengths);
  if (w.g_index >= orbit.factors.size() || w.gp_index >= orbit.factors.size()) return false;
  if (w.g_index == w.gp_index) return false;
  const StructuredGraph& g = orbit.factors[w.g_index];
  const StructuredGraph& gp = orbit.factors[w.gp_index];
  try {
    if (w.matching.edge_count() == 0 || classify(w.matching) != GraphClass::Matching) return false;
    if (!is_edge_subgraph(w.matching, g)) return false;

    if (!is_edge_subgraph(w.halving, gp)) return false;
    if (cycle_structure(w.halving).cycles != want) return false;
    if (cycle_structure(graph_minus(gp, w.halving)).cycles != want) return false;

    if (cycle_structure(graph_minus(g, w.matching)).cycles != want) return false;

    for (const Edge& e : w.matching.edges()) {
      if (w.halving.has_edge(e)) return false;
    }
    StructuredGraph joined = graph_union(w.halving, w.matching);
    if (!is_one_two_graph(joined)) return false;
    return cycle_structure(joined).cycles == want;
  } catch (const Error&) {
    return false;
  }
}

/// Builds the pyramidal solution from T, a graceful labeling of [k-1 | L].
/// Throws ConstructionFailed if any re-check fails.
inline PyramidalSolution double_labeling(const GracefulLabeling& t, int epsilon) {
  if (epsilon != 1 && epsilon != 2) throw Error(ErrorCode::InvalidRequest, "epsilon must be 1 or 2");
  if (!verify_graceful(t)) throw Error(ErrorCode::ConstructionFailed, "input is not a graceful labeling");
  if (t.shape.cycles.empty()) throw Error(ErrorCode::InvalidRequest, "need at least one cycle length");

  PyramidalSolution p;
  p.epsilon = epsilon;
  p.a = t.shape.top() + 1;
  const std::int64_t a = p.a;
  const std::int64_t k = t.shape.k + 1;
  p.x = 2 * k + epsilon;
  p.lengths = sorted_lengths(t.shape.cycles);
  p.labeling = t;
  const std::int64_t p0 = t.path_endpoints.first;
  const std::int64_t p1 = t.path_endpoints.second;
  const Vertex inf1 = Vertex::inf1();
  const Vertex inf2 = Vertex::inf2();

  StructuredGraph g(2 * a);
  for (const Edge& e : t.graph.edges()) {
    g.add_edge(e);
    g.add_edge(fin(e.first().value() + a), fin(e.second().value() + a));
  }
  g.add_edge(inf1, fin(p0));
  g.add_edge(inf1, fin(p0 + a));
  g.add_edge(fin(p1), fin(p1 + a));
  p.base_starter = g;

  if (epsilon == 1) {
    p.starter = g;
  } else {
    StructuredGraph star(2 * a);
    const Edge e0(fin(p1), g.canonical(fin(p1 + a)));
    for (const Edge& e : g.edges()) {
      if (e != e0) star.add_edge(e);
    }
    star.add_edge(fin(p1), inf2);
    star.add_edge(inf2, fin(p1 + a));
    p.starter = star;

    StructuredGraph one(2 * a);
    one.add_edge(inf1, inf2);
    for (std::int64_t i = 0; i < a; ++i) one.add_edge(fin(p1 + i), fin(p1 + a + i));
    p.one_factor = one;
  }

  p.orbit.order = 2 * a + epsilon;
  p.orbit.regime = regime_for_order(p.orbit.order);
  for (std::int64_t i = 1; i <= a; ++i) p.orbit.factors.push_back(translate(p.starter, i));
  p.orbit.one_factor = p.one_factor;

  // Witness: H = Q u R is a halving of G, M = Q u N with N one edge per
  // cycle of R avoiding label 0, and H' = H + (a+1) halves G' = G + 1.
  const Vertex q_end = (p0 >= 1 && p0 <= a - 1) ? fin(p0) : fin(p0 + a);
  p.split_edge = Edge(inf1, q_end);
  StructuredGraph h(2 * a);
  StructuredGraph m(2 * a);
  h.add_edge(p.split_edge);
  m.add_edge(p.split_edge);
  for (const auto& c : components(t.graph)) {
    if (c.kind != ComponentKind::Cycle) continue;
    h.add_cycle(c.vertices);
    std::optional<Edge> pick;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      Edge e(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
      if (e.touches(fin(0))) continue;
      if (!pick || e < *pick) pick = e;
    }
    m.add_edge(*pick);
  }
  p.witness.matching = m;
  p.witness.g_index = static_cast<std::size_t>(a - 1);
  p.witness.gp_index = 0;
  p.witness.halving = translate(h, a + 1);

  if (!check_starter(p.base_starter, a)) {
    throw Error(ErrorCode::ConstructionFailed, "starter fails the difference condition");
  }
  const Report rep = verify_decomposition(p.orbit);
  if (!rep.valid()) throw Error(ErrorCode::ConstructionFailed, "orbit is not a 2-factorization");
  std::vector<std::int64_t> want = doubled(p.lengths);
  want.push_back(p.x);
  if (!all_factors_have(rep, want)) {
    throw Error(ErrorCode::ConstructionFailed, "orbit factor has the wrong cycle structure");
  }
  if (!check_matching_property(p.orbit, p.witness, p.lengths)) {
    throw Error(ErrorCode::ConstructionFailed, "matching witness fails");
  }
  return p;
}

}  // namespace oberwolfach
