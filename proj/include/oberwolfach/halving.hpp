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

// Halvings and (1,2)-decompositions.
//
// A 2-regular G with cycle structure {x, 2*l1, ..., 2*lu} splits into
// h(G) = one cycle of each l_i plus one edge of the x-cycle, and G - h(G);
// both have cycle structure {l1, ..., lu}. Halving every factor of a
// 2-factorization of K*_m yields a (1,2)-decomposition into 2a parts. With a
// matching witness the two halves of one factor G can be traded for G - M,
// moving M onto the halving of another factor, which leaves 2a - 1 parts.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oberwolfach/decomposition.hpp"
#include "oberwolfach/graph.hpp"
#include "oberwolfach/pyramidal.hpp"

namespace oberwolfach {

enum class PartRole { Halving, Complement, FactorMinusMatching, HalvingPlusMatching };

inline std::string to_string(PartRole r) {
  switch (r) {
    case PartRole::Halving: return "halving";
    case PartRole::Complement: return "complement";
    case PartRole::FactorMinusMatching: return "factor_minus_matching";
    case PartRole::HalvingPlusMatching: return "halving_plus_matching";
  }
  return "halving";
}

struct PartProvenance {
  std::size_t factor = 0;  // index of the 2-factor this part came from
  PartRole role = PartRole::Halving;
};

struct OneTwoDecomposition {
  std::int64_t order = 0;
  int epsilon = 1;
  std::vector<std::int64_t> lengths;  // common cycle structure of the parts
  std::vector<StructuredGraph> parts;
  std::vector<PartProvenance> provenance;
  std::optional<StructuredGraph> one_factor;  // I, when the order is even
};

struct Halving {
  StructuredGraph h;
  StructuredGraph rest;
};

/// Splits G with cs {x, 2*l1, ..., 2*lu}. The x-cycle is the cycle through
/// split_edge when given (that edge then goes to h), otherwise the x-length
/// cycle with the smallest minimum vertex, cut at its smallest edge. Among
/// the other cycles of each length, those with the smaller vertex sequences
/// go to h.
inline Halving halve(const StructuredGraph& g, std::optional<Edge> split_edge = std::nullopt) {
  const auto comps = components(g);
  std::map<std::int64_t, int> mult;
  for (const auto& c : comps) {
    if (c.kind == ComponentKind::Path) throw Error(ErrorCode::ShapeMismatch, "graph is not 2-regular");
    if (c.kind == ComponentKind::Cycle) ++mult[c.length()];
  }
  std::vector<std::int64_t> odd;
  for (const auto& [len, count] : mult) {
    if (count % 2 == 1) odd.push_back(len);
  }
  if (odd.size() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "cycle structure is not of the form {x, 2*L}");
  }
  const std::int64_t x = odd.front();

  auto edges_of = [](const Component& c) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      out.emplace_back(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    }
    return out;
  };

  std::optional<std::size_t> x_index;
  if (split_edge) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].kind != ComponentKind::Cycle) continue;
      auto es = edges_of(comps[i]);
      if (std::find(es.begin(), es.end(), *split_edge) != es.end()) x_index = i;
    }
    if (!x_index || comps[*x_index].length() != x) {
      throw Error(ErrorCode::ShapeMismatch, "split edge does not lie on a cycle of length x");
    }
  } else {
    for (std::size_t i = 0; i < comps.size() && !x_index; ++i) {
      if (comps[i].kind == ComponentKind::Cycle && comps[i].length() == x) x_index = i;
    }
  }

  Halving out{StructuredGraph(g.modulus()), StructuredGraph(g.modulus())};
  const auto x_edges = edges_of(comps[*x_index]);
  out.h.add_edge(split_edge ? *split_edge : *std::min_element(x_edges.begin(), x_edges.end()));

  std::map<std::int64_t, int> taken;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == *x_index || comps[i].kind != ComponentKind::Cycle) continue;
    const std::int64_t len = comps[i].length();
    const int owed = (mult[len] - (len == x ? 1 : 0)) / 2;
    if (taken[len] < owed) {
      ++taken[len];
      out.h.add_cycle(comps[i].vertices);
    }
  }
  out.rest = graph_minus(g, out.h);
  if (cycle_structure(out.h).cycles != cycle_structure(out.rest).cycles) {
    throw Error(ErrorCode::ShapeMismatch, "halving is unbalanced");
  }
  return out;
}

/// h is a halving of g: h is a subgraph and both h and g - h have the
/// cycle structure `lengths`.
inline bool is_halving(const StructuredGraph& h, const StructuredGraph& g,
                       const std::vector<std::int64_t>& lengths) {
  try {
    const auto want = sorted_lengths(lengths);
    return is_edge_subgraph(h, g) && cycle_structure(h).cycles == want &&
           cycle_structure(graph_minus(g, h)).cycles == want;
  } catch (const Error&) {
    return false;
  }
}

/// The odd-multiplicity length of a {x, 2*L} structure together with L.
inline std::pair<std::int64_t, std::vector<std::int64_t>> split_doubled_structure(
    const std::vector<std::int64_t>& cycles) {
  std::map<std::int64_t, int> mult;
  for (auto l : cycles) ++mult[l];
  std::optional<std::int64_t> x;
  std::vector<std::int64_t> half;
  for (auto& [len, count] : mult) {
    if (count % 2 == 1) {
      if (x) throw Error(ErrorCode::ShapeMismatch, "more than one odd-multiplicity length");
      x = len;
      --count;
    }
    for (int i = 0; i < count / 2; ++i) half.push_back(len);
  }
  if (!x) throw Error(ErrorCode::ShapeMismatch, "no odd-multiplicity length");
  return {*x, half};
}

/// Halves every factor of a 2-factorization of K*_m into parts
/// F_{2j} = h(G_j), F_{2j+1} = G_j - h(G_j). With a witness, the halving of
/// G' is the witness halving and the other factors use its translates
/// (h(G_j) = h(G') + (j - gp)) whenever those fit; anything else is halved
/// generically.
inline OneTwoDecomposition decompose_factorization(const Decomposition& d,
                                                   const std::optional<MatchingWitness>& witness = {}) {
  if (d.factors.empty()) throw Error(ErrorCode::ShapeMismatch, "no factors");
  OneTwoDecomposition out;
  out.order = d.order;
  out.epsilon = d.order % 2 == 1 ? 1 : 2;
  out.one_factor = d.one_factor;
  out.lengths = split_doubled_structure(cycle_structure(d.factors.front()).cycles).second;

  for (std::size_t j = 0; j < d.factors.size(); ++j) {
    const StructuredGraph& g = d.factors[j];
    std::optional<StructuredGraph> h;
    if (witness) {
      if (j == witness->gp_index) {
        h = witness->halving;
      } else if (witness->halving.modulus() > 0) {
        auto cand = translate(witness->halving, static_cast<std::int64_t>(j) -
                                                    static_cast<std::int64_t>(witness->gp_index));
        if (is_halving(cand, g, out.lengths)) h = std::move(cand);
      }
      if (h && !is_halving(*h, g, out.lengths)) {
        throw Error(ErrorCode::ShapeMismatch, "witness halving does not halve its factor");
      }
    }
    if (!h) {
      Halving split = halve(g);
      if (cycle_structure(split.h).cycles != out.lengths) {
        throw Error(ErrorCode::ShapeMismatch, "factor " + std::to_string(j) + " has a different structure");
      }
      h = split.h;
    }
    out.parts.push_back(*h);
    out.provenance.push_back({j, PartRole::Halving});
    out.parts.push_back(graph_minus(g, *h));
    out.provenance.push_back({j, PartRole::Complement});
  }
  return out;
}

inline OneTwoDecomposition decompose_solution(const PyramidalSolution& p) {
  return decompose_factorization(p.orbit, p.witness);
}

/// The parts partition E(K*_m) and each part has max degree 2 with cycle
/// structure `lengths`.
inline bool verify_one_two(const OneTwoDecomposition& d, bool require_one_two_graphs = true) {
  Decomposition as_d;
  as_d.order = d.order;
  as_d.regime = regime_for_order(d.order);
  as_d.factors = d.parts;
  as_d.one_factor = d.one_factor;
  const Report r = verify_decomposition(as_d, false);
  if (!r.valid()) return false;
  const auto want = sorted_lengths(d.lengths);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (!r.factors[i].degree_ok || r.factors[i].cs.cycles != want) return false;
    if (require_one_two_graphs && !is_one_two_graph(d.parts[i])) return false;
  }
  return true;
}

/// b >= 2a - min_i (|E(F_i)| - eps) / 2 with 2a = m - eps, in integers after
/// doubling both sides.
inline bool check_extension_condition(const OneTwoDecomposition& d) {
  if (d.parts.empty()) return false;
  const std::int64_t b = static_cast<std::int64_t>(d.parts.size());
  const std::int64_t two_a = d.order - d.epsilon;
  std::int64_t min_edges = static_cast<std::int64_t>(d.parts.front().edge_count());
  for (const auto& p : d.parts) min_edges = std::min(min_edges, static_cast<std::int64_t>(p.edge_count()));
  return 2 * b + min_edges - d.epsilon >= 2 * two_a;
}

/// Replaces the two halves of the witness's G by G - M and the halving of G'
/// by h(G') u M. Throws WitnessInvalid if the witness does not fit D.
inline OneTwoDecomposition redistribute(const OneTwoDecomposition& d, const MatchingWitness& w) {
  std::optional<std::size_t> g_first, g_second, gp_half, gp_rest;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& pv = d.provenance.at(i);
    if (pv.factor == w.g_index) {
      if (pv.role == PartRole::Halving) g_first = i;
      if (pv.role == PartRole::Complement) g_second = i;
    }
    if (pv.factor == w.gp_index) {
      if (pv.role == PartRole::Halving) gp_half = i;
      if (pv.role == PartRole::Complement) gp_rest = i;
    }
  }
  if (!g_first || !g_second || !gp_half || !gp_rest) {
    throw Error(ErrorCode::WitnessInvalid, "decomposition has no plain halves for the witness factors");
  }
  if (!d.parts[*gp_half].same_edges(w.halving)) {
    throw Error(ErrorCode::WitnessInvalid, "witness halving is not the part used for G'");
  }
  const StructuredGraph g = graph_union(d.parts[*g_first], d.parts[*g_second]);
  const StructuredGraph gp = graph_union(d.parts[*gp_half], d.parts[*gp_rest]);
  Decomposition pair;
  pair.order = d.order;
  pair.factors = {g, gp};
  MatchingWitness local = w;
  local.g_index = 0;
  local.gp_index = 1;
  if (!check_matching_property(pair, local, d.lengths)) {
    throw Error(ErrorCode::WitnessInvalid, "matching property fails");
  }

  OneTwoDecomposition out;
  out.order = d.order;
  out.epsilon = d.epsilon;
  out.lengths = d.lengths;
  out.one_factor = d.one_factor;
  const std::size_t first = std::min(*g_first, *g_second);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (i == *g_first || i == *g_second) {
      if (i != first) continue;
      out.parts.push_back(graph_minus(g, w.matching));
      out.provenance.push_back({w.g_index, PartRole::FactorMinusMatching});
    } else if (i == *gp_half) {
      out.parts.push_back(graph_union(d.parts[i], w.matching));
      out.provenance.push_back({w.gp_index, PartRole::HalvingPlusMatching});
    } else {
      out.parts.push_back(d.parts[i]);
      out.provenance.push_back(d.provenance[i]);
    }
  }
  if (!verify_one_two(out)) {
    throw Error(ErrorCode::WitnessInvalid, "redistributed parts no longer partition K*_m");
  }
  return out;
}

}  // namespace oberwolfach
