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

// JSON exchange format.
//
//   {"order": v, "regime": "odd"|"even", "one_factor": [[u,v],...]?,
//    "factors": [{"cycles": [[...],...], "paths": [[...],...]}, ...]}
//
// A vertex is an integer or "inf1"/"inf2". Cycles and paths are written in
// canonical form; factors keep their order. Richer objects (pyramidal
// solutions, (1,2)-decompositions, certificates) extend this with extra keys.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>  // vendored nlohmann/json

#include "oberwolfach/bounds.hpp"
#include "oberwolfach/decomposition.hpp"
#include "oberwolfach/error.hpp"
#include "oberwolfach/graceful.hpp"
#include "oberwolfach/graph.hpp"
#include "oberwolfach/halving.hpp"
#include "oberwolfach/pipeline.hpp"
#include "oberwolfach/pyramidal.hpp"

namespace oberwolfach::json_io {

using nlohmann::json;

inline json to_json(Vertex v) {
  if (v.is_inf1()) return "inf1";
  if (v.is_inf2()) return "inf2";
  return v.value();
}

inline Vertex vertex_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf1" || s == "inf") return Vertex::inf1();
    if (s == "inf2") return Vertex::inf2();
    throw Error(ErrorCode::ParseError, "unknown vertex name '" + s + "'");
  }
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw Error(ErrorCode::ParseError, "vertex labels must be non-negative");
    return fin(v);
  }
  throw Error(ErrorCode::ParseError, "vertex must be an integer or \"inf1\"/\"inf2\"");
}

inline json vertices_to_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(to_json(v));
  return out;
}

inline std::vector<Vertex> vertices_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a vertex list");
  std::vector<Vertex> out;
  for (const auto& v : j) out.push_back(vertex_from_json(v));
  return out;
}

inline json edges_to_json(const StructuredGraph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({to_json(e.first()), to_json(e.second())});
  return out;
}

inline StructuredGraph edges_from_json(const json& j, std::int64_t modulus = 0) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an edge list");
  StructuredGraph g(modulus);
  for (const auto& e : j) {
    const auto vs = vertices_from_json(e);
    if (vs.size() != 2) throw Error(ErrorCode::ParseError, "an edge has exactly two ends");
    g.add_edge(vs[0], vs[1]);
  }
  return g;
}

/// {"cycles": [...], "paths": [...]}; a path of one vertex is an isolated
/// vertex and is written only when keep_isolated is set.
inline json graph_to_json(const StructuredGraph& g, bool keep_isolated = false) {
  json cycles = json::array();
  json paths = json::array();
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::Cycle) {
      cycles.push_back(vertices_to_json(c.vertices));
    } else if (c.kind == ComponentKind::Path || keep_isolated) {
      paths.push_back(vertices_to_json(c.vertices));
    }
  }
  return {{"cycles", cycles}, {"paths", paths}};
}

inline StructuredGraph graph_from_json(const json& j, std::int64_t modulus = 0) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph must be an object");
  StructuredGraph g(modulus);
  if (j.contains("cycles")) {
    for (const auto& c : j.at("cycles")) g.add_cycle(vertices_from_json(c));
  }
  if (j.contains("paths")) {
    for (const auto& p : j.at("paths")) g.add_path(vertices_from_json(p));
  }
  return g;
}

inline json decomposition_to_json(const Decomposition& d) {
  json out;
  out["order"] = d.order;
  out["regime"] = to_string(d.regime);
  if (d.one_factor) out["one_factor"] = edges_to_json(*d.one_factor);
  out["factors"] = json::array();
  for (const auto& f : d.factors) out["factors"].push_back(graph_to_json(f));
  return out;
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline Decomposition decomposition_from_json(const json& j) {
  return guarded([&] {
    Decomposition d;
    d.order = j.at("order").get<std::int64_t>();
    if (d.order < 1) throw Error(ErrorCode::ParseError, "order must be positive");
    d.regime = regime_for_order(d.order);
    if (j.contains("regime") && j.at("regime").get<std::string>() != to_string(d.regime)) {
      throw Error(ErrorCode::ParseError, "regime does not match the parity of the order");
    }
    if (j.contains("one_factor") && !j.at("one_factor").is_null()) d.one_factor = edges_from_json(j.at("one_factor"));
    for (const auto& f : j.at("factors")) d.factors.push_back(graph_from_json(f));
    return d;
  });
}

inline json cycle_structure_to_json(const CycleStructure& cs) {
  return {{"cycles", cs.cycles}, {"paths", cs.paths}};
}

inline json report_to_json(const Report& r) {
  json out;
  out["valid"] = r.valid();
  out["order"] = r.order;
  out["vertex_count"] = r.vertex_count;
  out["vertex_count_ok"] = r.vertex_count_ok;
  out["disjoint"] = r.disjoint;
  json rep = json::array();
  for (const Edge& e : r.repeated_edges) rep.push_back({to_json(e.first()), to_json(e.second())});
  out["repeated_edges"] = rep;
  json left = json::array();
  for (const Edge& e : r.leftover) left.push_back({to_json(e.first()), to_json(e.second())});
  out["leftover"] = left;
  out["leftover_empty"] = r.leftover_empty;
  out["leftover_perfect_matching"] = r.leftover_perfect_matching;
  if (r.one_factor_matches) out["one_factor_matches"] = *r.one_factor_matches;
  out["valid_odd"] = r.valid_odd;
  out["valid_even"] = r.valid_even;
  out["all_factors_two_regular"] = r.all_factors_two_regular;
  out["factors"] = json::array();
  for (const auto& f : r.factors) {
    json fj = cycle_structure_to_json(f.cs);
    fj["degree_ok"] = f.degree_ok;
    fj["spanning_two_regular"] = f.spanning_two_regular;
    out["factors"].push_back(fj);
  }
  out["problems"] = r.problems;
  return out;
}

inline json bounds_to_json(const StructureBounds& sb) {
  return {{"L", sb.lengths},
          {"b", sb.b},
          {"b0", sb.b0.str()},
          {"b1", sb.b1.str()},
          {"B", sb.graceful_threshold.str()},
          {"y0", sb.y0.str()}};
}

inline json split_to_json(const TargetSplit& s) {
  return {{"y", s.y}, {"epsilon", s.epsilon}, {"x", s.x}, {"delta", s.delta}};
}

inline json labeling_to_json(const GracefulLabeling& t) {
  json cycles = json::array();
  for (const auto& c : t.cycle_list()) {
    json cj = json::array();
    for (auto v : c) cj.push_back(v);
    cycles.push_back(cj);
  }
  return {{"k", t.shape.k}, {"L", t.shape.cycles}, {"a", t.shape.top()}, {"path", t.path()}, {"cycles", cycles}};
}

inline json search_result_to_json(const ZillionShape& shape, const GracefulSearchResult& r) {
  json out;
  out["status"] = to_string(r.status);
  out["nodes"] = r.nodes;
  if (r.labeling) {
    const json lj = labeling_to_json(*r.labeling);
    out.update(lj);
  } else {
    out["k"] = shape.k;
    out["L"] = shape.cycles;
    out["a"] = shape.top();
  }
  return out;
}

inline GracefulLabeling labeling_from_json(const json& j) {
  return guarded([&] {
    const auto path = j.at("path").get<std::vector<std::int64_t>>();
    const auto cycles = j.at("cycles").get<std::vector<std::vector<std::int64_t>>>();
    if (path.empty()) throw Error(ErrorCode::ParseError, "path must have at least one vertex");
    return make_labeling(path, cycles);
  });
}

inline json witness_to_json(const MatchingWitness& w) {
  return {{"matching", edges_to_json(w.matching)},
          {"g_index", w.g_index},
          {"gp_index", w.gp_index},
          {"halving", graph_to_json(w.halving)}};
}

inline MatchingWitness witness_from_json(const json& j, std::int64_t modulus = 0) {
  return guarded([&] {
    MatchingWitness w;
    w.matching = edges_from_json(j.at("matching"), modulus);
    w.g_index = j.at("g_index").get<std::size_t>();
    w.gp_index = j.at("gp_index").get<std::size_t>();
    w.halving = graph_from_json(j.at("halving"), modulus);
    return w;
  });
}

inline json pyramidal_to_json(const PyramidalSolution& p) {
  json out = decomposition_to_json(p.orbit);
  out["epsilon"] = p.epsilon;
  out["a"] = p.a;
  out["x"] = p.x;
  out["L"] = p.lengths;
  out["labeling"] = labeling_to_json(p.labeling);
  out["starter"] = graph_to_json(p.starter);
  out["witness"] = witness_to_json(p.witness);
  out["split_edge"] = {to_json(p.split_edge.first()), to_json(p.split_edge.second())};
  return out;
}

/// Rebuilds a pyramidal solution by re-doubling the embedded labeling, then
/// checks that the stored orbit and witness agree with the rebuilt ones.
inline PyramidalSolution pyramidal_from_json(const json& j) {
  return guarded([&] {
    const GracefulLabeling t = labeling_from_json(j.at("labeling"));
    const int eps = j.at("epsilon").get<int>();
    PyramidalSolution p = double_labeling(t, eps);
    const Decomposition stored = decomposition_from_json(j);
    if (stored.factors.size() != p.orbit.factors.size()) {
      throw Error(ErrorCode::ParseError, "stored orbit does not match its labeling");
    }
    for (std::size_t i = 0; i < stored.factors.size(); ++i) {
      if (!stored.factors[i].same_edges(with_modulus(p.orbit.factors[i], 0))) {
        throw Error(ErrorCode::ParseError, "stored orbit does not match its labeling");
      }
    }
    if (j.contains("witness")) {
      MatchingWitness w = witness_from_json(j.at("witness"), 2 * p.a);
      if (!check_matching_property(p.orbit, w, p.lengths)) {
        throw Error(ErrorCode::WitnessInvalid, "stored witness fails the matching property");
      }
      p.witness = w;
    }
    return p;
  });
}

inline json one_two_to_json(const OneTwoDecomposition& d) {
  json out;
  out["order"] = d.order;
  out["regime"] = to_string(regime_for_order(d.order));
  out["epsilon"] = d.epsilon;
  out["lengths"] = d.lengths;
  if (d.one_factor) out["one_factor"] = edges_to_json(*d.one_factor);
  out["factors"] = json::array();
  for (const auto& p : d.parts) out["factors"].push_back(graph_to_json(p));
  json prov = json::array();
  for (const auto& p : d.provenance) prov.push_back({{"factor", p.factor}, {"role", to_string(p.role)}});
  out["provenance"] = prov;
  return out;
}

inline OneTwoDecomposition one_two_from_json(const json& j) {
  return guarded([&] {
    OneTwoDecomposition d;
    d.order = j.at("order").get<std::int64_t>();
    d.epsilon = d.order % 2 == 1 ? 1 : 2;
    if (j.contains("epsilon") && j.at("epsilon").get<int>() != d.epsilon) {
      throw Error(ErrorCode::ParseError, "epsilon does not match the parity of the order");
    }
    if (j.contains("lengths")) d.lengths = sorted_lengths(j.at("lengths").get<std::vector<std::int64_t>>());
    if (j.contains("one_factor") && !j.at("one_factor").is_null()) d.one_factor = edges_from_json(j.at("one_factor"));
    for (const auto& f : j.at("factors")) d.parts.push_back(graph_from_json(f));
    return d;
  });
}

inline json certificate_to_json(const SolveCertificate& c) {
  json out;
  out["request"] = {{"y", c.request.y},
                    {"L", c.request.lengths},
                    {"seed", c.request.seed},
                    {"allow_below_bound", c.request.allow_below_bound}};
  out["bounds"] = bounds_to_json(c.bounds);
  out["split"] = split_to_json(c.split);
  out["labeling"] = labeling_to_json(c.labeling);
  out["pyramidal"] = pyramidal_to_json(c.pyramidal);
  out["parts"] = one_two_to_json(c.parts);
  out["solution"] = decomposition_to_json(c.solution);
  out["report"] = report_to_json(c.report);
  return out;
}

}  // namespace oberwolfach::json_io
