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

// Graph model over Z_n plus two fixed points inf1, inf2.
//
// A StructuredGraph is the carrier for every object in the construction:
// 2-factors, halvings, matchings, linear forests and graceful labelings.
// Finite vertices are residues of the graph's modulus (modulus 0 means plain
// non-negative integers, used for graceful labelings). Infinity vertices are
// never shifted by translation and never contribute differences.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oberwolfach/error.hpp"

namespace oberwolfach {

class Vertex {
 public:
  constexpr Vertex() = default;

  static constexpr Vertex finite(std::int64_t value) { return Vertex(value); }
  static constexpr Vertex inf1() { return Vertex(kInf1); }
  static constexpr Vertex inf2() { return Vertex(kInf2); }

  constexpr bool is_finite() const { return code_ >= 0; }
  constexpr bool is_infinite() const { return code_ < 0; }
  constexpr bool is_inf1() const { return code_ == kInf1; }
  constexpr bool is_inf2() const { return code_ == kInf2; }

  // Only meaningful for finite vertices.
  constexpr std::int64_t value() const { return code_; }

  // inf1 < inf2 < 0 < 1 < ...
  constexpr auto operator<=>(const Vertex&) const = default;

  std::string to_string() const {
    if (is_inf1()) return "inf1";
    if (is_inf2()) return "inf2";
    return std::to_string(code_);
  }

 private:
  static constexpr std::int64_t kInf1 = -2;
  static constexpr std::int64_t kInf2 = -1;

  constexpr explicit Vertex(std::int64_t code) : code_(code) {}

  std::int64_t code_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.to_string(); }

inline constexpr Vertex fin(std::int64_t value) { return Vertex::finite(value); }

/// Unordered pair of distinct vertices, stored with first < second.
class Edge {
 public:
  Edge(Vertex a, Vertex b) : first_(std::min(a, b)), second_(std::max(a, b)) {
    if (a == b) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + a.to_string());
  }

  Vertex first() const { return first_; }
  Vertex second() const { return second_; }
  bool touches(Vertex v) const { return first_ == v || second_ == v; }
  Vertex other(Vertex v) const { return v == first_ ? second_ : first_; }

  auto operator<=>(const Edge&) const = default;

 private:
  Vertex first_;
  Vertex second_;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.first() << ',' << e.second() << '}';
}

/// Multisets of component lengths, both kept sorted ascending.
struct CycleStructure {
  std::vector<std::int64_t> cycles;
  std::vector<std::int64_t> paths;

  bool operator==(const CycleStructure&) const = default;
};

inline std::vector<std::int64_t> sorted_lengths(std::vector<std::int64_t> lengths) {
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

enum class ComponentKind { Isolated, Path, Cycle };

/// A connected component listed in traversal order. For a cycle the closing
/// edge back to the first vertex is implicit.
struct Component {
  ComponentKind kind;
  std::vector<Vertex> vertices;

  std::int64_t length() const {
    switch (kind) {
      case ComponentKind::Isolated: return 0;
      case ComponentKind::Path: return static_cast<std::int64_t>(vertices.size()) - 1;
      case ComponentKind::Cycle: return static_cast<std::int64_t>(vertices.size());
    }
    return 0;
  }
};

class StructuredGraph {
 public:
  explicit StructuredGraph(std::int64_t modulus = 0) : modulus_(modulus) {
    if (modulus < 0) throw Error(ErrorCode::InvalidGraph, "negative modulus");
  }

  std::int64_t modulus() const { return modulus_; }

  /// Reduces a finite vertex into [0, modulus); infinities pass through.
  Vertex canonical(Vertex v) const {
    if (v.is_infinite()) return v;
    if (modulus_ == 0) {
      if (v.value() < 0) throw Error(ErrorCode::InvalidGraph, "negative label without modulus");
      return v;
    }
    std::int64_t r = v.value() % modulus_;
    return fin(r < 0 ? r + modulus_ : r);
  }

  void add_vertex(Vertex v) { vertices_.insert(canonical(v)); }

  /// Throws InvalidGraph on a loop or on a repeated edge.
  void add_edge(Vertex a, Vertex b) {
    Edge e(canonical(a), canonical(b));
    if (!edges_.insert(e).second) {
      throw Error(ErrorCode::InvalidGraph, "repeated edge " + e.first().to_string() + "-" +
                                               e.second().to_string());
    }
    vertices_.insert(e.first());
    vertices_.insert(e.second());
  }
  void add_edge(const Edge& e) { add_edge(e.first(), e.second()); }

  /// Adds the cycle (v0, v1, ..., v_{l-1}).
  void add_cycle(const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) throw Error(ErrorCode::InvalidLength, "cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < cycle.size(); ++i) add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }

  /// Adds the path <v0, ..., v_l>; a single vertex is an isolated vertex.
  void add_path(const std::vector<Vertex>& path) {
    if (path.empty()) throw Error(ErrorCode::InvalidLength, "empty path");
    if (path.size() == 1) add_vertex(path.front());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
  }

  bool has_edge(const Edge& e) const {
    return edges_.count(Edge(canonical(e.first()), canonical(e.second()))) != 0;
  }
  bool has_vertex(Vertex v) const { return vertices_.count(canonical(v)) != 0; }

  const std::set<Edge>& edges() const { return edges_; }
  const std::set<Vertex>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::map<Vertex, int> degrees() const {
    std::map<Vertex, int> deg;
    for (Vertex v : vertices_) deg[v] = 0;
    for (const Edge& e : edges_) {
      ++deg[e.first()];
      ++deg[e.second()];
    }
    return deg;
  }

  int max_degree() const {
    int best = 0;
    for (const auto& [v, d] : degrees()) best = std::max(best, d);
    return best;
  }

  bool operator==(const StructuredGraph& other) const {
    return modulus_ == other.modulus_ && edges_ == other.edges_ && vertices_ == other.vertices_;
  }

  /// Same edge set, ignoring isolated vertices and modulus.
  bool same_edges(const StructuredGraph& other) const { return edges_ == other.edges_; }

 private:
  std::int64_t modulus_;
  std::set<Vertex> vertices_;
  std::set<Edge> edges_;
};

inline StructuredGraph make_graph(std::int64_t modulus, const std::vector<std::vector<Vertex>>& cycles,
                                  const std::vector<std::vector<Vertex>>& paths = {}) {
  StructuredGraph g(modulus);
  for (const auto& c : cycles) g.add_cycle(c);
  for (const auto& p : paths) g.add_path(p);
  return g;
}

inline StructuredGraph make_edges(std::int64_t modulus, const std::vector<Edge>& edges) {
  StructuredGraph g(modulus);
  for (const auto& e : edges) g.add_edge(e);
  return g;
}

/// Splits a graph of maximum degree 2 into its components. Cycles start at
/// their minimum vertex with the smaller neighbour second; paths start at
/// their smaller end. Components come back sorted by vertex sequence.
inline std::vector<Component> components(const StructuredGraph& g) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v];
  for (const Edge& e : g.edges()) {
    adj[e.first()].push_back(e.second());
    adj[e.second()].push_back(e.first());
  }
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() > 2) {
      throw Error(ErrorCode::DegreeViolation,
                  "vertex " + v.to_string() + " has degree " + std::to_string(nbrs.size()));
    }
  }

  std::set<Vertex> seen;
  std::vector<Component> out;
  auto walk = [&](Vertex start, Vertex next) {
    std::vector<Vertex> seq{start};
    Vertex prev = start;
    Vertex cur = next;
    seen.insert(start);
    while (cur != start && !seen.count(cur)) {
      seen.insert(cur);
      seq.push_back(cur);
      const auto& nb = adj[cur];
      if (nb.size() < 2) break;
      Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    }
    return seq;
  };

  // Paths and isolated vertices first: start from every vertex of degree < 2.
  for (const auto& [v, nbrs] : adj) {
    if (seen.count(v) || nbrs.size() == 2) continue;
    if (nbrs.empty()) {
      seen.insert(v);
      out.push_back({ComponentKind::Isolated, {v}});
      continue;
    }
    auto seq = walk(v, nbrs[0]);
    if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
    out.push_back({ComponentKind::Path, std::move(seq)});
  }
  // What is left lies on cycles; adj iterates in vertex order, so v is the
  // cycle minimum.
  for (const auto& [v, nbrs] : adj) {
    if (seen.count(v)) continue;
    Vertex next = std::min(nbrs[0], nbrs[1]);
    out.push_back({ComponentKind::Cycle, walk(v, next)});
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.kind != b.kind) return a.kind > b.kind;  // cycles, then paths, then isolated
    return a.vertices < b.vertices;
  });
  return out;
}

/// Multisets of cycle and path lengths; isolated vertices are ignored.
inline CycleStructure cycle_structure(const StructuredGraph& g) {
  CycleStructure cs;
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::Cycle) cs.cycles.push_back(c.length());
    if (c.kind == ComponentKind::Path) cs.paths.push_back(c.length());
  }
  std::sort(cs.cycles.begin(), cs.cycles.end());
  std::sort(cs.paths.begin(), cs.paths.end());
  return cs;
}

enum class GraphClass { Matching, LinearForest, TwoRegular, MixedOneTwo, Invalid };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Matching: return "Matching";
    case GraphClass::LinearForest: return "LinearForest";
    case GraphClass::TwoRegular: return "TwoRegular";
    case GraphClass::MixedOneTwo: return "MixedOneTwo";
    case GraphClass::Invalid: return "Invalid";
  }
  return "Invalid";
}

/// Classification of the edge-induced subgraph (isolated vertices do not
/// count). A linear forest must contain a vertex of degree 2, so a union of
/// single edges is a Matching and never a LinearForest.
inline GraphClass classify(const StructuredGraph& g) {
  if (g.max_degree() > 2) return GraphClass::Invalid;
  bool has_cycle = false;
  bool has_path = false;
  bool has_long_path = false;
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::Cycle) has_cycle = true;
    if (c.kind == ComponentKind::Path) {
      has_path = true;
      if (c.length() >= 2) has_long_path = true;
    }
  }
  if (has_cycle && has_path) return GraphClass::MixedOneTwo;
  if (has_cycle) return GraphClass::TwoRegular;
  if (has_long_path) return GraphClass::LinearForest;
  return GraphClass::Matching;
}

/// A (1,2)-graph: every non-isolated vertex has degree 1 or 2 and the graph
/// is not a matching.
inline bool is_one_two_graph(const StructuredGraph& g) {
  GraphClass c = classify(g);
  return c == GraphClass::LinearForest || c == GraphClass::TwoRegular ||
         c == GraphClass::MixedOneTwo;
}

inline StructuredGraph translate(const StructuredGraph& g, std::int64_t shift) {
  if (g.modulus() == 0 && shift != 0) {
    throw Error(ErrorCode::InvalidGraph, "translation needs a modulus");
  }
  StructuredGraph out(g.modulus());
  auto move = [&](Vertex v) { return v.is_finite() ? fin(v.value() + shift) : v; };
  for (Vertex v : g.vertices()) out.add_vertex(move(v));
  for (const Edge& e : g.edges()) out.add_edge(move(e.first()), move(e.second()));
  return out;
}

/// Both signed differences of every edge between finite vertices, reduced
/// mod n (or kept as signed integers when the modulus is 0). Sorted.
inline std::vector<std::int64_t> difference_list(const StructuredGraph& g) {
  std::vector<std::int64_t> out;
  const std::int64_t n = g.modulus();
  for (const Edge& e : g.edges()) {
    if (e.first().is_infinite() || e.second().is_infinite()) continue;
    std::int64_t d = e.first().value() - e.second().value();
    if (n == 0) {
      out.push_back(d);
      out.push_back(-d);
    } else {
      out.push_back(((d % n) + n) % n);
      out.push_back(((-d % n) + n) % n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline StructuredGraph graph_union(const StructuredGraph& a, const StructuredGraph& b) {
  StructuredGraph out(a.modulus());
  for (Vertex v : a.vertices()) out.add_vertex(v);
  for (Vertex v : b.vertices()) out.add_vertex(v);
  for (const Edge& e : a.edges()) out.add_edge(e);
  for (const Edge& e : b.edges()) {
    if (!out.has_edge(e)) out.add_edge(e);
  }
  return out;
}

/// G minus the edges of H; the vertex set of G is kept.
inline StructuredGraph graph_minus(const StructuredGraph& g, const StructuredGraph& h) {
  StructuredGraph out(g.modulus());
  for (Vertex v : g.vertices()) out.add_vertex(v);
  for (const Edge& e : g.edges()) {
    if (!h.edges().count(e)) out.add_edge(e);
  }
  return out;
}

inline bool is_edge_subgraph(const StructuredGraph& h, const StructuredGraph& g) {
  return std::includes(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end());
}

/// Same edges, but with a different modulus (used when a construction leaves
/// the cyclic setting).
inline StructuredGraph with_modulus(const StructuredGraph& g, std::int64_t modulus) {
  StructuredGraph out(modulus);
  for (Vertex v : g.vertices()) out.add_vertex(v);
  for (const Edge& e : g.edges()) out.add_edge(e);
  return out;
}

}  // namespace oberwolfach
