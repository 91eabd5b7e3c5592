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

// Extending a (1,2)-decomposition {F_1, ..., F_b} of K*_m to a
// 2-factorization {F_1+, ..., F_b+} of K*_n, n = 2b + eps, where F_i+
// contains F_i and exactly one extra cycle.
//
// The construction is an amalgamation followed by one-vertex-at-a-time
// detachment. All n - m new vertices start merged into a single pool vertex.
// In colour i the pool is incident to one "object" per open fragment of F_i
// (a path, or an old vertex F_i misses) and to pool loops, which stand for
// edges between two new vertices not yet detached. Every object meets the
// pool in two edge-ends (one for the 1-factor colour when n is even).
//
// Detaching a vertex w means choosing, in every colour, s_i edge-ends at the
// pool from distinct objects so that w ends up adjacent to every old and
// every already detached vertex exactly once, and to the pool q - 1 times
// (q = current pool size). Spreading weight 1/q over all edge-ends is a
// fractional solution of that transportation problem, so an integral one
// always exists and a max-flow finds it. Taking ends from distinct objects
// merges them, so each colour keeps a single open trail through the pool and
// the last pool vertex closes it into one cycle.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oberwolfach/decomposition.hpp"
#include "oberwolfach/graph.hpp"
#include "oberwolfach/halving.hpp"

namespace oberwolfach {

/// Edge colouring data for the extension of K_m to K_n: colour i must
/// become an s_i-factor; f_i counts its edges in K_m.
struct ColorPlan {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<int> s;
  std::vector<std::int64_t> f;

  std::size_t t() const { return s.size(); }
};

/// Colours 1..b are the parts (s = 2); for even m one more colour holds the
/// 1-factor I (s = 1, f = m/2).
inline ColorPlan plan_for(const OneTwoDecomposition& d) {
  ColorPlan plan;
  plan.m = d.order;
  plan.n = 2 * static_cast<std::int64_t>(d.parts.size()) + d.epsilon;
  for (const auto& p : d.parts) {
    plan.s.push_back(2);
    plan.f.push_back(static_cast<std::int64_t>(p.edge_count()));
  }
  if (d.epsilon == 2) {
    plan.s.push_back(1);
    plan.f.push_back(d.order / 2);
  }
  return plan;
}

/// The three per-colour conditions, plus sum s_i = n - 1:
///   f_i >= s_i (m - n/2),  s_i n even,  max degree of colour i <= s_i.
inline bool check_hj(const ColorPlan& plan, const std::vector<int>& max_degrees) {
  if (plan.f.size() != plan.s.size() || max_degrees.size() != plan.s.size()) return false;
  if (plan.m < 1 || plan.m > plan.n) return false;
  std::int64_t total = 0;
  for (int s : plan.s) total += s;
  if (total != plan.n - 1) return false;
  for (std::size_t i = 0; i < plan.s.size(); ++i) {
    const std::int64_t s = plan.s[i];
    if (s != 1 && s != 2) return false;
    if (2 * plan.f[i] < s * (2 * plan.m - plan.n)) return false;
    if ((s * plan.n) % 2 != 0) return false;
    if (max_degrees[i] > s) return false;
  }
  return true;
}

struct FragmentSet {
  std::vector<Component> closed;  // cycles, kept verbatim
  std::vector<Component> open;    // paths, plus old vertices the part misses
  std::int64_t new_vertices = 0;
  bool feasible = false;          // enough new vertices to separate the open fragments
};

inline FragmentSet fragments(const StructuredGraph& part, const std::set<Vertex>& old_vertices,
                             std::int64_t n) {
  FragmentSet fs;
  for (auto& c : components(part)) {
    if (c.kind == ComponentKind::Cycle) {
      fs.closed.push_back(std::move(c));
    } else if (c.kind == ComponentKind::Path) {
      fs.open.push_back(std::move(c));
    }
  }
  for (Vertex v : old_vertices) {
    bool covered = false;
    for (const Edge& e : part.edges()) covered = covered || e.touches(v);
    if (!covered) fs.open.push_back({ComponentKind::Isolated, {v}});
  }
  fs.new_vertices = n - static_cast<std::int64_t>(old_vertices.size());
  fs.feasible = fs.new_vertices >= static_cast<std::int64_t>(fs.open.size());
  return fs;
}

struct ExtendOptions {
  std::uint64_t seed = 0;
  /// Cap on augmenting paths over the whole detachment.
  std::uint64_t budget = 64'000'000;
};

namespace detail {

/// Dinic max-flow on small integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int add_arc(int from, int to, int cap) {
    const int id = static_cast<int>(to_.size());
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  int flow_on(int arc) const { return cap_[static_cast<std::size_t>(arc ^ 1)]; }

  std::int64_t max_flow(int s, int t, std::uint64_t& augmentations) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) {
        total += pushed;
        ++augmentations;
      }
    }
    return total;
  }

 private:
  void push(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        const int v = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
      const int v = to_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] <= 0 ||
          level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1) {
        continue;
      }
      if (int got = dfs(v, t, std::min(limit, cap_[static_cast<std::size_t>(e)]))) {
        cap_[static_cast<std::size_t>(e)] -= got;
        cap_[static_cast<std::size_t>(e ^ 1)] += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

/// Edge-ends at the pool owned by one trail (or loop) of one colour. The
/// entries are vertex indices; `pool` marks an end of a pool loop.
struct PoolObject {
  int ends[2] = {0, 0};
  int count = 0;
};

}  // namespace detail

/// Extends D to a 2-factorization of K*_n, n = 2b + eps. Throws Infeasible
/// when the preconditions fail and BudgetExceeded when the augmentation cap
/// is hit. The result is re-verified before it is returned.
inline Decomposition extend(const OneTwoDecomposition& d, const ExtendOptions& opt = {}) {
  const std::int64_t m = d.order;
  const int eps = d.epsilon;
  const std::int64_t b = static_cast<std::int64_t>(d.parts.size());
  const std::int64_t n = 2 * b + eps;
  if (eps != 1 && eps != 2) throw Error(ErrorCode::Infeasible, "epsilon must be 1 or 2");
  if ((m % 2 == 1) != (eps == 1)) throw Error(ErrorCode::Infeasible, "order parity does not match epsilon");
  if (n <= m) throw Error(ErrorCode::Infeasible, "new order must exceed the old one");
  if (!check_extension_condition(d)) throw Error(ErrorCode::Infeasible, "extension condition fails");

  Decomposition as_d;
  as_d.order = m;
  as_d.regime = regime_for_order(m);
  as_d.factors = d.parts;
  as_d.one_factor = d.one_factor;
  const Report base = verify_decomposition(as_d, false);
  if (!base.valid()) throw Error(ErrorCode::Infeasible, "parts do not partition K*_m");
  for (const auto& fr : base.factors) {
    if (!fr.degree_ok) throw Error(ErrorCode::Infeasible, "a part has a vertex of degree above 2");
  }
  StructuredGraph one_factor;
  if (eps == 2) {
    for (const Edge& e : base.leftover) one_factor.add_edge(e);
  }

  // Vertex indices: old vertices 0..m-1, new vertices m..n-1, pool = n.
  std::vector<Vertex> label;
  std::map<Vertex, int> index;
  std::int64_t next_label = 0;
  for (Vertex v : vertex_universe(as_d)) {
    index[v] = static_cast<int>(label.size());
    label.push_back(v);
    if (v.is_finite()) next_label = std::max(next_label, v.value() + 1);
  }
  for (std::int64_t i = 0; i < n - m; ++i) label.push_back(fin(next_label + i));
  const int pool = static_cast<int>(n);
  const std::int64_t q0 = n - m;

  const std::size_t colors = static_cast<std::size_t>(b) + (eps == 2 ? 1 : 0);
  std::vector<int> s(colors, 2);
  if (eps == 2) s.back() = 1;
  std::vector<std::vector<detail::PoolObject>> objects(colors);
  std::vector<std::vector<std::pair<int, int>>> new_edges(colors);

  for (std::size_t c = 0; c < static_cast<std::size_t>(b); ++c) {
    const StructuredGraph& part = d.parts[c];
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    for (const Edge& e : part.edges()) {
      ++deg[static_cast<std::size_t>(index.at(e.first()))];
      ++deg[static_cast<std::size_t>(index.at(e.second()))];
    }
    for (const auto& comp : components(part)) {
      if (comp.kind != ComponentKind::Path) continue;
      objects[c].push_back({{index.at(comp.vertices.front()), index.at(comp.vertices.back())}, 2});
    }
    for (int v = 0; v < static_cast<int>(m); ++v) {
      if (deg[static_cast<std::size_t>(v)] == 0) objects[c].push_back({{v, v}, 2});
    }
    const std::int64_t loops = q0 - static_cast<std::int64_t>(objects[c].size());
    if (loops < 0) throw Error(ErrorCode::Infeasible, "part " + std::to_string(c) + " has too many open fragments");
    for (std::int64_t i = 0; i < loops; ++i) objects[c].push_back({{pool, pool}, 2});
  }
  if (eps == 2) {
    for (std::int64_t i = 0; i < q0 / 2; ++i) objects.back().push_back({{pool, pool}, 2});
  }

  std::mt19937_64 rng(opt.seed);
  std::uint64_t augmentations = 0;

  for (int w = static_cast<int>(m); w < static_cast<int>(n) - 1; ++w) {
    const std::int64_t q = n - w;  // pool size before detaching w
    for (auto& objs : objects) std::shuffle(objs.begin(), objs.end(), rng);

    // Nodes: source, sink, colours, objects, then targets 0..n-1 and pool.
    const int src = 0, sink = 1, color_base = 2;
    int obj_base = color_base + static_cast<int>(colors);
    std::vector<int> obj_offset(colors);
    int total_objects = 0;
    for (std::size_t c = 0; c < colors; ++c) {
      obj_offset[c] = total_objects;
      total_objects += static_cast<int>(objects[c].size());
    }
    const int target_base = obj_base + total_objects;
    detail::FlowNetwork net(target_base + pool + 1);

    std::vector<std::vector<std::pair<int, int>>> end_arcs(static_cast<std::size_t>(total_objects));
    std::int64_t need = 0;
    for (std::size_t c = 0; c < colors; ++c) {
      net.add_arc(src, color_base + static_cast<int>(c), s[c]);
      need += s[c];
      for (std::size_t o = 0; o < objects[c].size(); ++o) {
        const int node = obj_base + obj_offset[c] + static_cast<int>(o);
        net.add_arc(color_base + static_cast<int>(c), node, 1);
        const auto& obj = objects[c][o];
        for (int e = 0; e < obj.count; ++e) {
          if (e == 1 && obj.ends[1] == obj.ends[0]) break;
          const int arc = net.add_arc(node, target_base + obj.ends[e], 1);
          end_arcs[static_cast<std::size_t>(obj_offset[c]) + o].push_back({arc, e});
        }
      }
    }
    for (int v = 0; v < w; ++v) net.add_arc(target_base + v, sink, 1);
    net.add_arc(target_base + pool, sink, static_cast<int>(q - 1));

    const std::int64_t got = net.max_flow(src, sink, augmentations);
    if (augmentations > opt.budget) throw Error(ErrorCode::BudgetExceeded, "augmentation budget exhausted");
    if (got != need) {
      throw Error(ErrorCode::ExtendFailed, "detachment flow is short: " + std::to_string(got) + " of " +
                                               std::to_string(need));
    }

    for (std::size_t c = 0; c < colors; ++c) {
      std::vector<std::pair<std::size_t, int>> taken;  // (object, end)
      for (std::size_t o = 0; o < objects[c].size(); ++o) {
        for (const auto& [arc, e] : end_arcs[static_cast<std::size_t>(obj_offset[c]) + o]) {
          if (net.flow_on(arc) > 0) taken.push_back({o, e});
        }
      }
      if (static_cast<int>(taken.size()) != s[c]) throw Error(ErrorCode::ExtendFailed, "colour takes wrong end count");

      std::vector<int> leftovers;
      for (const auto& [o, e] : taken) {
        auto& obj = objects[c][o];
        const int target = obj.ends[e];
        if (target != pool) new_edges[c].push_back({w, target});
        for (int j = 0; j < obj.count; ++j) {
          if (j == e) continue;
          // The partner end of a pool loop now hangs off w.
          leftovers.push_back(target == pool ? w : obj.ends[j]);
        }
      }
      std::vector<std::size_t> gone;
      for (const auto& [o, e] : taken) gone.push_back(o);
      std::sort(gone.rbegin(), gone.rend());
      for (std::size_t o : gone) objects[c].erase(objects[c].begin() + static_cast<std::ptrdiff_t>(o));
      if (s[c] == 2) {
        objects[c].push_back({{leftovers.at(0), leftovers.at(1)}, 2});
      } else if (!leftovers.empty()) {
        objects[c].push_back({{leftovers.at(0), leftovers.at(0)}, 1});
      }
    }
  }

  // The pool itself is the last new vertex and closes every trail.
  const int last = static_cast<int>(n) - 1;
  for (std::size_t c = 0; c < colors; ++c) {
    if (objects[c].size() != 1 || objects[c][0].count != s[c]) {
      throw Error(ErrorCode::ExtendFailed, "colour does not end with a single trail");
    }
    for (int e = 0; e < s[c]; ++e) new_edges[c].push_back({last, objects[c][0].ends[e]});
  }

  Decomposition out;
  out.order = n;
  out.regime = regime_for_order(n);
  for (std::size_t c = 0; c < static_cast<std::size_t>(b); ++c) {
    StructuredGraph f;
    for (const Edge& e : d.parts[c].edges()) f.add_edge(e);
    for (const auto& [u, v] : new_edges[c]) {
      f.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    }
    out.factors.push_back(std::move(f));
  }
  if (eps == 2) {
    StructuredGraph one;
    for (const Edge& e : one_factor.edges()) one.add_edge(e);
    for (const auto& [u, v] : new_edges.back()) {
      one.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    }
    out.one_factor = std::move(one);
  }
  return out;
}

struct ExtensionReport {
  bool counts_match = false;
  bool containment = true;
  bool cycles_preserved = true;
  bool one_more_cycle = true;
  bool connectors_avoid_old_pairs = true;
  bool one_factor_extended = true;
  Report decomposition;
  std::vector<std::string> problems;

  bool valid() const {
    return counts_match && containment && cycles_preserved && one_more_cycle &&
           connectors_avoid_old_pairs && one_factor_extended && decomposition.valid();
  }
};

inline ExtensionReport verify_extension(const OneTwoDecomposition& d, const Decomposition& plus) {
  ExtensionReport r;
  r.decomposition = verify_decomposition(plus);
  r.problems = r.decomposition.problems;
  r.counts_match = d.parts.size() == plus.factors.size();
  if (!r.counts_match) {
    r.problems.push_back("part and factor counts differ");
    return r;
  }
  std::set<Vertex> old;
  for (const auto& p : d.parts) old.insert(p.vertices().begin(), p.vertices().end());
  if (d.one_factor) old.insert(d.one_factor->vertices().begin(), d.one_factor->vertices().end());

  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    // Parts may carry a modulus; the extension uses plain labels.
    const StructuredGraph part = with_modulus(d.parts[i], 0);
    const StructuredGraph fac = with_modulus(plus.factors[i], 0);
    if (!is_edge_subgraph(part, fac)) {
      r.containment = false;
      r.problems.push_back("part " + std::to_string(i) + " is not contained in its factor");
      continue;
    }
    for (const Edge& e : fac.edges()) {
      if (!part.has_edge(e) && old.count(e.first()) && old.count(e.second())) {
        r.connectors_avoid_old_pairs = false;
        r.problems.push_back("factor " + std::to_string(i) + " adds an edge between old vertices");
      }
    }
    try {
      std::vector<std::vector<Vertex>> part_cycles, fac_cycles;
      for (const auto& c : components(part)) {
        if (c.kind == ComponentKind::Cycle) part_cycles.push_back(c.vertices);
      }
      for (const auto& c : components(fac)) {
        if (c.kind == ComponentKind::Cycle) fac_cycles.push_back(c.vertices);
      }
      for (const auto& pc : part_cycles) {
        if (std::find(fac_cycles.begin(), fac_cycles.end(), pc) == fac_cycles.end()) {
          r.cycles_preserved = false;
          r.problems.push_back("factor " + std::to_string(i) + " does not keep a cycle of its part");
        }
      }
      if (fac_cycles.size() != part_cycles.size() + 1) {
        r.one_more_cycle = false;
        r.problems.push_back("factor " + std::to_string(i) + " does not gain exactly one cycle");
      }
    } catch (const Error& e) {
      r.cycles_preserved = false;
      r.problems.push_back(e.what());
    }
  }
  if (d.one_factor) {
    r.one_factor_extended =
        plus.one_factor && is_edge_subgraph(with_modulus(*d.one_factor, 0), with_modulus(*plus.one_factor, 0));
    if (!r.one_factor_extended) r.problems.push_back("declared 1-factor is not extended");
  }
  return r;
}

}  // namespace oberwolfach
