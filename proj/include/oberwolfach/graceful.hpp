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

// Graceful labelings of zillion graphs [k | L]: one path of length k plus
// disjoint cycles of lengths L, labelled by {0, ..., a} (a = k + sum L) so that
// the absolute edge differences are exactly 1, ..., a. With k = 0 the path
// degenerates to one isolated vertex.
//
// The search places differences from a down to 1 (difference a forces the
// edge {0, a}), tracking vertex degrees and open path components so that a
// cycle may only close at a length still owed by L.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "oberwolfach/graph.hpp"

namespace oberwolfach {

struct ZillionShape {
  std::int64_t k = 0;
  std::vector<std::int64_t> cycles;

  std::int64_t top() const {
    return k + std::accumulate(cycles.begin(), cycles.end(), std::int64_t{0});
  }

  void validate() const {
    if (k < 0) throw Error(ErrorCode::InvalidLength, "path length must be non-negative");
    for (auto l : cycles) {
      if (l < 3) throw Error(ErrorCode::InvalidLength, "cycle length below 3");
    }
  }
};

struct GracefulLabeling {
  ZillionShape shape;
  StructuredGraph graph;  // modulus 0, integer labels
  std::pair<std::int64_t, std::int64_t> path_endpoints{0, 0};

  /// Path vertices from path_endpoints.first to path_endpoints.second.
  std::vector<std::int64_t> path() const {
    for (const auto& c : components(graph)) {
      if (c.kind == ComponentKind::Cycle) continue;
      std::vector<std::int64_t> out;
      for (Vertex v : c.vertices) out.push_back(v.value());
      if (out.front() != path_endpoints.first) std::reverse(out.begin(), out.end());
      return out;
    }
    return {};
  }

  std::vector<std::vector<std::int64_t>> cycle_list() const {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& c : components(graph)) {
      if (c.kind != ComponentKind::Cycle) continue;
      std::vector<std::int64_t> cyc;
      for (Vertex v : c.vertices) cyc.push_back(v.value());
      out.push_back(std::move(cyc));
    }
    return out;
  }
};

/// Builds a labeling from an explicit path (one vertex when k = 0) and cycles.
/// The path's first vertex becomes p0.
inline GracefulLabeling make_labeling(const std::vector<std::int64_t>& path,
                                      const std::vector<std::vector<std::int64_t>>& cycles) {
  GracefulLabeling t;
  t.shape.k = static_cast<std::int64_t>(path.size()) - 1;
  std::vector<Vertex> pv;
  for (auto v : path) pv.push_back(fin(v));
  t.graph.add_path(pv);
  for (const auto& c : cycles) {
    std::vector<Vertex> cv;
    for (auto v : c) cv.push_back(fin(v));
    t.graph.add_cycle(cv);
    t.shape.cycles.push_back(static_cast<std::int64_t>(c.size()));
  }
  std::sort(t.shape.cycles.begin(), t.shape.cycles.end());
  t.path_endpoints = {path.front(), path.back()};
  return t;
}

inline bool verify_graceful(const GracefulLabeling& t) {
  const auto& g = t.graph;
  if (g.modulus() != 0 || t.shape.k < 0) return false;
  for (auto l : t.shape.cycles) {
    if (l < 3) return false;
  }
  const std::int64_t a = t.shape.top();

  if (static_cast<std::int64_t>(g.vertices().size()) != a + 1) return false;
  std::int64_t expect = 0;
  for (Vertex v : g.vertices()) {
    if (!v.is_finite() || v.value() != expect++) return false;
  }

  std::vector<std::int64_t> diffs;
  for (const Edge& e : g.edges()) diffs.push_back(e.second().value() - e.first().value());
  std::sort(diffs.begin(), diffs.end());
  if (static_cast<std::int64_t>(diffs.size()) != a) return false;
  for (std::int64_t i = 0; i < a; ++i) {
    if (diffs[i] != i + 1) return false;
  }

  if (g.max_degree() > 2) return false;
  std::vector<std::int64_t> cyc;
  std::vector<Component> open;
  for (const auto& c : components(g)) {
    if (c.kind == ComponentKind::Cycle) {
      cyc.push_back(c.length());
    } else {
      open.push_back(c);
    }
  }
  std::sort(cyc.begin(), cyc.end());
  if (cyc != sorted_lengths(t.shape.cycles)) return false;
  if (open.size() != 1) return false;
  const Component& p = open.front();
  if (t.shape.k == 0) {
    if (p.kind != ComponentKind::Isolated) return false;
  } else if (p.kind != ComponentKind::Path || p.length() != t.shape.k) {
    return false;
  }
  const auto ends = std::minmax({p.vertices.front().value(), p.vertices.back().value()});
  const auto claimed = std::minmax({t.path_endpoints.first, t.path_endpoints.second});
  return ends == claimed;
}

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

struct GracefulSearchOptions {
  std::uint64_t budget = 50'000'000;  // node expansions, summed over restarts
  std::uint64_t seed = 0;
  /// Shapes with a <= a_exhaustive get one complete search; only they can
  /// come back Exhausted.
  std::int64_t a_exhaustive = 12;
};

struct GracefulSearchResult {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::optional<GracefulLabeling> labeling;
  std::uint64_t nodes = 0;
};

namespace detail {

class GracefulDfs {
 public:
  explicit GracefulDfs(const ZillionShape& shape) : k_(shape.k), a_(shape.top()) {
    const auto n = static_cast<std::size_t>(a_ + 1);
    deg_.assign(n, 0);
    other_.resize(n);
    std::iota(other_.begin(), other_.end(), 0);
    len_.assign(n, 0);
    owed_.assign(n + 1, 0);
    for (auto l : shape.cycles) {
      ++owed_[static_cast<std::size_t>(l)];
      ++owed_total_;
    }
    edges_.reserve(n);
  }

  /// Runs until found, exhausted or out of nodes. Returns true when the
  /// whole tree below the root was explored (or a labeling was found).
  bool run(std::uint64_t node_limit, std::mt19937_64& rng) {
    limit_ = node_limit;
    nodes_ = 0;
    cut_ = false;
    found_ = false;
    rng_ = &rng;
    dfs(a_);
    return found_ || !cut_;
  }

  bool found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }

  GracefulLabeling labeling(const ZillionShape& shape) const {
    GracefulLabeling t;
    t.shape = shape;
    std::sort(t.shape.cycles.begin(), t.shape.cycles.end());
    for (std::int64_t v = 0; v <= a_; ++v) t.graph.add_vertex(fin(v));
    for (const auto& [x, y] : solution_) t.graph.add_edge(fin(x), fin(y));
    for (const auto& c : components(t.graph)) {
      if (c.kind == ComponentKind::Cycle) continue;
      t.path_endpoints = {c.vertices.front().value(), c.vertices.back().value()};
    }
    return t;
  }

 private:
  struct Undo {
    std::int64_t x, y;
    std::int64_t ex, ey;  // previous far ends
    std::int64_t lx, ly;  // previous component lengths at the far ends
    std::int64_t closed;  // cycle length closed, or 0
  };

  std::int64_t max_owed() const {
    for (std::int64_t l = a_ + 1; l >= 3; --l) {
      if (owed_[static_cast<std::size_t>(l)] > 0) return l;
    }
    return 0;
  }

  bool place(std::int64_t x, std::int64_t y, Undo& u) {
    const auto xs = static_cast<std::size_t>(x), ys = static_cast<std::size_t>(y);
    if (deg_[xs] >= 2 || deg_[ys] >= 2) return false;
    const std::int64_t ex = other_[xs], ey = other_[ys];
    u = {x, y, ex, ey, len_[static_cast<std::size_t>(ex)], len_[static_cast<std::size_t>(ey)], 0};
    if (ex == y) {
      // x and y are the two ends of one path: closing it makes a cycle.
      const std::int64_t cyc = len_[xs] + 1;
      if (cyc > a_ + 1 || owed_[static_cast<std::size_t>(cyc)] == 0) return false;
      --owed_[static_cast<std::size_t>(cyc)];
      --owed_total_;
      u.closed = cyc;
    } else {
      const std::int64_t merged = len_[xs] + len_[ys] + 1;
      if (merged > k_ && merged + 1 > max_owed()) return false;
      other_[static_cast<std::size_t>(ex)] = ey;
      other_[static_cast<std::size_t>(ey)] = ex;
      len_[static_cast<std::size_t>(ex)] = merged;
      len_[static_cast<std::size_t>(ey)] = merged;
    }
    ++deg_[xs];
    ++deg_[ys];
    edges_.push_back({x, y});
    return true;
  }

  void unplace(const Undo& u) {
    edges_.pop_back();
    --deg_[static_cast<std::size_t>(u.x)];
    --deg_[static_cast<std::size_t>(u.y)];
    if (u.closed) {
      ++owed_[static_cast<std::size_t>(u.closed)];
      ++owed_total_;
      return;
    }
    // Restore the two original components.
    other_[static_cast<std::size_t>(u.x)] = u.ex;
    other_[static_cast<std::size_t>(u.ex)] = u.x;
    other_[static_cast<std::size_t>(u.y)] = u.ey;
    other_[static_cast<std::size_t>(u.ey)] = u.y;
    len_[static_cast<std::size_t>(u.ex)] = u.lx;
    len_[static_cast<std::size_t>(u.x)] = u.lx;
    len_[static_cast<std::size_t>(u.ey)] = u.ly;
    len_[static_cast<std::size_t>(u.y)] = u.ly;
  }

  bool accept() const { return owed_total_ == 0; }

  void dfs(std::int64_t d) {
    if (found_ || cut_) return;
    if (d == 0) {
      if (accept()) {
        found_ = true;
        solution_ = edges_;
      }
      return;
    }
    std::vector<std::int64_t> starts(static_cast<std::size_t>(a_ - d + 1));
    std::iota(starts.begin(), starts.end(), 0);
    std::shuffle(starts.begin(), starts.end(), *rng_);
    for (std::int64_t x : starts) {
      if (++nodes_ > limit_) {
        cut_ = true;
        return;
      }
      Undo u{};
      if (!place(x, x + d, u)) continue;
      dfs(d - 1);
      if (found_ || cut_) return;
      unplace(u);
    }
  }

  std::int64_t k_;
  std::int64_t a_;
  std::vector<int> deg_;
  std::vector<std::int64_t> other_;  // far end of the path through an end vertex
  std::vector<std::int64_t> len_;    // edge count of that path, valid at its ends
  std::vector<std::int64_t> owed_;   // cycle lengths still to close
  std::int64_t owed_total_ = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges_;
  std::vector<std::pair<std::int64_t, std::int64_t>> solution_;
  std::uint64_t limit_ = 0;
  std::uint64_t nodes_ = 0;
  bool cut_ = false;
  bool found_ = false;
  std::mt19937_64* rng_ = nullptr;
};

/// Seeded restarts with doubling node limits until the budget runs out.
inline GracefulSearchResult restart_search(const ZillionShape& shape, std::uint64_t budget,
                                           std::mt19937_64& rng, bool complete_is_proof) {
  GracefulSearchResult res;
  std::uint64_t per_run = complete_is_proof ? budget : std::min<std::uint64_t>(budget, 4096);
  while (res.nodes < budget) {
    const std::uint64_t limit = std::min(per_run, budget - res.nodes);
    GracefulDfs dfs(shape);
    const bool complete = dfs.run(limit, rng);
    res.nodes += dfs.nodes();
    if (dfs.found()) {
      res.status = SearchStatus::Found;
      res.labeling = dfs.labeling(shape);
      return res;
    }
    if (complete) {
      res.status = complete_is_proof ? SearchStatus::Exhausted : SearchStatus::BudgetExceeded;
      return res;
    }
    per_run = std::min<std::uint64_t>(per_run * 2, std::uint64_t{1} << 40);
  }
  res.status = SearchStatus::BudgetExceeded;
  return res;
}

}  // namespace detail

/// Reflection x -> a - x; preserves gracefulness.
inline GracefulLabeling complement(const GracefulLabeling& t) {
  const std::int64_t a = t.shape.top();
  GracefulLabeling out;
  out.shape = t.shape;
  for (Vertex v : t.graph.vertices()) out.graph.add_vertex(fin(a - v.value()));
  for (const Edge& e : t.graph.edges()) {
    out.graph.add_edge(fin(a - e.first().value()), fin(a - e.second().value()));
  }
  out.path_endpoints = {a - t.path_endpoints.first, a - t.path_endpoints.second};
  return out;
}

/// Searches for a graceful labeling of the given shape.
///
/// For a <= a_exhaustive this is one complete seeded search, so a miss is a
/// proof of non-existence; larger shapes get seeded restarts with doubling
/// node limits and a miss is reported as BudgetExceeded. (Growing the path
/// by a zigzag on the outer labels is not available: difference a forces
/// the edge {0, a}, so no path end ever sits at 0 or a once L is nonempty.)
inline GracefulSearchResult search_graceful(const ZillionShape& shape,
                                            const GracefulSearchOptions& opt = {}) {
  shape.validate();
  std::mt19937_64 rng(opt.seed);
  return detail::restart_search(shape, opt.budget, rng, shape.top() <= opt.a_exhaustive);
}

}  // namespace oberwolfach
