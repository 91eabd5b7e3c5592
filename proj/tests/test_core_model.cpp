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

#include <catch_amalgamated.hpp>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oberwolfach;
using fixtures::kInf;

TEST_CASE("cycle structure of the worked starter", "[core]") {
  const auto cs = cycle_structure(fixtures::worked_g());
  CHECK(cs.cycles == std::vector<std::int64_t>{3, 3, 3, 4, 4});
  CHECK(cs.paths.empty());
}

TEST_CASE("cycle structure of a single cycle and of a mixed graph", "[core]") {
  CHECK(cycle_structure(make_graph(0, {{fin(0), fin(1), fin(2), fin(3), fin(4)}})).cycles ==
        std::vector<std::int64_t>{5});
  const auto cs = cycle_structure(fixtures::worked_halving());
  CHECK(cs.cycles == std::vector<std::int64_t>{3, 4});
  CHECK(cs.paths == std::vector<std::int64_t>{1});
}

TEST_CASE("degree three is rejected", "[core]") {
  StructuredGraph g;
  g.add_edge(fin(0), fin(1));
  g.add_edge(fin(0), fin(2));
  g.add_edge(fin(0), fin(3));
  try {
    (void)cycle_structure(g);
    FAIL("expected DegreeViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeViolation);
  }
  CHECK(classify(g) == GraphClass::Invalid);
}

TEST_CASE("classify", "[core]") {
  CHECK(classify(fixtures::worked_matching()) == GraphClass::Matching);
  CHECK(classify(make_graph(0, {{fin(0), fin(1), fin(2)}})) == GraphClass::TwoRegular);
  CHECK(classify(fixtures::worked_halving()) == GraphClass::MixedOneTwo);
  CHECK(classify(make_graph(0, {}, {{fin(0), fin(1), fin(2)}})) == GraphClass::LinearForest);
  CHECK(classify(make_graph(0, {}, {{fin(0), fin(1)}})) == GraphClass::Matching);
}

TEST_CASE("classify agrees with a component scan on every graph up to 5 vertices", "[core][oracle]") {
  // All graphs on 5 labelled vertices (1024 edge subsets).
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) pairs.push_back({u, v});
  }
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    StructuredGraph g;
    oracle::SmallGraph sg{5, std::vector<std::vector<int>>(5)};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      g.add_edge(fin(pairs[i].first), fin(pairs[i].second));
      sg.adj[static_cast<std::size_t>(pairs[i].first)].push_back(pairs[i].second);
      sg.adj[static_cast<std::size_t>(pairs[i].second)].push_back(pairs[i].first);
    }
    const auto sh = oracle::shape_of(sg);
    GraphClass want;
    if (!sh) {
      want = GraphClass::Invalid;
    } else {
      std::vector<int> real_paths;
      for (int p : sh->second) {
        if (p > 0) real_paths.push_back(p);
      }
      const bool has_cycle = !sh->first.empty();
      const bool long_path = std::any_of(real_paths.begin(), real_paths.end(), [](int p) { return p >= 2; });
      if (has_cycle && !real_paths.empty()) {
        want = GraphClass::MixedOneTwo;
      } else if (has_cycle) {
        want = GraphClass::TwoRegular;
      } else if (long_path) {
        want = GraphClass::LinearForest;
      } else {
        want = GraphClass::Matching;
      }
    }
    INFO("mask " << mask);
    CHECK(classify(g) == want);
  }
}

TEST_CASE("translate", "[core]") {
  const auto g = fixtures::worked_g();
  CHECK(translate(g, 1).same_edges(fixtures::worked_g_prime()));
  CHECK(translate(g, 0).same_edges(g));
  CHECK(translate(translate(g, 5), 14).same_edges(translate(g, 3)));
  for (int s = 0; s < 16; ++s) {
    CHECK(cycle_structure(translate(g, s)).cycles == cycle_structure(g).cycles);
    CHECK(difference_list(translate(g, s)) == difference_list(g));
  }
}

TEST_CASE("difference list", "[core]") {
  CHECK(difference_list(make_edges(16, {Edge(fin(2), fin(10))})) == std::vector<std::int64_t>{8, 8});
  CHECK(difference_list(make_edges(16, {Edge(kInf, fin(2))})).empty());
  const auto dl = difference_list(fixtures::worked_g());
  for (std::int64_t d = 1; d < 16; ++d) CHECK(std::count(dl.begin(), dl.end(), d) >= 1);
}

TEST_CASE("canonical components start at the minimum with the smaller neighbour second", "[core]") {
  const auto comps = components(fixtures::worked_g());
  REQUIRE(comps.size() == 5);
  // inf1 sorts first, so (inf1, 2, 10) leads.
  CHECK(comps[0].vertices == std::vector<Vertex>{kInf, fin(2), fin(10)});
  bool saw = false;
  for (const auto& c : comps) {
    if (c.vertices.front() == fin(0)) {
      CHECK(c.vertices == std::vector<Vertex>{fin(0), fin(5), fin(1), fin(7)});
      saw = true;
    }
  }
  CHECK(saw);
}

TEST_CASE("verify the worked orbits", "[core]") {
  const Report odd = verify_decomposition(fixtures::worked_orbit(false));
  CHECK(odd.valid_odd);
  CHECK(all_factors_have(odd, {3, 3, 3, 4, 4}));
  const Report even = verify_decomposition(fixtures::worked_orbit(true));
  CHECK(even.valid_even);
  CHECK(even.leftover_perfect_matching);
  REQUIRE(even.one_factor_matches.has_value());
  CHECK(*even.one_factor_matches);
  CHECK(all_factors_have(even, {3, 3, 4, 4, 4}));
}

TEST_CASE("a missing factor leaves a non-matching leftover", "[core]") {
  auto d = fixtures::worked_orbit(false);
  d.factors.pop_back();
  const Report r = verify_decomposition(d);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.leftover_empty);
  CHECK_FALSE(r.leftover_perfect_matching);
  std::size_t total = r.leftover.size();
  for (const auto& f : d.factors) total += f.edge_count();
  CHECK(total == 17u * 16u / 2u);
}

TEST_CASE("overlapping factors are reported", "[core]") {
  auto d = fixtures::worked_orbit(false);
  d.factors.push_back(d.factors.front());
  const Report r = verify_decomposition(d);
  CHECK_FALSE(r.disjoint);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.repeated_edges.empty());
}

TEST_CASE("edges and vertices", "[core]") {
  CHECK_THROWS_AS(Edge(fin(1), fin(1)), Error);
  CHECK(Edge(fin(5), fin(2)) == Edge(fin(2), fin(5)));
  CHECK(Vertex::inf1() < Vertex::inf2());
  CHECK(Vertex::inf2() < fin(0));
  StructuredGraph g(8);
  g.add_edge(fin(9), fin(2));
  CHECK(g.has_edge(Edge(fin(1), fin(2))));
  CHECK_THROWS_AS(g.add_edge(fin(1), fin(10)), Error);
}
