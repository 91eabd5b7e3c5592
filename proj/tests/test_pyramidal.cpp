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

#include "support/fixtures.hpp"

using namespace oberwolfach;
using fixtures::kInf;

TEST_CASE("doubling the worked seed gives the printed starters", "[pyramidal]") {
  const auto odd = double_labeling(fixtures::worked_seed(), 1);
  CHECK(odd.a == 8);
  CHECK(odd.x == 3);
  CHECK(odd.starter.same_edges(fixtures::worked_g()));
  const auto even = double_labeling(fixtures::worked_seed(), 2);
  CHECK(even.x == 4);
  CHECK(even.starter.same_edges(fixtures::worked_g_star()));
  REQUIRE(even.one_factor);
  CHECK(even.orbit.one_factor->same_edges(*fixtures::worked_orbit(true).one_factor));
}

TEST_CASE("orbits match the hand-entered ones", "[pyramidal]") {
  for (int eps : {1, 2}) {
    const auto p = double_labeling(fixtures::worked_seed(), eps);
    const auto want = fixtures::worked_orbit(eps == 2);
    REQUIRE(p.orbit.factors.size() == want.factors.size());
    for (std::size_t i = 0; i < want.factors.size(); ++i) CHECK(p.orbit.factors[i].same_edges(want.factors[i]));
    CHECK(verify_decomposition(p.orbit).valid());
  }
}

TEST_CASE("check_starter", "[pyramidal]") {
  CHECK(check_starter(fixtures::worked_g(), 8));
  const StructuredGraph cut = fixtures::worked_g();
  const auto gone = make_graph(16, {{fin(0), fin(5), fin(1), fin(7)}});
  CHECK_FALSE(check_starter(graph_minus(cut, gone), 8));
  CHECK_FALSE(check_starter(translate(fixtures::worked_g(), 1), 7));
  // Not invariant under +a.
  CHECK_FALSE(check_starter(make_graph(16, {{fin(0), fin(1), fin(2)}}), 8));
}

TEST_CASE("printed matching witness", "[pyramidal]") {
  const std::vector<std::int64_t> l = {3, 4};
  for (bool even : {false, true}) {
    const auto orbit = fixtures::worked_orbit(even);
    CHECK(check_matching_property(orbit, fixtures::worked_witness(), l));
  }
  // {1,5},{5,6} is not a matching.
  auto bad = fixtures::worked_witness();
  bad.matching = make_edges(16, {Edge(kInf, fin(2)), Edge(fin(1), fin(5)), Edge(fin(5), fin(6))});
  CHECK_FALSE(check_matching_property(fixtures::worked_orbit(false), bad, l));
  // Same graph twice is not allowed.
  auto same = fixtures::worked_witness();
  same.gp_index = same.g_index;
  CHECK_FALSE(check_matching_property(fixtures::worked_orbit(false), same, l));
}

TEST_CASE("constructed witnesses pass", "[pyramidal]") {
  for (const auto& t : {fixtures::worked_seed(), make_labeling({4, 0, 6, 1}, {{2, 3, 5}})}) {
    for (int eps : {1, 2}) {
      const auto p = double_labeling(t, eps);
      CHECK(check_matching_property(p.orbit, p.witness, p.lengths));
      CHECK(p.witness.g_index == static_cast<std::size_t>(p.a - 1));
      CHECK(p.witness.gp_index == 0);
    }
  }
}

TEST_CASE("the [3|3] labeling doubles to OP(9, 3, 3) on K15", "[pyramidal]") {
  const auto p = double_labeling(make_labeling({4, 0, 6, 1}, {{2, 3, 5}}), 1);
  CHECK(p.a == 7);
  CHECK(cycle_structure(p.starter).cycles == std::vector<std::int64_t>{3, 3, 9});
  const Report r = verify_decomposition(p.orbit);
  CHECK(r.valid_odd);
  CHECK(r.order == 15);
  CHECK(all_factors_have(r, {3, 3, 9}));
}

TEST_CASE("doubling rejects bad input", "[pyramidal]") {
  auto t = fixtures::worked_seed();
  CHECK_THROWS_AS(double_labeling(t, 3), Error);
  t.graph.add_edge(fin(2), fin(8));
  CHECK_THROWS_AS(double_labeling(t, 1), Error);
}
