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
#include "support/oracles.hpp"

using namespace oberwolfach;

TEST_CASE("verify_graceful on known labelings", "[graceful]") {
  CHECK(verify_graceful(fixtures::worked_seed()));
  CHECK(verify_graceful(make_labeling({4, 0, 6, 1}, {{2, 3, 5}})));
  // (0,5,2,7): vertex 2 twice and the difference multiset is wrong.
  GracefulLabeling bad = fixtures::worked_seed();
  bad.graph = StructuredGraph();
  bad.graph.add_vertex(fin(2));
  bad.graph.add_cycle({fin(3), fin(6), fin(4)});
  bad.graph.add_cycle({fin(0), fin(5), fin(2), fin(7)});
  CHECK_FALSE(verify_graceful(bad));
}

TEST_CASE("exhaustive search settles the small triangle shapes", "[graceful]") {
  CHECK(search_graceful({1, {3}}).status == SearchStatus::Exhausted);
  CHECK(search_graceful({2, {3}}).status == SearchStatus::Exhausted);
  const auto r = search_graceful({3, {3}});
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(verify_graceful(*r.labeling));
  const auto s = search_graceful({0, {3, 4}});
  REQUIRE(s.labeling);
  CHECK(verify_graceful(*s.labeling));
}

TEST_CASE("search agrees with brute force for every shape with a <= 8", "[graceful][oracle]") {
  // Every multiset L of lengths >= 3 and k >= 0 with k + sum L <= 8.
  std::vector<std::vector<int>> lists = {{3}, {4}, {5}, {6}, {7}, {8}, {3, 3}, {3, 4}, {3, 5}, {4, 4}};
  for (const auto& l : lists) {
    const int sum = std::accumulate(l.begin(), l.end(), 0);
    for (int k = 0; k + sum <= 8; ++k) {
      const bool exists = oracle::count_graceful(k, l) > 0;
      ZillionShape shape{k, {l.begin(), l.end()}};
      const auto r = search_graceful(shape);
      INFO("[" << k << " | " << l.size() << " cycles, sum " << sum << "]");
      CHECK(r.status == (exists ? SearchStatus::Found : SearchStatus::Exhausted));
      if (r.labeling) CHECK(verify_graceful(*r.labeling));
    }
  }
}

TEST_CASE("a zero budget reports budget exhaustion", "[graceful]") {
  GracefulSearchOptions opt;
  opt.budget = 0;
  CHECK(search_graceful({40, {3, 4}}, opt).status == SearchStatus::BudgetExceeded);
}

TEST_CASE("no path end at an extreme label", "[graceful]") {
  // Difference a needs the edge {0, a}, so 0 and a are never path ends.
  for (std::int64_t k = 0; k <= 6; ++k) {
    const auto t = search_graceful({k, {3, 4}});
    if (!t.labeling) continue;
    const auto [p, q] = t.labeling->path_endpoints;
    const std::int64_t a = t.labeling->shape.top();
    CHECK(t.labeling->graph.has_edge(Edge(fin(0), fin(a))));
    for (std::int64_t v : {p, q}) CHECK((v != 0 && v != a));
  }
}

TEST_CASE("long paths by restart search", "[graceful]") {
  for (std::int64_t k : {20, 57, 161, 162, 325}) {
    const auto r = search_graceful({k, {3, 4}});
    INFO("k = " << k);
    REQUIRE(r.labeling);
    CHECK(verify_graceful(*r.labeling));
  }
}

TEST_CASE("complement maps labelings to labelings", "[graceful]") {
  const auto t = make_labeling({4, 0, 6, 1}, {{2, 3, 5}});
  CHECK(verify_graceful(complement(t)));
}

TEST_CASE("invalid shapes", "[graceful]") {
  CHECK_THROWS_AS(ZillionShape({-1, {3}}).validate(), Error);
  CHECK_THROWS_AS(ZillionShape({1, {2}}).validate(), Error);
}
