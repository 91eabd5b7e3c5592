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

#include "oberwolfach/bounds.hpp"

using namespace oberwolfach;

TEST_CASE("bounds for {3,4}", "[bounds]") {
  const auto sb = structure_bounds({4, 3});
  CHECK(sb.b == 7);
  CHECK(sb.b0 == 14);
  CHECK(sb.b1 == 7);
  CHECK(sb.graceful_threshold == 162);
  CHECK(sb.y0 == 672);
}

TEST_CASE("an all-even list needs the rational b1", "[bounds]") {
  const auto sb = structure_bounds({4, 6});
  CHECK(sb.b == 10);
  CHECK(sb.b0 == 36);
  CHECK(sb.b1 == Rational(1, 7));
  CHECK(sb.y0 == 1017);
}

TEST_CASE("an all-odd list has b0 = 0", "[bounds]") {
  const auto sb = structure_bounds({3, 5});
  CHECK(sb.b0 == 0);
  CHECK(sb.b1 == 77);
  CHECK(sb.y0 == 2299);
}

TEST_CASE("invalid lengths", "[bounds]") {
  CHECK_THROWS_AS(structure_bounds({}), Error);
  CHECK_THROWS_AS(structure_bounds({2, 5}), Error);
}

TEST_CASE("pair table", "[bounds]") {
  const std::vector<long> want = {672, 2299, 774, 3089, 876, 3879, 790, 1017, 908, 1215, 1026,
                                  892, 3095, 994, 3885, 1010, 1221, 1128, 1112, 3891, 1230};
  const auto table = pair_table();
  REQUIRE(table.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(table[i].y_bar == want[i]);
  CHECK(table.front().l1 == 3);
  CHECK(table.front().l2 == 4);
  CHECK(table.back().l1 == 8);
  CHECK(table.back().l2 == 9);
}

TEST_CASE("split target", "[bounds]") {
  struct Row {
    std::int64_t y;
    int eps;
    std::int64_t x;
    int delta;
  };
  for (const auto& r : {Row{26, 1, 3, 0}, Row{24, 1, 3, 1}, Row{25, 2, 4, 1}, Row{27, 2, 4, 0}, Row{672, 1, 327, 1}}) {
    const auto s = split_target(r.y, {3, 4});
    INFO("y = " << r.y);
    CHECK(s.epsilon == r.eps);
    CHECK(s.x == r.x);
    CHECK(s.delta == r.delta);
  }
  CHECK(split_target(9, {3}).x == 2);
}

TEST_CASE("split identity holds for every y", "[bounds]") {
  for (const std::vector<std::int64_t>& l : {std::vector<std::int64_t>{3, 4}, {3, 5}, {4, 6}, {8, 9}, {3}, {5, 5, 7}}) {
    std::int64_t b = 0;
    for (auto v : l) b += v;
    for (std::int64_t y = 3; y < 2000; ++y) {
      const auto s = split_target(y, b);
      CHECK(y == 2 * s.x + 3 * b - s.epsilon - 2 * s.delta);
      CHECK(((s.x - s.epsilon) % 2 + 2) % 2 == 0);
    }
  }
}

TEST_CASE("f(y0) = 12 b0 + 14 b1 + 61", "[bounds]") {
  for (const std::vector<std::int64_t>& l : {std::vector<std::int64_t>{3, 4}, {3, 5}, {4, 6}, {8, 9}}) {
    const auto sb = structure_bounds(l);
    const auto f0 = require_integer(Rational(12 * sb.b0) + 14 * sb.b1 + 61, "f(y0)");
    CHECK(BigInt(split_target(static_cast<std::int64_t>(sb.y0), sb.b).x) == f0);
  }
}
