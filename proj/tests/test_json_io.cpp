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
using namespace oberwolfach::json_io;

TEST_CASE("decomposition round trip", "[json]") {
  for (bool even : {false, true}) {
    const auto d = fixtures::worked_orbit(even);
    const json j = decomposition_to_json(d);
    CHECK(j.at("regime") == (even ? "even" : "odd"));
    const auto back = decomposition_from_json(json::parse(j.dump()));
    REQUIRE(back.factors.size() == d.factors.size());
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      CHECK(back.factors[i].same_edges(with_modulus(d.factors[i], 0)));
    }
    CHECK(verify_decomposition(back).valid());
  }
}

TEST_CASE("canonical cycle form", "[json]") {
  const json j = graph_to_json(fixtures::worked_g());
  CHECK(j.at("cycles").at(0) == json::parse(R"(["inf1", 2, 10])"));
  const json h = graph_to_json(fixtures::worked_halving());
  CHECK(h.at("paths") == json::parse(R"([["inf1", 3]])"));
}

TEST_CASE("parse errors", "[json]") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      (void)decomposition_from_json(json::parse(text));
      FAIL("expected ParseError for " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  };
  expect_parse_error(R"({"factors": []})");
  expect_parse_error(R"({"order": 5, "regime": "even", "factors": []})");
  expect_parse_error(R"({"order": 5, "factors": [{"cycles": [["inf3", 1, 2]]}]})");
  expect_parse_error(R"({"order": 5, "factors": [{"cycles": [[1.5, 1, 2]]}]})");
}

TEST_CASE("pyramidal round trip re-derives the orbit", "[json]") {
  const auto p = double_labeling(fixtures::worked_seed(), 2);
  const json j = pyramidal_to_json(p);
  const auto back = pyramidal_from_json(json::parse(j.dump()));
  CHECK(back.starter.same_edges(p.starter));
  CHECK(check_matching_property(back.orbit, back.witness, back.lengths));

  json tampered = j;
  tampered["factors"][0]["cycles"][1] = json::parse("[3, 4, 6]");
  CHECK_THROWS_AS(pyramidal_from_json(tampered), Error);
}

TEST_CASE("one-two decomposition round trip", "[json]") {
  const auto p = double_labeling(fixtures::worked_seed(), 1);
  const auto d = redistribute(decompose_solution(p), p.witness);
  const auto back = one_two_from_json(json::parse(one_two_to_json(d).dump()));
  CHECK(back.parts.size() == d.parts.size());
  CHECK(back.lengths == d.lengths);
  const auto out = extend(back);
  CHECK(verify_extension(back, out).valid());
}

TEST_CASE("graceful result JSON", "[json]") {
  const ZillionShape shape{3, {3}};
  const auto r = search_graceful(shape);
  const json j = search_result_to_json(shape, r);
  CHECK(j.at("status") == "found");
  CHECK(j.at("a") == 6);
  const auto t = labeling_from_json(j);
  CHECK(verify_graceful(t));
  const json none = search_result_to_json({1, {3}}, search_graceful({1, {3}}));
  CHECK(none.at("status") == "exhausted");
  CHECK_FALSE(none.contains("path"));
}

TEST_CASE("certificate JSON carries every stage", "[json]") {
  SolveRequest req;
  req.y = 25;
  req.lengths = {3, 4};
  req.allow_below_bound = true;
  const json c = certificate_to_json(solve(req));
  for (const char* key : {"request", "bounds", "split", "labeling", "pyramidal", "parts", "solution", "report"}) {
    CHECK(c.contains(key));
  }
  CHECK(c.at("bounds").at("y0") == "672");
  CHECK(c.at("report").at("valid") == true);
  CHECK(verify_decomposition(decomposition_from_json(c.at("solution"))).valid_even);
}
