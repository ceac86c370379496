// Copyright 2026 The ordchoquet Authors
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

#include "../helpers.hpp"

#include "ordchoquet/error.hpp"
#include "ordchoquet/json_io.hpp"
#include "ordchoquet/random.hpp"

#include <doctest.h>

using namespace testing;
using io::json;

TEST_CASE("system round trip keeps the indexing") {
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    auto s = t % 2 ? random_poset_system(rng, 5, 14) : random_intersection_system(rng, 5, 14);
    auto back = io::system_from_json(io::system_to_json(s));
    CHECK(back.sets() == s.sets());
    CHECK(back.incidence() == s.incidence());
    for (std::size_t i = 0; i < s.m(); ++i) CHECK(back.index_of_input(i) == i);

    auto v = random_valuation(rng, s.m());
    CHECK(io::valuation_from_json(io::valuation_to_json(v), back) == v);
    auto f = random_weighting(rng, s.n());
    CHECK(io::weighting_from_json(io::weighting_to_json(f, s.ground()), s.ground()) == f);
  }
}

TEST_CASE("system parsing") {
  auto j = json::parse(R"({"ground": ["a", "b", 3], "family": [["a"], ["a", "b", 3], ["b", 3]],
                           "order": {"pairs": [[0, 1]]}})");
  auto s = io::system_from_json(j);
  CHECK(s.n() == 3);
  CHECK(s.ground().label(2) == "3");
  CHECK(s.precedes(s.index_of_input(0), s.index_of_input(1)));
  CHECK_FALSE(s.precedes(s.index_of_input(2), s.index_of_input(1)));

  j["order"] = {{"containment", true}, {"pairs", {{0, 1}}}};
  auto c = io::system_from_json(j);
  CHECK(c.precedes(c.index_of_input(2), c.index_of_input(1)));

  j["order"] = "bogus";
  CHECK_THROWS_AS(io::system_from_json(j), Error);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"ground": [1]})")), Error);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"ground": [1], "family": [[2]]})")), Error);
}

TEST_CASE("valuation and weighting parsing") {
  auto s = sys(2, {"1", "12", "2"});
  auto v = io::valuation_from_json(json::parse(R"({"values": {"1": "3/4", "0": 2}})"), s);
  CHECK(v[at(s, "12")] == Rational(3, 4));
  CHECK(v[at(s, "1")] == 2);
  CHECK(v[at(s, "2")] == 0);

  auto arr = io::valuation_from_json(json::parse(R"({"values": ["0.25", "-1", 0]})"), s);
  CHECK(arr[at(s, "1")] == Rational(1, 4));
  CHECK(arr[at(s, "12")] == -1);

  CHECK_THROWS_AS(io::valuation_from_json(json::parse(R"({"values": [1, 2]})"), s), Error);
  CHECK_THROWS_AS(io::valuation_from_json(json::parse(R"({"values": {"7": 1}})"), s), Error);
  CHECK_THROWS_AS(io::valuation_from_json(json::parse(R"({"values": {"x": 1}})"), s), Error);
  CHECK_THROWS_AS(io::valuation_from_json(json::parse(R"({"values": [0.5, 1, 1]})"), s), Error);

  auto f = io::weighting_from_json(json::parse(R"({"values": {"2": "1/3"}})"), s.ground());
  CHECK(f[0] == 0);
  CHECK(f[1] == Rational(1, 3));
  CHECK_THROWS_AS(io::weighting_from_json(json::parse(R"({"values": {"9": 1}})"), s.ground()), Error);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("17") == 17);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}
