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
#include "../oracles.hpp"

#include "ordchoquet/choquet.hpp"
#include "ordchoquet/error.hpp"
#include "ordchoquet/monge.hpp"
#include "ordchoquet/random.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

TEST_CASE("single member") {
  auto s = sys(3, {"123"});
  auto out = monge::run(s, weights({4, 2, 7}));
  REQUIRE(out.chosen.size() == 1);
  CHECK(out.chosen[0] == 0);
  CHECK(out.removed[0] == 1);
  CHECK(out.y[0] == 2);
  CHECK(monge::certify(s, weights({4, 2, 7})).certified);
}

TEST_CASE("greedy output is feasible and removes distinct elements") {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    auto s = t % 3 == 0 ? random_poset_system(rng, 6, 20)
                        : (t % 3 == 1 ? random_containment_system(rng, 6, 20) : random_intersection_system(rng, 6, 20));
    auto f = random_weighting(rng, s.n());
    auto out = monge::run(s, f);
    CHECK(monge::is_feasible(s, f, out));
    CHECK(out.chosen.size() <= s.n());
    std::set<std::size_t> seen(out.removed.begin(), out.removed.end());
    CHECK(seen.size() == out.removed.size());
    // each chosen set must be inside what was left of N at that point
    ElementSet left = s.all();
    for (std::size_t k = 0; k < out.chosen.size(); ++k) {
      CHECK(s.set(out.chosen[k]).subset_of(left));
      CHECK(s.set(out.chosen[k]).contains(out.removed[k]));
      left = left.without(out.removed[k]);
    }
    for (auto set : s.sets()) CHECK_FALSE(set.subset_of(left));
  }
}

TEST_CASE("functional is linear in v") {
  Rng rng(62);
  auto s = random_poset_system(rng, 5, 12);
  auto out = monge::run(s, random_weighting(rng, s.n()));
  CHECK(monge::functional(out, Valuation(s.m())) == 0);
  auto v = random_valuation(rng, s.m()), w = random_valuation(rng, s.m());
  CHECK(monge::functional(out, v + w) == monge::functional(out, v) + monge::functional(out, w));
}

TEST_CASE("weakly union-closed systems: forest, father differences, LP value") {
  Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    auto s = random_weakly_union_closed(rng, 6, 24);
    auto f = random_weighting(rng, s.n());
    auto out = monge::run(s, f);
    auto forest = monge::chosen_forest(s, out);
    CHECK(forest.is_forest);
    CHECK(forest.children_disjoint);
    auto v = random_valuation(rng, s.m());
    const Rational value = monge::functional(out, v);
    CHECK(value == integral(s, v, f).value);
    CHECK(value == monge::father_difference_value(out, forest, f, v));
    CHECK(value == oracle::classical(oracle::extension(s, v), f));
    CHECK(monge::certify(s, f).certified);
  }
}

TEST_CASE("lattice fixture certifies") {
  auto s = lattice_fixture();
  Rng rng(64);
  for (int t = 0; t < 30; ++t) {
    auto f = random_weighting(rng, 6);
    auto cert = monge::certify(s, f);
    CHECK(cert.certified);
    CHECK_FALSE(cert.first_failure);
    CHECK(cert.entries.size() == s.m());
    auto v = random_valuation(rng, s.m());
    CHECK(monge::functional(cert.output, v) == oracle::integral(s, v, f));
  }
}

TEST_CASE("certification can fail off intersection systems") {
  // two incomparable members, the larger one first: greedy takes 123 and
  // never sees 1
  auto s = sys(3, {"123", "1"}, OrderSpec::trivial());
  auto cert = monge::certify(s, weights({1, 2, 2}));
  CHECK_FALSE(cert.certified);
  REQUIRE(cert.first_failure);
  CHECK(s.set(*cert.first_failure) == s.ground().parse("1"));
  const auto& e = cert.entries[*cert.first_failure];
  CHECK(e.monge == 0);
  CHECK(e.lp == 1);
  CHECK_FALSE(e.agrees());
}

TEST_CASE("negative weights are rejected") {
  auto s = boolean(2);
  try {
    monge::run(s, weights({1, -1}));
    FAIL("negative weighting accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeWeighting);
  }
}
