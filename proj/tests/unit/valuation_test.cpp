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
#include "ordchoquet/random.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("simple functions are unit coefficient vectors") {
  auto s = lattice_fixture();
  for (std::size_t k = 0; k < s.m(); ++k) {
    auto z = simple_function(s, k);
    CHECK(z[k] == 1);
    CHECK(z == oracle::zeta(s, k));
    auto beta = mobius_inverse(s, z);
    for (std::size_t i = 0; i < s.m(); ++i) CHECK(beta[i] == (i == k ? 1 : 0));
    CHECK(is_belief(s, z));
    CHECK(is_capacity(s, z));
  }
  CHECK_THROWS_AS(simple_function(s, s.m()), Error);
}

TEST_CASE("trivial order: beta = v and zeta is an indicator") {
  auto s = sys(3, {"12", "3", "23"}, OrderSpec::trivial());
  Valuation v(std::vector<Rational>{Rational(2), Rational(-1, 2), Rational(5)});
  CHECK(mobius_inverse(s, v).values() == v.values());
  for (std::size_t k = 0; k < s.m(); ++k)
    for (std::size_t i = 0; i < s.m(); ++i) CHECK(simple_function(s, k)[i] == (i == k ? 1 : 0));
}

TEST_CASE("containment order: zeta^F(G) = 1 iff G contains F") {
  auto s = boolean(3);
  for (std::size_t k = 0; k < s.m(); ++k) {
    auto z = simple_function(s, k);
    for (std::size_t i = 0; i < s.m(); ++i) CHECK((z[i] == 1) == s.set(k).subset_of(s.set(i)));
  }
}

TEST_CASE("cardinality on the boolean lattice has singleton coefficients") {
  auto s = boolean(3);
  Valuation v(s.m());
  SetFunction card(3);
  for (std::size_t i = 0; i < s.m(); ++i) {
    v[i] = static_cast<long>(s.set(i).size());
    card[s.set(i)] = v[i];
  }
  auto beta = mobius_inverse(s, v);
  auto m = oracle::boolean_mobius(card);
  for (std::size_t i = 0; i < s.m(); ++i) {
    CHECK(beta[i] == m[s.set(i)]);
    CHECK(beta[i] == (s.set(i).size() == 1 ? 1 : 0));
  }
}

TEST_CASE("mobius_inverse matches the oracle inverse") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    auto s = t % 2 ? random_poset_system(rng, 5, 16) : random_containment_system(rng, 5, 16);
    auto v = random_valuation(rng, s.m());
    auto beta = mobius_inverse(s, v);
    CHECK(beta.values() == oracle::beta(s, v));
    CHECK(combine(s, beta) == v);
  }
}

TEST_CASE("cumulative") {
  auto chain = sys(2, {"12", "1"});
  CHECK(cumulative(chain, Valuation(2)).is_zero());
  Valuation w(std::vector<Rational>{Rational(1), Rational(1)});
  auto c = cumulative(chain, w);
  CHECK(c[at(chain, "1")] == 1);
  CHECK(c[at(chain, "12")] == 2);

  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    auto s = random_poset_system(rng, 5, 14);
    auto d = random_density(rng, s.m());
    auto cum = cumulative(s, d);
    CHECK(mobius_inverse(s, cum).values() == d.values());
    CHECK(is_belief(s, cum));
  }

  Valuation bad(std::vector<Rational>{Rational(1), Rational(-1)});
  try {
    cumulative(chain, bad);
    FAIL("negative density accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeDensity);
  }
}

TEST_CASE("belief recognition") {
  auto s = boolean(2);
  CHECK_FALSE(is_belief(s, Rational(-1) * simple_function(s, 0)));
  // probability on an algebra
  auto alg = boolean(3);
  Valuation p(alg.m());
  const Rational mass[3] = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  for (std::size_t i = 0; i < alg.m(); ++i)
    for (auto e : alg.set(i).elements()) p[i] += mass[e];
  CHECK(is_belief(alg, p));
}

TEST_CASE("decompose") {
  auto s = boolean(2);
  auto belief = simple_function(s, 0) + simple_function(s, 2);
  CHECK(decompose(s, belief).v_minus.is_zero());

  auto d = decompose(s, simple_function(s, 0) - simple_function(s, 1));
  CHECK(d.v_plus == simple_function(s, 0));
  CHECK(d.v_minus == simple_function(s, 1));

  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    auto sy = random_poset_system(rng, 5, 14);
    auto v = random_valuation(rng, sy.m());
    auto dec = decompose(sy, v);
    CHECK(dec.v_plus - dec.v_minus == v);
    CHECK(is_belief(sy, dec.v_plus));
    CHECK(is_belief(sy, dec.v_minus));
    auto bp = mobius_inverse(sy, dec.v_plus), bm = mobius_inverse(sy, dec.v_minus);
    for (std::size_t i = 0; i < sy.m(); ++i) CHECK((bp[i] == 0 || bm[i] == 0));
  }
}

TEST_CASE("capacity") {
  auto s = restricted_game_fixture();
  // isotone fails on 12 inside 1234 for the literal game; the completion is fine
  CHECK_FALSE(is_capacity(s, restricted_game_valuation(s)));
  CHECK(is_capacity(s, restricted_game_capacity(s)));
  Valuation v(s.m());
  v[3] = -1;
  CHECK_FALSE(is_capacity(s, v));

  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    auto sy = random_poset_system(rng, 5, 14);
    CHECK(is_capacity(sy, random_capacity(rng, sy)));
  }
}

TEST_CASE("co-intersecting pairs") {
  auto s = lattice_fixture();
  auto pairs = co_intersecting_pairs(s);
  auto has = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end();
  };
  for (std::size_t i = 0; i < s.m(); ++i)
    for (std::size_t j = i + 1; j < s.m(); ++j) {
      bool expected = false;
      for (std::size_t k = 0; k <= i; ++k)
        if (s.set(k).intersects(s.set(i)) && s.set(k).intersects(s.set(j))) expected = true;
      CHECK(has(i, j) == expected);
      if (s.set(i).intersects(s.set(j))) CHECK(has(i, j));
    }
  // 15 and 236 are disjoint but both meet 12, which comes first
  CHECK(has(at(s, "15"), at(s, "236")));

  auto apart = sys(2, {"1", "2"}, OrderSpec::trivial());
  CHECK(co_intersecting_pairs(apart).empty());
}

TEST_CASE("ordered supermodularity") {
  auto s = boolean(2);
  auto v = valuation(s, {{"1", 1}, {"2", 1}});
  auto r = is_supermodular_ordered(s, v);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.size() == 2);
  CHECK((s.set(r.witness[0]) | s.set(r.witness[1])) == s.all());

  Rng rng(6);
  auto b3 = boolean(3);
  for (int t = 0; t < 30; ++t) {
    auto belief = random_belief(rng, b3);
    CHECK(is_supermodular_ordered(b3, belief).holds);
    CHECK(is_supermodular_boolean(oracle::extension(b3, belief)).holds);
  }

  auto loose = sys(3, {"123", "1", "3", "12"}, OrderSpec::trivial());
  CHECK(check_consecutive(loose).holds);
  auto zig = sys(3, {"123", "12", "3", "23"}, OrderSpec::explicit_pairs({{1, 2}, {2, 3}}));
  try {
    is_supermodular_ordered(zig, Valuation(zig.m()));
    FAIL("non-consecutive system accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConsecutive);
  }
}

TEST_CASE("boolean supermodularity") {
  SetFunction additive(3);
  for (std::size_t b = 0; b < 8; ++b) additive[ElementSet(b)] = static_cast<long>(ElementSet(b).size()) * 2;
  CHECK(is_supermodular_boolean(additive).holds);

  SetFunction mx(3);
  const long w[3] = {1, 2, 4};
  for (std::size_t b = 1; b < 8; ++b) {
    long best = 0;
    for (auto e : ElementSet(b).elements()) best = std::max(best, w[e]);
    mx[ElementSet(b)] = best;
  }
  auto r = is_supermodular_boolean(mx);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK_FALSE(oracle::supermodular(mx));

  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    SetFunction f(3);
    for (std::size_t b = 1; b < 8; ++b) f[ElementSet(b)] = rng.rational(-2, 4, 3);
    CHECK(is_supermodular_boolean(f).holds == oracle::supermodular(f));
  }
}
