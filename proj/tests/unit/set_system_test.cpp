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

#include "ordchoquet/error.hpp"
#include "ordchoquet/random.hpp"

#include <doctest.h>

using namespace testing;

namespace {

ErrorCode build_error(std::size_t n, const std::vector<std::string>& family, OrderSpec order) {
  try {
    sys(n, family, order);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("build succeeded");
  return ErrorCode::Internal;
}

/// Larger members first: i above j implies i <= j.
void check_indexing(const SetSystem& s) {
  for (std::size_t i = 0; i < s.m(); ++i) {
    CHECK(s.precedes(i, i));
    for (std::size_t j = 0; j < s.m(); ++j)
      if (i != j && s.precedes(j, i)) CHECK(i < j);
  }
}

}  // namespace

TEST_CASE("single member") {
  auto s = sys(3, {"123"}, OrderSpec::trivial());
  CHECK(s.m() == 1);
  CHECK(s.mobius()(0, 0) == 1);
  CHECK(s.incidence()(0, 0) == 1);
}

TEST_CASE("boolean n=2 puts the top first") {
  auto s = boolean(2);
  REQUIRE(s.m() == 3);
  CHECK(s.set(0) == s.ground().parse("12"));
  CHECK(s.is_containment_ordered());
  check_indexing(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(s.incidence()(i, j) == 0);
}

TEST_CASE("lattice fixture builds with a non-inclusion order") {
  auto s = lattice_fixture();
  CHECK(s.m() == 8);
  CHECK(s.n() == 6);
  CHECK_FALSE(s.is_containment_ordered());
  CHECK(s.order_kind() == OrderSpec::Kind::Explicit);
  check_indexing(s);
  // 6 precedes 12 through the chain 6 < 45 < 15 < 12
  CHECK(s.precedes(at(s, "6"), at(s, "12")));
  CHECK_FALSE(s.precedes(at(s, "45"), at(s, "16")));
  auto report = classify(s);
  CHECK(report.intersection_system.holds);
  CHECK(report.consecutive.holds);
  CHECK_FALSE(report.containment_ordered.holds);
}

TEST_CASE("mobius matrix of a chain and of the trivial order") {
  auto chain = sys(2, {"12", "1"});
  CHECK(chain.mobius()(0, 0) == 1);
  CHECK(chain.mobius()(1, 0) == -1);
  CHECK(chain.mobius()(0, 1) == 0);
  CHECK(chain.mobius()(1, 1) == 1);

  auto flat = sys(3, {"12", "1", "3", "23"}, OrderSpec::trivial());
  CHECK(flat.mobius() == Matrix<Integer>::identity(4));
  CHECK(flat.incidence() == Matrix<int>::identity(4));
}

TEST_CASE("boolean n=3 mobius is (-1)^|G-F|") {
  auto s = boolean(3);
  for (std::size_t i = 0; i < s.m(); ++i)
    for (std::size_t j = 0; j < s.m(); ++j) {
      // mu(F_j, F_i) is nonzero only for F_j inside F_i
      if (s.set(j).subset_of(s.set(i))) {
        const auto diff = (s.set(i) - s.set(j)).size();
        CHECK(s.mobius()(j, i) == (diff % 2 == 0 ? 1 : -1));
      } else {
        CHECK(s.mobius()(j, i) == 0);
      }
    }
}

TEST_CASE("mobius matrix inverts the incidence matrix") {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    auto s = t % 2 ? random_poset_system(rng, 5, 14) : random_containment_system(rng, 5, 14);
    auto inv = oracle::inverse(oracle::incidence(s));
    for (std::size_t i = 0; i < s.m(); ++i)
      for (std::size_t j = 0; j < s.m(); ++j) CHECK(Rational(s.mobius()(i, j)) == inv[i][j]);
  }
}

TEST_CASE("build errors") {
  CHECK(build_error(2, {"12", "1", "1"}, OrderSpec::containment()) == ErrorCode::DuplicateSet);
  CHECK(build_error(3, {"12", "1"}, OrderSpec::containment()) == ErrorCode::CoverViolation);
  CHECK(build_error(2, {"12", "1", "2"}, OrderSpec::explicit_pairs({{1, 2}, {2, 1}})) == ErrorCode::CycleInOrder);
  CHECK(build_error(2, {"12", "1", "2"}, OrderSpec::explicit_pairs({{0, 1}, {1, 2}, {2, 0}})) ==
        ErrorCode::CycleInOrder);
  CHECK(build_error(2, {"12", "1"}, OrderSpec{OrderSpec::Kind::Containment, {{0, 1}}}) ==
        ErrorCode::OrderContradictsContainment);
  CHECK(build_error(2, {"12", "1"}, OrderSpec::explicit_pairs({{0, 5}})) == ErrorCode::IndexOutOfRange);

  GroundSet g = GroundSet::numbered(2);
  try {
    SetSystem::build(g, {g.parse("12"), ElementSet()}, OrderSpec::trivial());
    FAIL("empty member accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySetInFamily);
  }
}

TEST_CASE("indexing ignores input order") {
  auto a = sys(3, {"1", "12", "123", "3", "23"});
  auto b = sys(3, {"23", "123", "3", "1", "12"});
  CHECK(a.sets() == b.sets());
  CHECK(a.incidence() == b.incidence());
  CHECK(a.set(a.index_of_input(0)) == a.ground().parse("1"));
  for (std::size_t i = 0; i < a.m(); ++i) CHECK(a.index_of_input(a.input_of_index(i)) == i);
}

TEST_CASE("classify the boolean lattice") {
  auto r = classify(boolean(3));
  CHECK(r.containment_ordered.holds);
  CHECK(r.weakly_union_closed.holds);
  CHECK(r.union_closed.holds);
  CHECK(r.algebra.holds);
  CHECK(r.consecutive.holds);
  CHECK(r.intersection_system.holds);
  CHECK_FALSE(r.trivially_ordered.holds);
  REQUIRE(r.atoms.size() == 3);
  for (auto a : r.atoms) CHECK(a.size() == 1);
}

TEST_CASE("12 and 23 without 123 is not weakly union-closed") {
  auto s = sys(3, {"12", "23"});
  auto r = check_weakly_union_closed(s);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.size() == 2);
  CHECK(((s.set(r.witness[0]) == s.ground().parse("12") && s.set(r.witness[1]) == s.ground().parse("23")) ||
         (s.set(r.witness[0]) == s.ground().parse("23") && s.set(r.witness[1]) == s.ground().parse("12"))));
  CHECK_FALSE(s.is_weakly_union_closed());
}

TEST_CASE("predicates against brute force") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    SetSystem s = t % 3 == 0   ? random_containment_system(rng, 5, 12)
                  : t % 3 == 1 ? random_weakly_union_closed(rng, 5, 12)
                               : random_poset_system(rng, 5, 12);
    auto r = classify(s);
    if (s.is_containment_ordered()) CHECK(r.weakly_union_closed.holds == oracle::weakly_union_closed(s));
    CHECK(r.consecutive.holds == oracle::consecutive(s));
    if (r.intersection_system.holds) CHECK(r.consecutive.holds);
    if (r.algebra.holds) CHECK(r.union_closed.holds);
    if (r.union_closed.holds && s.is_containment_ordered()) CHECK(r.weakly_union_closed.holds);
  }
}

TEST_CASE("restrict") {
  auto s = lattice_fixture();
  CHECK(restrict_to(s, s.all()).size() == s.m());
  CHECK(restrict_to(s, ElementSet()).empty());
  std::vector<ElementSet> got;
  for (auto i : restrict_to(s, s.ground().parse("126"))) got.push_back(s.set(i));
  std::vector<ElementSet> want;
  for (const char* x : {"12", "126", "16", "6"}) want.push_back(s.ground().parse(x));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("maximal members") {
  auto s = restricted_game_fixture();
  auto max = maximal_in(s, s.ground().parse("1235"));
  REQUIRE(max.size() == 2);
  CHECK(s.set(max[0]) == s.ground().parse("12"));
  CHECK(s.set(max[1]) == s.ground().parse("35"));
  auto top = maximal_in(s, s.all());
  REQUIRE(top.size() == 1);
  CHECK(s.set(top[0]) == s.all());
}

TEST_CASE("maximal members of weakly union-closed families are disjoint") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    auto s = random_weakly_union_closed(rng, 6, 30);
    for (ElementSet::Bits x = 0; x < (ElementSet::Bits{1} << s.n()); ++x) {
      auto max = maximal_in(s, ElementSet(x));
      for (std::size_t a = 0; a < max.size(); ++a)
        for (std::size_t b = a + 1; b < max.size(); ++b) CHECK_FALSE(s.set(max[a]).intersects(s.set(max[b])));
    }
  }
}

TEST_CASE("relabel keeps the structure") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto s = random_intersection_system(rng, 5, 12);
    auto r = relabel(s, rng.permutation(s.n()));
    CHECK(r.m() == s.m());
    auto a = classify(s), b = classify(r);
    CHECK(a.intersection_system.holds == b.intersection_system.holds);
    CHECK(a.consecutive.holds == b.consecutive.holds);
    CHECK(a.weakly_union_closed.holds == b.weakly_union_closed.holds);
  }
}

TEST_CASE("ground set parsing and formatting") {
  auto g = GroundSet::numbered(3);
  CHECK(g.parse("{1,3}") == g.parse("13"));
  CHECK(g.parse("1,3") == ElementSet::of({0, 2}));
  CHECK(g.format(ElementSet::of({0, 2})) == "13");
  GroundSet named({"a", "bb"});
  CHECK(named.format(named.all()) == "{a,bb}");
  CHECK_THROWS_AS(g.parse("4"), Error);
  CHECK_THROWS_AS(GroundSet({"x", "x"}), Error);
}
