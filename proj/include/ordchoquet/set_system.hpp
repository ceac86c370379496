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

#pragma once

#include "ordchoquet/matrix.hpp"
#include "ordchoquet/rational.hpp"

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordchoquet {

/// Subset of the ground set, stored as a bitmask over element positions.
/// Ground sets are therefore limited to 64 elements.
class ElementSet {
public:
  using Bits = std::uint64_t;
  static constexpr std::size_t max_elements = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<std::size_t> elements) {
    ElementSet s;
    for (auto e : elements) s = s.with(e);
    return s;
  }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static constexpr ElementSet singleton(std::size_t e) { return ElementSet(Bits{1} << e); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr ElementSet with(std::size_t e) const { return ElementSet(bits_ | (Bits{1} << e)); }
  constexpr ElementSet without(std::size_t e) const { return ElementSet(bits_ & ~(Bits{1} << e)); }

  std::vector<std::size_t> elements() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

private:
  Bits bits_ = 0;
};

/// Lexicographic comparison of the sorted element lists ({1,2} < {1,3} < {2}).
bool lex_less(ElementSet a, ElementSet b);

class GroundSet {
public:
  GroundSet() = default;
  /// Labels must be distinct and non-empty; their order fixes the element order.
  explicit GroundSet(std::vector<std::string> labels);
  /// Elements labelled "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  ElementSet all() const { return ElementSet::full(labels_.size()); }

  /// Parses "{1,2,3}", "1,2,3" or, when every label is one character, "123".
  ElementSet parse(const std::string& text) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  /// "123" when every label is one character, otherwise "{a,b,c}".
  std::string format(ElementSet s) const;

private:
  std::vector<std::string> labels_;
};

struct OrderSpec {
  enum class Kind { Trivial, Containment, Explicit };
  using Pair = std::pair<std::size_t, std::size_t>;

  Kind kind = Kind::Trivial;
  /// Pairs (i, j) meaning F_i precedes F_j, in input indexing. For Kind::Containment
  /// they are optional and each one must agree with set inclusion.
  std::vector<Pair> pairs;

  static OrderSpec trivial() { return {Kind::Trivial, {}}; }
  static OrderSpec containment() { return {Kind::Containment, {}}; }
  static OrderSpec explicit_pairs(std::vector<Pair> pairs) { return {Kind::Explicit, std::move(pairs)}; }
};

/**
 * A finite ordered set system over a ground set.
 *
 * Members are indexed along a linear extension in which larger members come
 * first: F_i above F_j implies i <= j. With this indexing the incidence matrix
 * Z (z_ij = 1 iff F_i precedes F_j) is unit lower triangular, and its inverse,
 * the Moebius matrix, has integer entries. Ties between incomparable members
 * are broken by decreasing cardinality, then lexicographic element order, so
 * the indexing is a deterministic function of the family and the order.
 *
 * Instances are immutable after build().
 */
class SetSystem {
public:
  static SetSystem build(GroundSet ground, const std::vector<ElementSet>& family, const OrderSpec& order);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  std::size_t m() const { return sets_.size(); }
  ElementSet all() const { return ground_.all(); }

  ElementSet set(std::size_t i) const { return sets_.at(i); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::optional<std::size_t> find(ElementSet s) const;

  /// F_i precedes-or-equals F_j.
  bool precedes(std::size_t i, std::size_t j) const { return leq_(i, j) != 0; }
  const Matrix<int>& incidence() const { return leq_; }
  const Matrix<Integer>& mobius() const { return mobius_; }

  std::size_t index_of_input(std::size_t input_index) const { return from_input_.at(input_index); }
  std::size_t input_of_index(std::size_t index) const { return to_input_.at(index); }

  OrderSpec::Kind order_kind() const { return kind_; }
  /// The order coincides with set inclusion on the family.
  bool is_containment_ordered() const { return containment_ordered_; }
  bool is_weakly_union_closed() const { return weakly_union_closed_; }

private:
  SetSystem() = default;

  GroundSet ground_;
  std::vector<ElementSet> sets_;
  Matrix<int> leq_;
  Matrix<Integer> mobius_;
  std::vector<std::size_t> from_input_;
  std::vector<std::size_t> to_input_;
  OrderSpec::Kind kind_ = OrderSpec::Kind::Trivial;
  bool containment_ordered_ = false;
  bool weakly_union_closed_ = false;
};

Matrix<Integer> mobius_matrix(const SetSystem& sys);

/// Outcome of a structural predicate; a failure names the offending members.
struct PredicateResult {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
  static PredicateResult fail(std::vector<std::size_t> witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }
};

struct StructureReport {
  PredicateResult trivially_ordered;
  PredicateResult containment_ordered;
  PredicateResult weakly_union_closed;
  PredicateResult union_closed;
  PredicateResult algebra;
  std::vector<ElementSet> atoms;  // filled when algebra holds
  PredicateResult consecutive;
  PredicateResult intersection_system;
};

PredicateResult check_weakly_union_closed(const SetSystem& sys);
PredicateResult check_union_closed(const SetSystem& sys);
/// family plus the empty set closed under union and complement; `atoms` receives
/// the minimal members when it is.
PredicateResult check_algebra(const SetSystem& sys, std::vector<ElementSet>* atoms = nullptr);
PredicateResult check_consecutive(const SetSystem& sys);
PredicateResult check_intersection_system(const SetSystem& sys);

StructureReport classify(const SetSystem& sys);

/// Indices of members contained in x, in index order.
std::vector<std::size_t> restrict_to(const SetSystem& sys, ElementSet x);

/// Inclusion-maximal members contained in x. On weakly union-closed systems
/// these are pairwise disjoint; a violation raises Error(Internal).
std::vector<std::size_t> maximal_in(const SetSystem& sys, ElementSet x);

/// Same system with element e renamed to perm[e]; labels follow their elements.
SetSystem relabel(const SetSystem& sys, const std::vector<std::size_t>& perm);

}  // namespace ordchoquet
