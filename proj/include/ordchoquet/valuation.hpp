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

#include "ordchoquet/error.hpp"
#include "ordchoquet/rational.hpp"
#include "ordchoquet/set_system.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ordchoquet {

/// Exact rational vector with a tag that keeps family-indexed and
/// element-indexed quantities apart.
template <class Tag>
class RationalVector {
public:
  RationalVector() = default;
  explicit RationalVector(std::size_t size) : values_(size, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool is_zero() const {
    for (const auto& x : values_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (const auto& x : values_)
      if (x < 0) return false;
    return true;
  }

  RationalVector& operator+=(const RationalVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  RationalVector& operator-=(const RationalVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  RationalVector& operator*=(const Rational& s) {
    for (auto& x : values_) x *= s;
    return *this;
  }
  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.values_ == b.values_; }

private:
  void check_size(const RationalVector& o) const {
    if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  }

  std::vector<Rational> values_;
};

struct FamilyTag {};
struct CoefficientTag {};
struct GroundTag {};

/// v(F_i) for each member, in system indexing. v(empty set) is implicitly 0.
using Valuation = RationalVector<FamilyTag>;
/// Coordinates of a valuation in the simple-function basis.
using Coefficients = RationalVector<CoefficientTag>;
/// f: N -> Q, indexed by element position.
using Weighting = RationalVector<GroundTag>;

/// Function on all subsets of the ground set, indexed by bitmask.
class SetFunction {
public:
  static constexpr std::size_t max_elements = 24;

  explicit SetFunction(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  Rational& operator[](ElementSet s) { return values_[s.bits()]; }
  const Rational& operator[](ElementSet s) const { return values_[s.bits()]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Isotone with respect to inclusion; on failure `witness` gets (S, T), S inside T, f(S) > f(T).
  bool is_monotone(std::pair<ElementSet, ElementSet>* witness = nullptr) const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
  std::size_t n_;
  std::vector<Rational> values_;
};

Weighting indicator(std::size_t n, ElementSet s);
Rational min_over(const Weighting& f, ElementSet s);

// -- Moebius machinery ------------------------------------------------------

/// beta = v Z^{-1}, so that v = sum_i beta_i zeta^i.
Coefficients mobius_inverse(const SetSystem& sys, const Valuation& v);
/// sum_i beta_i zeta^i = beta Z, for coefficients of any sign.
Valuation combine(const SetSystem& sys, const Coefficients& beta);
/// Cumulative function w Z of a density. Throws NegativeDensity if w has a negative entry.
Valuation cumulative(const SetSystem& sys, const Valuation& density);

/// zeta^i: 1 exactly on the members above F_i (row i of Z).
Valuation simple_function(const SetSystem& sys, std::size_t i);

bool is_belief(const SetSystem& sys, const Valuation& v);

struct BeliefDecomposition {
  Coefficients beta;
  Valuation v_plus;
  Valuation v_minus;
};

/// v = v_plus - v_minus with both parts belief functions, split by the sign of beta.
BeliefDecomposition decompose(const SetSystem& sys, const Valuation& v);

/// Non-negative and isotone along the order.
bool is_capacity(const SetSystem& sys, const Valuation& v);

// -- Supermodularity --------------------------------------------------------

/// Pairs (i, j), i < j, for which some F_k with k <= i meets both F_i and F_j.
std::vector<std::pair<std::size_t, std::size_t>> co_intersecting_pairs(const SetSystem& sys);

/// Ordered supermodularity on a consecutive system: every co-intersecting pair
/// (F, G) admits a meet L and join U in F_0(F | G) with L <= F, G <= U and
/// v(L) + v(U) >= v(F) + v(G). The empty set is a meet candidate with value 0.
/// The witness is the first failing pair. Throws NotConsecutive.
PredicateResult is_supermodular_ordered(const SetSystem& sys, const Valuation& v);

struct BooleanSupermodularity {
  bool holds = true;
  std::optional<std::pair<ElementSet, ElementSet>> witness;
  explicit operator bool() const { return holds; }
};

/// v(S | T) + v(S & T) >= v(S) + v(T) for all S, T. Requires v(empty) = 0.
BooleanSupermodularity is_supermodular_boolean(const SetFunction& vhat);

}  // namespace ordchoquet
