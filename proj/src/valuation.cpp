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

#include "ordchoquet/valuation.hpp"

#include "ordchoquet/error.hpp"

#include <string>

namespace ordchoquet {

SetFunction::SetFunction(std::size_t n) : n_(n) {
  if (n > max_elements) {
    throw Error(ErrorCode::InvalidInput, "set functions are limited to " + std::to_string(max_elements) + " elements");
  }
  values_.assign(std::size_t{1} << n, Rational(0));
}

bool SetFunction::is_monotone(std::pair<ElementSet, ElementSet>* witness) const {
  // Checking single-element extensions suffices.
  for (std::size_t bits = 0; bits < values_.size(); ++bits) {
    ElementSet s(bits);
    for (std::size_t e = 0; e < n_; ++e) {
      if (s.contains(e)) continue;
      ElementSet t = s.with(e);
      if (values_[s.bits()] > values_[t.bits()]) {
        if (witness) *witness = {s, t};
        return false;
      }
    }
  }
  return true;
}

Weighting indicator(std::size_t n, ElementSet s) {
  Weighting f(n);
  for (auto e : s.elements()) {
    if (e >= n) throw Error(ErrorCode::IndexOutOfRange, "element outside the ground set");
    f[e] = 1;
  }
  return f;
}

Rational min_over(const Weighting& f, ElementSet s) {
  auto elems = s.elements();
  if (elems.empty()) throw Error(ErrorCode::InvalidInput, "minimum over the empty set");
  Rational best = f[elems.front()];
  for (auto e : elems)
    if (f[e] < best) best = f[e];
  return best;
}

namespace {

void expect_family_size(const SetSystem& sys, std::size_t size) {
  if (size != sys.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(size) + " for a family of " + std::to_string(sys.m()) + " members");
  }
}

}  // namespace

Coefficients mobius_inverse(const SetSystem& sys, const Valuation& v) {
  expect_family_size(sys, v.size());
  const auto& mu = sys.mobius();
  const std::size_t m = sys.m();
  Coefficients beta(m);
  // beta_j = sum_i v_i mu_ij; mu is lower triangular.
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = j; i < m; ++i)
      if (mu(i, j) != 0) beta[j] += v[i] * Rational(mu(i, j));
  return beta;
}

Valuation combine(const SetSystem& sys, const Coefficients& beta) {
  expect_family_size(sys, beta.size());
  const std::size_t m = sys.m();
  Valuation v(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = j; i < m; ++i)
      if (sys.precedes(i, j)) v[j] += beta[i];
  return v;
}

Valuation cumulative(const SetSystem& sys, const Valuation& density) {
  expect_family_size(sys, density.size());
  for (std::size_t i = 0; i < density.size(); ++i)
    if (density[i] < 0) throw Error(ErrorCode::NegativeDensity, "density is negative at member " + std::to_string(i));
  return combine(sys, Coefficients(density.values()));
}

Valuation simple_function(const SetSystem& sys, std::size_t i) {
  if (i >= sys.m()) throw Error(ErrorCode::IndexOutOfRange, "no member with index " + std::to_string(i));
  Valuation z(sys.m());
  for (std::size_t j = 0; j < sys.m(); ++j)
    if (sys.precedes(i, j)) z[j] = 1;
  return z;
}

bool is_belief(const SetSystem& sys, const Valuation& v) { return mobius_inverse(sys, v).is_nonnegative(); }

BeliefDecomposition decompose(const SetSystem& sys, const Valuation& v) {
  BeliefDecomposition d{mobius_inverse(sys, v), Valuation(sys.m()), Valuation(sys.m())};
  Coefficients pos(sys.m()), neg(sys.m());
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (d.beta[i] > 0) pos[i] = d.beta[i];
    if (d.beta[i] < 0) neg[i] = -d.beta[i];
  }
  d.v_plus = combine(sys, pos);
  d.v_minus = combine(sys, neg);
  return d;
}

bool is_capacity(const SetSystem& sys, const Valuation& v) {
  expect_family_size(sys, v.size());
  if (!v.is_nonnegative()) return false;
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.m(); ++j)
      if (sys.precedes(i, j) && v[i] > v[j]) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> co_intersecting_pairs(const SetSystem& sys) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = i + 1; j < sys.m(); ++j)
      for (std::size_t k = 0; k <= i; ++k)
        if (sys.set(k).intersects(sys.set(i)) && sys.set(k).intersects(sys.set(j))) {
          out.emplace_back(i, j);
          break;
        }
  return out;
}

PredicateResult is_supermodular_ordered(const SetSystem& sys, const Valuation& v) {
  expect_family_size(sys, v.size());
  if (auto c = check_consecutive(sys); !c) {
    throw Error(ErrorCode::NotConsecutive, "ordered supermodularity needs a consecutive system");
  }
  for (auto [f, g] : co_intersecting_pairs(sys)) {
    const ElementSet u = sys.set(f) | sys.set(g);
    // Meet and join are chosen independently, so take the best value of each.
    std::optional<Rational> best_join;
    Rational best_meet = 0;  // the empty set
    for (std::size_t k = 0; k < sys.m(); ++k) {
      if (!sys.set(k).subset_of(u)) continue;
      if (sys.precedes(f, k) && sys.precedes(g, k) && (!best_join || v[k] > *best_join)) best_join = v[k];
      if (sys.precedes(k, f) && sys.precedes(k, g) && v[k] > best_meet) best_meet = v[k];
    }
    if (!best_join) return PredicateResult::fail({f, g}, "no join inside the union");
    if (best_meet + *best_join < v[f] + v[g]) {
      return PredicateResult::fail({f, g}, "v(meet) + v(join) < v(F) + v(G) for every admissible meet and join");
    }
  }
  return {};
}

BooleanSupermodularity is_supermodular_boolean(const SetFunction& vhat) {
  if (vhat[ElementSet{}] != 0) throw Error(ErrorCode::InvalidInput, "set function must vanish on the empty set");
  const std::size_t size = vhat.size();
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b) {
      ElementSet s(a), t(b);
      if (s.subset_of(t) || t.subset_of(s)) continue;
      if (vhat[s | t] + vhat[s & t] < vhat[s] + vhat[t]) return {false, std::make_pair(s, t)};
    }
  return {};
}

}  // namespace ordchoquet
