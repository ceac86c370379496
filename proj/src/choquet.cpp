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

#include "ordchoquet/choquet.hpp"

#include "ordchoquet/error.hpp"
#include "ordchoquet/lp.hpp"

#include <algorithm>
#include <functional>

namespace ordchoquet {

std::string to_string(Method m) {
  switch (m) {
    case Method::Lp: return "lp";
    case Method::Monge: return "monge";
    case Method::Classical: return "classical";
    case Method::MobiusForm: return "mobius_form";
  }
  return "unknown";
}

namespace {

void require_nonnegative(const Weighting& f) {
  if (!f.is_nonnegative()) throw Error(ErrorCode::NegativeWeighting, "weighting has a negative entry");
}

void require_containment(const SetSystem& sys) {
  if (!sys.is_containment_ordered()) {
    throw Error(ErrorCode::NotContainmentOrdered, "operation is defined for containment-ordered systems");
  }
}

Weighting shifted(const Weighting& f, const Rational& lambda) {
  Weighting g = f;
  for (std::size_t e = 0; e < g.size(); ++e) g[e] += lambda;
  return g;
}

Rational level_sum(const Weighting& f, const std::function<Rational(ElementSet)>& value_at) {
  std::vector<Rational> levels;
  for (const auto& x : f)
    if (x > 0) levels.push_back(x);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Rational total = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    ElementSet level;
    for (std::size_t e = 0; e < f.size(); ++e)
      if (f[e] >= levels[k]) level = level.with(e);
    const Rational next = (k + 1 < levels.size()) ? levels[k + 1] : Rational(0);
    total += (levels[k] - next) * value_at(level);
  }
  return total;
}

}  // namespace

IntegralResult integral(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  require_nonnegative(f);
  if (is_belief(sys, v)) {
    auto r = lp::solve_core_min(sys, v, f);
    return {r.value, std::move(r.dual_y), Method::Lp};
  }
  auto d = decompose(sys, v);
  auto plus = lp::solve_core_min(sys, d.v_plus, f);
  auto minus = lp::solve_core_min(sys, d.v_minus, f);
  return {plus.value - minus.value, std::nullopt, Method::Lp};
}

ShiftedIntegral integral_shifted(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  if (f.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "weighting length differs from ground set size");
  Rational lambda = 0;
  for (const auto& x : f)
    if (-x > lambda) lambda = -x;

  const Rational unit = integral(sys, v, indicator(sys.n(), sys.all())).value;
  auto evaluate = [&](const Rational& shift) -> Rational { return integral(sys, v, shifted(f, shift)).value - shift * unit; };

  ShiftedIntegral out;
  out.lambda = lambda;
  out.value = evaluate(lambda);
  out.shift_dependent = evaluate(lambda + 1) != out.value;
  return out;
}

bool check_strong(const SetSystem& sys, const Valuation& v, const Weighting& f, const Rational& lambda) {
  require_nonnegative(f);
  if (lambda < 0) throw Error(ErrorCode::InvalidInput, "shift must be non-negative");
  const Rational lhs = integral(sys, v, shifted(f, lambda)).value;
  const Rational rhs = integral(sys, v, f).value + lambda * integral(sys, v, indicator(sys.n(), sys.all())).value;
  return lhs == rhs;
}

Rational classical_integral(const SetFunction& vhat, const Weighting& f) {
  require_nonnegative(f);
  if (f.size() != vhat.n()) throw Error(ErrorCode::DimensionMismatch, "weighting length differs from set function");
  if (vhat[ElementSet{}] != 0) throw Error(ErrorCode::InvalidInput, "set function must vanish on the empty set");
  return level_sum(f, [&](ElementSet s) { return vhat[s]; });
}

std::optional<Rational> level_set_integral(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  require_nonnegative(f);
  bool measurable = true;
  Rational value = level_sum(f, [&](ElementSet s) {
    auto i = sys.find(s);
    if (!i) {
      measurable = false;
      return Rational(0);
    }
    return v[*i];
  });
  if (!measurable) return std::nullopt;
  return value;
}

Rational mobius_form_integral(const SetSystem& sys, const Coefficients& beta, const Weighting& f) {
  require_containment(sys);
  require_nonnegative(f);
  if (beta.size() != sys.m()) throw Error(ErrorCode::DimensionMismatch, "coefficient length differs from family size");
  Rational total = 0;
  for (std::size_t i = 0; i < sys.m(); ++i)
    if (beta[i] != 0) total += beta[i] * min_over(f, sys.set(i));
  return total;
}

SetFunction extension_hat(const SetSystem& sys, const Valuation& v) {
  require_containment(sys);
  const Coefficients beta = mobius_inverse(sys, v);
  SetFunction vhat(sys.n());
  for (std::size_t bits = 0; bits < vhat.size(); ++bits) {
    ElementSet s(bits);
    Rational total = 0;
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (beta[i] != 0 && sys.set(i).subset_of(s)) total += beta[i];
    vhat[s] = total;
  }
  if (sys.is_weakly_union_closed()) {
    for (std::size_t bits = 0; bits < vhat.size(); ++bits) {
      ElementSet s(bits);
      Rational total = 0;
      for (auto i : maximal_in(sys, s)) total += v[i];
      if (total != vhat[s]) {
        throw Error(ErrorCode::Internal, "extension disagrees with the maximal-member sum at " + sys.ground().format(s));
      }
    }
  }
  return vhat;
}

std::vector<ElementSet> probability_atoms(const SetSystem& sys, const Valuation& p) {
  std::vector<ElementSet> atoms;
  if (auto a = check_algebra(sys, &atoms); !a) throw Error(ErrorCode::NotAnAlgebra, a.detail);
  if (p.size() != sys.m()) throw Error(ErrorCode::DimensionMismatch, "measure length differs from family size");
  if (!p.is_nonnegative()) throw Error(ErrorCode::NotAProbability, "negative mass");
  if (p[*sys.find(sys.all())] != 1) throw Error(ErrorCode::NotAProbability, "P(N) != 1");
  for (std::size_t i = 0; i < sys.m(); ++i) {
    Rational mass = 0;
    for (auto b : atoms)
      if (b.subset_of(sys.set(i))) mass += p[*sys.find(b)];
    if (mass != p[i]) {
      throw Error(ErrorCode::NotAProbability, "P is not additive on " + sys.ground().format(sys.set(i)));
    }
  }
  return atoms;
}

Rational lehrer_integral(const SetSystem& sys, const Valuation& p, const Weighting& f) {
  probability_atoms(sys, p);
  require_nonnegative(f);
  // P(empty) = 0, so the empty set never contributes to the supremum.
  return lp::solve_packing_max(sys, p, f).value;
}

SetFunction induced_capacity(const SetSystem& sys, const Valuation& p) {
  probability_atoms(sys, p);
  SetFunction cap(sys.n());
  for (std::size_t bits = 0; bits < cap.size(); ++bits) {
    ElementSet s(bits);
    Rational best = 0;
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.set(i).subset_of(s) && p[i] > best) best = p[i];
    cap[s] = best;
  }
  return cap;
}

bool comonotonic(const Weighting& f, const Weighting& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "weightings of different length");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[i] > f[j] && g[i] < g[j]) return false;
  return true;
}

}  // namespace ordchoquet
