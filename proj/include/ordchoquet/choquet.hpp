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

#include "ordchoquet/rational.hpp"
#include "ordchoquet/set_system.hpp"
#include "ordchoquet/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordchoquet {

enum class Method { Lp, Monge, Classical, MobiusForm };

std::string to_string(Method m);

struct IntegralResult {
  Rational value;
  /// Optimal packing vector y when the value came from a single LP solve.
  std::optional<std::vector<Rational>> dual_y;
  Method method = Method::Lp;
};

/// Choquet integral on an ordered system. Belief functions are integrated by
/// the covering LP; any other valuation through v = v+ - v-. Requires f >= 0
/// (NegativeWeighting otherwise; see integral_shifted).
IntegralResult integral(const SetSystem& sys, const Valuation& v, const Weighting& f);

struct ShiftedIntegral {
  Rational value;
  Rational lambda;
  /// Recomputing with lambda + 1 gave a different value.
  bool shift_dependent = false;
};

/// Integral of an arbitrary weighting via the shift f + lambda 1_N >= 0 with
/// lambda = max(0, -min f):  int(f + lambda 1_N) - lambda int(1_N).
ShiftedIntegral integral_shifted(const SetSystem& sys, const Valuation& v, const Weighting& f);

/// int(f + lambda 1_N) dv == int f dv + lambda int 1_N dv, exactly.
bool check_strong(const SetSystem& sys, const Valuation& v, const Weighting& f, const Rational& lambda);

/// Level-set form on 2^N: sort the distinct values of f descending and sum
/// (a_k - a_{k+1}) vhat({f >= a_k}), with a value 0 past the last level.
Rational classical_integral(const SetFunction& vhat, const Weighting& f);

/// The same telescoping sum evaluated with v on F itself. Returns nullopt when
/// some level set {f >= a}, a > 0, is not a member.
std::optional<Rational> level_set_integral(const SetSystem& sys, const Valuation& v, const Weighting& f);

/// sum_F beta_F min_{i in F} f_i. Containment-ordered systems only.
Rational mobius_form_integral(const SetSystem& sys, const Coefficients& beta, const Weighting& f);

/// vhat(S) = sum_F beta_F [F subset of S] on a containment-ordered system. On
/// weakly union-closed systems the result is cross-checked against the sum of
/// v over the maximal members inside S.
SetFunction extension_hat(const SetSystem& sys, const Valuation& v);

/// Atoms of the algebra F + {empty}, after checking that P is a probability
/// measure on it. Throws NotAnAlgebra / NotAProbability.
std::vector<ElementSet> probability_atoms(const SetSystem& sys, const Valuation& p);

/// sup { sum_S lambda_S P(S) : lambda >= 0, sum_S lambda_S 1_S <= f } over the algebra.
Rational lehrer_integral(const SetSystem& sys, const Valuation& p, const Weighting& f);

/// v_A(S) = max { P(A) : A in the algebra, A subset of S }.
SetFunction induced_capacity(const SetSystem& sys, const Valuation& p);

/// No i, j with f_i > f_j and g_i < g_j.
bool comonotonic(const Weighting& f, const Weighting& g);

}  // namespace ordchoquet
