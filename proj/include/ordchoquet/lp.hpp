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

#include <string>
#include <vector>

namespace ordchoquet::lp {

enum class Status { Optimal, Infeasible, Unbounded };

std::string to_string(Status s);

/// maximize c.x subject to A x <= b, x >= 0. Rows of `a` have length c.size().
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
  /// One multiplier per row: y >= 0, A^T y >= c and b.y equals the optimum.
  std::vector<Rational> duals;
};

/// Two-phase dictionary simplex over exact rationals with Bland's rule.
Solution maximize(const Problem& problem);

struct LPResult {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> primal_x;  // over N
  std::vector<Rational> dual_y;    // over the family
};

/// min <f,x> over the core {x >= 0 : x(F) >= v(F) for all F}. Requires f >= 0.
LPResult solve_core_min(const SetSystem& sys, const Valuation& v, const Weighting& f);

/// max <v,y> over {y >= 0 : sum_F y_F 1_F <= f}, solved as its own program.
/// Requires f >= 0.
LPResult solve_packing_max(const SetSystem& sys, const Valuation& v, const Weighting& f);

/// Checks both certificates of an optimal result: primal and dual feasibility,
/// <f,x> = <v,y> = value, and complementary slackness. Returns an empty string
/// when everything holds, otherwise a description of the first failure.
std::string verify_certificates(const SetSystem& sys, const Valuation& v, const Weighting& f, const LPResult& r);

}  // namespace ordchoquet::lp
