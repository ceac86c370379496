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
#include <vector>

namespace ordchoquet::monge {

/// One selection event of the greedy loop.
struct Round {
  std::size_t set;            // index of M
  std::size_t element;        // p
  Rational step;              // c_p at selection time
  std::vector<Rational> residual;  // c after the update
};

struct MongeOutput {
  std::vector<std::size_t> chosen;   // M_1..M_k
  std::vector<std::size_t> removed;  // p_1..p_k
  std::vector<Rational> y;           // over the family, accumulated per selection
  std::vector<Rational> residual;    // final c
  std::vector<Round> rounds;
};

/// Greedy loop on F(X), starting from X = N and c = f:
/// take the lowest-indexed member M inside X, pick p in M with least c_p (ties
/// to the earliest element), add c_p to y_M, subtract c_p on M, drop p from X;
/// stop when no member fits inside X. Throws NegativeWeighting.
MongeOutput run(const SetSystem& sys, const Weighting& f);

/// [f](v) = <v, y>.
Rational functional(const MongeOutput& out, const Valuation& v);

/// y >= 0 and sum_F y_F 1_F <= f.
bool is_feasible(const SetSystem& sys, const Weighting& f, const MongeOutput& out);

struct CertificateEntry {
  std::size_t index;
  Rational monge;  // [f](zeta^i)
  Rational lp;     // LP integral of zeta^i
  bool agrees() const { return monge == lp; }
};

struct Certificate {
  bool certified = false;
  std::optional<std::size_t> first_failure;
  std::vector<CertificateEntry> entries;
  MongeOutput output;
};

/// Runs the greedy loop once and compares [f](zeta^i) with the LP integral for
/// every simple function. Agreement for all i means the greedy value equals the
/// integral for every valuation at this f.
Certificate certify(const SetSystem& sys, const Weighting& f);

/// Inclusion structure of the chosen members, in round numbering.
struct Forest {
  std::vector<std::optional<std::size_t>> father;
  bool is_forest = true;          // strict supersets of each node form a chain
  bool children_disjoint = true;  // siblings (roots included) are pairwise disjoint
};

Forest chosen_forest(const SetSystem& sys, const MongeOutput& out);

/// sum_i (f_{p_i} - f_{p_father(i)}) v(M_i), with 0 for roots.
Rational father_difference_value(const MongeOutput& out, const Forest& forest, const Weighting& f,
                                 const Valuation& v);

}  // namespace ordchoquet::monge
