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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ordchoquet {

/// Seeded generator. Bounded draws use rejection on the raw 64-bit stream, so
/// a seed produces the same instances on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1)); }
  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }
  /// p/q with q in [1, max_den] and value in [lo, hi].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den);
  std::vector<std::size_t> permutation(std::size_t n);

private:
  std::mt19937_64 engine_;
};

// -- Families ---------------------------------------------------------------
// All generators return covering families of distinct non-empty sets over the
// numbered ground set {1..n}.

/// Random sets under the containment order.
SetSystem random_containment_system(Rng& rng, std::size_t n, std::size_t m_max);
/// Random sets closed under unions of intersecting pairs, containment order.
SetSystem random_weakly_union_closed(Rng& rng, std::size_t n, std::size_t m_max);
/// Random sets closed under all unions, containment order.
SetSystem random_union_closed(Rng& rng, std::size_t n, std::size_t m_max);
/// All non-empty unions of the blocks of a random partition, containment order.
SetSystem random_algebra(Rng& rng, std::size_t n, std::size_t m_max);
/// Random sets with random order pairs drawn consistently with a random linear order.
SetSystem random_poset_system(Rng& rng, std::size_t n, std::size_t m_max);
/// Systems that pass check_intersection_system, drawn by rejection from weakly
/// union-closed systems (with and without order perturbation), random posets,
/// subsystems of a relabelled lattice fixture, and side by side pairs of such
/// systems on disjoint blocks. Returns the number of rejected draws in `rejected`.
SetSystem random_intersection_system(Rng& rng, std::size_t n, std::size_t m_max, std::size_t* rejected = nullptr);

/// Every union-closed covering family on n elements (n <= 4), containment order.
std::vector<SetSystem> all_union_closed_systems(std::size_t n);

// -- Valuations and weightings ------------------------------------------------

Valuation random_valuation(Rng& rng, std::size_t m);
Valuation random_density(Rng& rng, std::size_t m);
Valuation random_belief(Rng& rng, const SetSystem& sys);
/// Non-negative, isotone along the order.
Valuation random_capacity(Rng& rng, const SetSystem& sys);
/// Additive probability on an algebra: random non-negative atom masses summing to 1.
Valuation random_probability(Rng& rng, const SetSystem& algebra);
Weighting random_weighting(Rng& rng, std::size_t n);
/// Both weightings are non-decreasing along one random element order.
std::pair<Weighting, Weighting> random_comonotonic_pair(Rng& rng, std::size_t n);

// -- Fixtures ---------------------------------------------------------------

/// Eight members on {1..6}: 12, 126, 234, 236, 15, 16, 45, 6, ordered by the
/// covering pairs 6<45, 6<16, 6<236, 45<234, 45<15, 16<15, 16<126, 236<234,
/// 236<126, 15<12, 234<12, 126<12. An intersection system whose order is not
/// containment.
SetSystem lattice_fixture();

/// Weakly union-closed family {12345,1234,2345,1345,124,234,345,12,35,2,5}
/// under containment.
SetSystem restricted_game_fixture();

/// On restricted_game_fixture(): 1 on 12345, 12 and 35, 0 elsewhere.
Valuation restricted_game_valuation(const SetSystem& sys);

/// On restricted_game_fixture(): 1 on every member containing 12 or 35, 0
/// elsewhere. A capacity with the same values on 12345, 12 and 35.
Valuation restricted_game_capacity(const SetSystem& sys);

}  // namespace ordchoquet
