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

#include "ordchoquet/set_system.hpp"
#include "ordchoquet/valuation.hpp"

#include <string>
#include <vector>

namespace testing {

using namespace ordchoquet;

/// Family over {1..n} written as digit strings, e.g. sys(3, {"12", "23", "123"}).
inline SetSystem sys(std::size_t n, const std::vector<std::string>& family, OrderSpec order = OrderSpec::containment()) {
  GroundSet g = GroundSet::numbered(n);
  std::vector<ElementSet> sets;
  for (const auto& s : family) sets.push_back(g.parse(s));
  return SetSystem::build(g, sets, order);
}

/// All non-empty subsets of {1..n} under containment.
inline SetSystem boolean(std::size_t n) {
  GroundSet g = GroundSet::numbered(n);
  std::vector<ElementSet> sets;
  for (ElementSet::Bits b = 1; b < (ElementSet::Bits{1} << n); ++b) sets.emplace_back(b);
  return SetSystem::build(g, sets, OrderSpec::containment());
}

inline std::size_t at(const SetSystem& s, const std::string& set) { return s.find(s.ground().parse(set)).value(); }

inline Weighting weights(std::vector<long> values) {
  Weighting f(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) f[i] = values[i];
  return f;
}

/// Valuation given by set -> value, 0 elsewhere.
inline Valuation valuation(const SetSystem& s, const std::vector<std::pair<std::string, Rational>>& values) {
  Valuation v(s.m());
  for (const auto& [set, value] : values) v[at(s, set)] = value;
  return v;
}

}  // namespace testing
