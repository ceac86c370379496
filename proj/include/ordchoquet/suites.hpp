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

#include "ordchoquet/json_io.hpp"
#include "ordchoquet/monge.hpp"
#include "ordchoquet/set_system.hpp"
#include "ordchoquet/valuation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ordchoquet::suites {

struct Config {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t n_max = 6;
  std::size_t m_max = 40;
};

/// Everything one check needs. Instances are self-contained so that a failing
/// one can be written out and re-checked later without the generator.
struct Instance {
  std::string suite;
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  SetSystem system;
  std::vector<Valuation> valuations;
  std::vector<Weighting> weightings;
};

io::json instance_to_json(const Instance& inst);
Instance instance_from_json(const io::json& j);

struct Violation {
  std::string check;
  std::string detail;
  io::json instance;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t monge_runs = 0;
  std::size_t monge_infeasible = 0;
  std::vector<Violation> violations;
  /// Counters for observations that are reported but not asserted.
  std::map<std::string, std::size_t> notes;

  bool passed() const { return violations.empty() && monge_infeasible == 0; }
  void merge(const Report& other);
  io::json to_json() const;
};

/// Counts checks, records violations against the current instance, and runs
/// the greedy loop with its feasibility check so that every run is covered.
class Checker {
public:
  Checker(Report& report, const Instance& inst) : report_(report), inst_(inst) {}

  bool expect(bool ok, const std::string& check, const std::string& detail = {});
  bool expect_equal(const Rational& got, const Rational& want, const std::string& check);
  void note(const std::string& key, std::size_t count = 1) { report_.notes[key] += count; }

  monge::MongeOutput monge(const SetSystem& sys, const Weighting& f);
  monge::Certificate certify(const SetSystem& sys, const Weighting& f);

private:
  void record_feasibility(const SetSystem& sys, const Weighting& f, const monge::MongeOutput& out);

  Report& report_;
  const Instance& inst_;
};

const std::vector<std::string>& names();
bool is_suite(const std::string& name);

/// Instances for one trial of a suite, fully determined by (seed, trial).
std::vector<Instance> generate(const std::string& suite, const Config& config, std::size_t trial);
void check(const Instance& inst, Checker& checker);

Report run(const std::string& suite, const Config& config);

/// Number of enumerated union-closed families that supermodular_equiv visits
/// on even trials; 2 * size trials cover all of them.
std::size_t union_closed_enumeration_size(const Config& config);
/// Re-checks a dumped instance.
Report replay(const io::json& instance);

}  // namespace ordchoquet::suites
