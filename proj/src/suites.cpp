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

#include "ordchoquet/suites.hpp"

#include "ordchoquet/choquet.hpp"
#include "ordchoquet/error.hpp"
#include "ordchoquet/lp.hpp"
#include "ordchoquet/random.hpp"

#include <algorithm>
#include <functional>

namespace ordchoquet::suites {

using io::json;

// -- Instances and reports --------------------------------------------------

json instance_to_json(const Instance& inst) {
  json j;
  j["suite"] = inst.suite;
  j["kind"] = inst.kind;
  j["seed"] = inst.seed;
  j["trial"] = inst.trial;
  j["system"] = io::system_to_json(inst.system);
  j["valuations"] = json::array();
  for (const auto& v : inst.valuations) j["valuations"].push_back(io::valuation_to_json(v));
  j["weightings"] = json::array();
  for (const auto& f : inst.weightings) j["weightings"].push_back(io::weighting_to_json(f, inst.system.ground()));
  return j;
}

Instance instance_from_json(const json& j) {
  for (const char* key : {"suite", "kind", "system", "valuations", "weightings"})
    if (!j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("instance lacks \"") + key + "\"");
  Instance inst{.suite = j.at("suite").get<std::string>(),
                .kind = j.at("kind").get<std::string>(),
                .seed = j.value("seed", std::uint64_t{0}),
                .trial = j.value("trial", std::size_t{0}),
                .system = io::system_from_json(j.at("system")),
                .valuations = {},
                .weightings = {}};
  for (const auto& v : j.at("valuations")) inst.valuations.push_back(io::valuation_from_json(v, inst.system));
  for (const auto& f : j.at("weightings")) inst.weightings.push_back(io::weighting_from_json(f, inst.system.ground()));
  return inst;
}

void Report::merge(const Report& other) {
  instances += other.instances;
  checks += other.checks;
  monge_runs += other.monge_runs;
  monge_infeasible += other.monge_infeasible;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [k, v] : other.notes) notes[k] += v;
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["trials"] = trials;
  j["instances"] = instances;
  j["checks"] = checks;
  j["monge_runs"] = monge_runs;
  j["monge_infeasible"] = monge_infeasible;
  j["passed"] = passed();
  j["notes"] = json::object();
  for (const auto& [k, v] : notes) j["notes"][k] = v;
  j["violations"] = json::array();
  for (const auto& v : violations) j["violations"].push_back({{"check", v.check}, {"detail", v.detail}, {"instance", v.instance}});
  return j;
}

bool Checker::expect(bool ok, const std::string& check, const std::string& detail) {
  ++report_.checks;
  if (!ok) report_.violations.push_back({check, detail, instance_to_json(inst_)});
  return ok;
}

bool Checker::expect_equal(const Rational& got, const Rational& want, const std::string& check) {
  return expect(got == want, check, "got " + to_string(got) + ", expected " + to_string(want));
}

void Checker::record_feasibility(const SetSystem& sys, const Weighting& f, const monge::MongeOutput& out) {
  ++report_.monge_runs;
  if (!monge::is_feasible(sys, f, out)) {
    ++report_.monge_infeasible;
    report_.violations.push_back({"greedy_feasible", "packing vector violates y >= 0 or sum y_F 1_F <= f",
                                  instance_to_json(inst_)});
  }
}

monge::MongeOutput Checker::monge(const SetSystem& sys, const Weighting& f) {
  auto out = monge::run(sys, f);
  record_feasibility(sys, f, out);
  return out;
}

monge::Certificate Checker::certify(const SetSystem& sys, const Weighting& f) {
  auto cert = monge::certify(sys, f);
  record_feasibility(sys, f, cert.output);
  return cert;
}

// -- Shared helpers ---------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

Rng trial_rng(const std::string& suite, std::uint64_t seed, std::size_t trial) {
  return Rng(splitmix(splitmix(seed) ^ fnv1a(suite) ^ splitmix(trial + 1)));
}

Rational value(const SetSystem& sys, const Valuation& v, const Weighting& f) { return integral(sys, v, f).value; }

Weighting scaled(const Rational& s, const Weighting& f) { return s * f; }

SetSystem classical_system(std::size_t n) {
  std::vector<ElementSet> family;
  for (ElementSet::Bits b = 1; b < (ElementSet::Bits{1} << n); ++b) family.emplace_back(b);
  return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::containment());
}

/// Largest n with 2^n - 1 <= m_max, capped at 5 so trials stay fast.
std::size_t classical_n(const Config& cfg) {
  std::size_t n = std::min<std::size_t>(cfg.n_max, 5);
  while (n > 1 && (std::size_t{1} << n) - 1 > cfg.m_max) --n;
  return n;
}

std::size_t draw_n(Rng& rng, const Config& cfg) {
  return static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(cfg.n_max)));
}

SetSystem random_system(Rng& rng, const Config& cfg, std::size_t kind) {
  const std::size_t n = draw_n(rng, cfg);
  switch (kind % 4) {
    case 0:
      return random_containment_system(rng, n, cfg.m_max);
    case 1:
      return random_weakly_union_closed(rng, n, cfg.m_max);
    case 2:
      return random_poset_system(rng, n, cfg.m_max);
    default:
      return random_intersection_system(rng, n, cfg.m_max);
  }
}

SetFunction as_set_function(const SetSystem& sys, const Valuation& v) {
  SetFunction vhat(sys.n());
  for (std::size_t i = 0; i < sys.m(); ++i) vhat[sys.set(i)] = v[i];
  return vhat;
}

Weighting ones(std::size_t n) { return indicator(n, ElementSet::full(n)); }

Instance make(const std::string& suite, const std::string& kind, std::uint64_t seed, std::size_t trial,
              SetSystem sys) {
  return Instance{.suite = suite, .kind = kind, .seed = seed, .trial = trial, .system = std::move(sys),
                  .valuations = {}, .weightings = {}};
}

// -- mobius -------------------------------------------------------------------

std::vector<Instance> gen_mobius(Rng& rng, const Config& cfg, std::size_t trial) {
  auto inst = make("mobius", "roundtrip", cfg.seed, trial, random_system(rng, cfg, trial));
  inst.valuations = {random_valuation(rng, inst.system.m()), random_density(rng, inst.system.m())};
  inst.weightings = {random_weighting(rng, inst.system.n())};
  return {inst};
}

void check_mobius(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  const auto& v = inst.valuations.at(0);
  const auto& w = inst.valuations.at(1);

  const auto& z = sys.incidence();
  const auto& mu = sys.mobius();
  bool identity = true;
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.m(); ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < sys.m(); ++k)
        if (z(i, k) != 0) s += mu(k, j);
      if (s != (i == j ? 1 : 0)) identity = false;
    }
  c.expect(identity, "incidence_times_mobius_is_identity");

  auto beta = mobius_inverse(sys, v);
  c.expect(combine(sys, beta) == v, "combine_inverts_mobius");

  auto belief = cumulative(sys, w);
  auto density = mobius_inverse(sys, belief);
  c.expect(density.values() == w.values(), "mobius_inverts_cumulative");
  c.expect(is_belief(sys, belief), "cumulative_is_belief");
  c.expect(cumulative(sys, Valuation(density.values())) == belief, "cumulative_of_density_roundtrip");

  auto d = decompose(sys, v);
  c.expect(d.v_plus - d.v_minus == v, "decomposition_sums_to_v");
  c.expect(is_belief(sys, d.v_plus) && is_belief(sys, d.v_minus), "decomposition_parts_are_beliefs");

  c.monge(sys, inst.weightings.at(0));
}

// -- duality ------------------------------------------------------------------

std::vector<Instance> gen_duality(Rng& rng, const Config& cfg, std::size_t trial) {
  auto inst = make("duality", "belief", cfg.seed, trial, random_system(rng, cfg, trial));
  inst.valuations = {random_belief(rng, inst.system)};
  inst.weightings = {random_weighting(rng, inst.system.n())};
  return {inst};
}

void check_duality(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  const auto& v = inst.valuations.at(0);
  const auto& f = inst.weightings.at(0);

  auto core = lp::solve_core_min(sys, v, f);
  auto pack = lp::solve_packing_max(sys, v, f);
  if (!c.expect(core.status == lp::Status::Optimal && pack.status == lp::Status::Optimal, "lp_optimal",
                "core " + lp::to_string(core.status) + ", packing " + lp::to_string(pack.status)))
    return;
  c.expect_equal(core.value, pack.value, "core_equals_packing");
  auto core_err = lp::verify_certificates(sys, v, f, core);
  c.expect(core_err.empty(), "core_certificates", core_err);
  auto pack_err = lp::verify_certificates(sys, v, f, pack);
  c.expect(pack_err.empty(), "packing_certificates", pack_err);
  c.expect_equal(value(sys, v, f), core.value, "integral_is_core_value");

  auto out = c.monge(sys, f);
  c.expect(monge::functional(out, v) <= pack.value, "greedy_below_packing");
}

// -- classical_agreement ------------------------------------------------------

/// Nested members C_1 < ... < C_k and f = sum_j c_j 1_{C_j}, so every positive
/// level set of f is a member.
Weighting chain_weighting(Rng& rng, const SetSystem& sys) {
  Weighting f(sys.n());
  std::size_t cur = rng.index(sys.m());
  for (int step = 0; step < 3; ++step) {
    f += rng.rational(1, 3, 3) * indicator(sys.n(), sys.set(cur));
    std::vector<std::size_t> above;
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (i != cur && sys.set(cur).subset_of(sys.set(i))) above.push_back(i);
    if (above.empty()) break;
    cur = above[rng.index(above.size())];
  }
  return f;
}

std::vector<Instance> gen_classical(Rng& rng, const Config& cfg, std::size_t trial) {
  const std::size_t cn = classical_n(cfg);
  auto classical = make("classical_agreement", "classical", cfg.seed, trial, classical_system(cn));
  classical.valuations = {random_valuation(rng, classical.system.m())};
  Weighting g(cn);
  for (std::size_t e = 0; e < cn; ++e) g[e] = rng.rational(-4, 4, 3);
  classical.weightings = {random_weighting(rng, cn), g};

  auto simple = make("classical_agreement", "simple_functions", cfg.seed, trial,
                     trial % 2 == 0 ? random_containment_system(rng, draw_n(rng, cfg), cfg.m_max)
                                    : random_weakly_union_closed(rng, draw_n(rng, cfg), cfg.m_max));
  simple.weightings = {random_weighting(rng, simple.system.n())};

  auto measurable = make("classical_agreement", "measurable", cfg.seed, trial,
                         random_weakly_union_closed(rng, draw_n(rng, cfg), cfg.m_max));
  measurable.valuations = {random_valuation(rng, measurable.system.m())};
  measurable.weightings = {chain_weighting(rng, measurable.system)};
  return {classical, simple, measurable};
}

void check_classical(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  if (inst.kind == "classical") {
    const auto& v = inst.valuations.at(0);
    const auto& f = inst.weightings.at(0);
    const auto& g = inst.weightings.at(1);
    auto vhat = as_set_function(sys, v);
    c.expect_equal(value(sys, v, f), classical_integral(vhat, f), "integral_equals_classical");
    c.expect(extension_hat(sys, v) == vhat, "extension_of_full_family_is_identity");

    auto shifted = integral_shifted(sys, v, g);
    Rational lambda = -min_over(g, sys.all());
    if (lambda < 0) lambda = 0;
    c.expect_equal(shifted.lambda, lambda, "shift_amount");
    c.expect_equal(shifted.value, classical_integral(vhat, g + lambda * ones(sys.n())) - lambda * vhat[sys.all()],
                   "shifted_integral_equals_classical");
    c.expect(!shifted.shift_dependent, "classical_shift_independent");
    c.monge(sys, f);
  } else if (inst.kind == "simple_functions") {
    const auto& f = inst.weightings.at(0);
    for (std::size_t i = 0; i < sys.m(); ++i)
      c.expect_equal(value(sys, simple_function(sys, i), f), min_over(f, sys.set(i)), "simple_function_integral_is_min");
    c.monge(sys, f);
  } else {
    const auto& v = inst.valuations.at(0);
    const auto& f = inst.weightings.at(0);
    auto level = level_set_integral(sys, v, f);
    if (c.expect(level.has_value(), "level_sets_are_members"))
      c.expect_equal(value(sys, v, f), *level, "measurable_integral_equals_level_sum");
    c.monge(sys, f);
  }
}

// -- monge_wuc ----------------------------------------------------------------

std::vector<Instance> gen_monge_wuc(Rng& rng, const Config& cfg, std::size_t trial) {
  auto inst = make("monge_wuc", "weakly_union_closed", cfg.seed, trial,
                   trial == 0 ? restricted_game_fixture()
                              : random_weakly_union_closed(rng, draw_n(rng, cfg), cfg.m_max));
  inst.valuations = {random_valuation(rng, inst.system.m()), random_valuation(rng, inst.system.m())};
  for (int k = 0; k < 3; ++k) inst.weightings.push_back(random_weighting(rng, inst.system.n()));
  return {inst};
}

void check_monge_wuc(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  const auto& v = inst.valuations.at(0);
  const auto& v2 = inst.valuations.at(1);
  c.expect(check_weakly_union_closed(sys).holds && sys.is_containment_ordered(), "weakly_union_closed_containment");
  auto beta = mobius_inverse(sys, v);
  auto vhat = extension_hat(sys, v);
  for (const auto& f : inst.weightings) {
    auto cert = c.certify(sys, f);
    c.expect(cert.certified, "certified",
             cert.first_failure ? "first failing simple function " + std::to_string(*cert.first_failure) : "");
    const auto& out = cert.output;
    const Rational lp_value = value(sys, v, f);
    c.expect_equal(monge::functional(out, v), lp_value, "greedy_equals_lp");
    c.expect_equal(mobius_form_integral(sys, beta, f), lp_value, "mobius_form_equals_lp");
    c.expect_equal(classical_integral(vhat, f), lp_value, "extension_integral_equals_lp");

    auto forest = monge::chosen_forest(sys, out);
    c.expect(forest.is_forest, "chosen_sets_form_forest");
    c.expect(forest.children_disjoint, "siblings_disjoint");
    c.expect_equal(monge::father_difference_value(out, forest, f, v), lp_value, "father_difference_formula");

    Rational combined = 0;
    for (const auto& e : cert.entries) combined += beta[e.index] * e.lp;
    c.expect_equal(combined, lp_value, "integral_linear_in_simple_functions");
    c.expect_equal(monge::functional(out, v + v2), monge::functional(out, v) + monge::functional(out, v2),
                   "functional_linear");
  }
}

// -- monge_intersection -------------------------------------------------------

std::vector<Instance> gen_monge_intersection(Rng& rng, const Config& cfg, std::size_t trial) {
  auto inst = make("monge_intersection", "intersection", cfg.seed, trial,
                   trial == 0 ? lattice_fixture() : random_intersection_system(rng, draw_n(rng, cfg), cfg.m_max));
  inst.valuations = {random_valuation(rng, inst.system.m()), random_belief(rng, inst.system)};
  for (int k = 0; k < 20; ++k) inst.weightings.push_back(random_weighting(rng, inst.system.n()));

  auto probe = make("monge_intersection", "probe", cfg.seed, trial,
                    trial % 2 == 0 ? random_poset_system(rng, draw_n(rng, cfg), cfg.m_max)
                                   : random_containment_system(rng, draw_n(rng, cfg), cfg.m_max));
  probe.valuations = {random_valuation(rng, probe.system.m())};
  for (int k = 0; k < 5; ++k) probe.weightings.push_back(random_weighting(rng, probe.system.n()));
  return {inst, probe};
}

void check_monge_intersection(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  if (inst.kind == "intersection") {
    auto is = check_intersection_system(sys);
    c.expect(is.holds, "is_intersection_system", is.detail);
    for (const auto& f : inst.weightings) {
      auto cert = c.certify(sys, f);
      c.expect(cert.certified, "certified",
               cert.first_failure ? "first failing simple function " + std::to_string(*cert.first_failure) : "");
      for (const auto& v : inst.valuations)
        c.expect_equal(monge::functional(cert.output, v), value(sys, v, f), "greedy_equals_lp");
    }
    return;
  }
  // Outside intersection systems nothing is asserted beyond feasibility and
  // the agreement implied by a successful certificate.
  const bool intersection = check_intersection_system(sys).holds;
  c.note(intersection ? "probe_systems_intersection" : "probe_systems_other");
  for (const auto& f : inst.weightings) {
    auto cert = c.certify(sys, f);
    if (!cert.certified) {
      c.note(intersection ? "certify_failures_on_intersection_probes" : "certify_failures_outside_intersection");
      c.expect(!intersection, "certified");
    } else {
      for (const auto& v : inst.valuations)
        c.expect_equal(monge::functional(cert.output, v), value(sys, v, f), "certified_greedy_equals_lp");
    }
  }
}

// -- supermodular_equiv -------------------------------------------------------

const std::vector<SetSystem>& small_union_closed() {
  static const std::vector<SetSystem> all = [] {
    std::vector<SetSystem> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto part = all_union_closed_systems(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return all;
}

std::vector<const SetSystem*> enumerated_union_closed(const Config& cfg) {
  std::vector<const SetSystem*> out;
  for (const auto& s : small_union_closed())
    if (s.n() <= cfg.n_max && s.m() <= cfg.m_max) out.push_back(&s);
  return out;
}

std::vector<Instance> gen_supermodular(Rng& rng, const Config& cfg, std::size_t trial) {
  const auto enumerated = enumerated_union_closed(cfg);
  // Even trials walk the enumeration (all union-closed families on up to four
  // elements), odd trials draw random ones on four or five.
  const std::size_t hi = std::min<std::size_t>(cfg.n_max, 5);
  const bool use_enumerated = trial % 2 == 0 || hi < 4;
  auto sys = use_enumerated ? *enumerated.at((trial / 2) % enumerated.size())
                            : random_union_closed(rng, static_cast<std::size_t>(rng.uniform(4, static_cast<std::int64_t>(hi))),
                                                  std::min<std::size_t>(cfg.m_max, 20));
  auto inst = make("supermodular_equiv", "union_closed", cfg.seed, trial, sys);
  Valuation v(sys.m());
  switch (trial % 3) {
    case 0:
      v = random_belief(rng, sys);
      break;
    case 1:
      v = random_capacity(rng, sys);
      break;
    default:
      v = random_belief(rng, sys) + random_capacity(rng, sys);
      break;
  }
  inst.valuations = {v};
  // Three weightings for the packing comparison, then 50 (f, g) pairs.
  for (int k = 0; k < 3 + 100; ++k) inst.weightings.push_back(random_weighting(rng, sys.n()));
  return {inst};
}

void check_supermodular(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  const auto& v = inst.valuations.at(0);
  const std::size_t n = sys.n();
  c.expect(check_union_closed(sys).holds && sys.is_containment_ordered(), "union_closed_containment");
  c.expect(is_capacity(sys, v), "valuation_is_capacity");

  auto ordered = is_supermodular_ordered(sys, v);
  auto boolean = is_supermodular_boolean(extension_hat(sys, v));
  c.expect(ordered.holds == boolean.holds, "ordered_and_extension_supermodularity_agree",
           std::string("ordered ") + (ordered.holds ? "holds" : "fails") + ", extension " +
               (boolean.holds ? "holds" : "fails"));
  c.note(ordered.holds ? "supermodular" : "not_supermodular");

  if (ordered.holds) {
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& f = inst.weightings.at(k);
      c.expect_equal(value(sys, v, f), lp::solve_packing_max(sys, v, f).value, "integral_equals_packing_lp");
    }
  } else if (ordered.witness.size() == 2) {
    const ElementSet a = sys.set(ordered.witness[0]);
    const ElementSet b = sys.set(ordered.witness[1]);
    const Weighting h = indicator(n, a) + indicator(n, b);
    c.expect(lp::solve_packing_max(sys, v, h).value > value(sys, v, h), "packing_exceeds_integral_at_witness");
    const Rational half(1, 2);
    const Weighting fa = scaled(half, indicator(n, a));
    const Weighting fb = scaled(half, indicator(n, b));
    c.expect(value(sys, v, fa + fb) < value(sys, v, fa) + value(sys, v, fb), "superadditivity_fails_at_witness");
  } else {
    c.expect(false, "supermodularity_witness", ordered.detail);
  }

  for (std::size_t k = 3; k + 1 < inst.weightings.size(); k += 2) {
    const auto& f = inst.weightings[k];
    const auto& g = inst.weightings[k + 1];
    const bool superadditive = value(sys, v, f + g) >= value(sys, v, f) + value(sys, v, g);
    if (!superadditive) {
      c.note("sampled_superadditivity_violations");
      c.expect(!ordered.holds, "superadditivity_violation_implies_not_supermodular");
    }
  }
  c.monge(sys, inst.weightings.at(0));
}

// -- extension ----------------------------------------------------------------

std::vector<Instance> gen_extension(Rng& rng, const Config& cfg, std::size_t trial) {
  if (trial == 0) {
    auto sys = restricted_game_fixture();
    auto inst = make("extension", "restricted_game", cfg.seed, trial, sys);
    inst.valuations = {restricted_game_valuation(sys), restricted_game_capacity(sys)};
    inst.weightings = {random_weighting(rng, sys.n())};
    return {inst};
  }
  auto inst = make("extension", "containment", cfg.seed, trial,
                   trial % 2 == 0 ? random_containment_system(rng, draw_n(rng, cfg), cfg.m_max)
                                  : random_weakly_union_closed(rng, draw_n(rng, cfg), cfg.m_max));
  inst.valuations = {random_valuation(rng, inst.system.m()), random_capacity(rng, inst.system)};
  inst.weightings = {random_weighting(rng, inst.system.n())};
  return {inst};
}

void check_extension_common(const SetSystem& sys, const Valuation& v, const SetFunction& vhat, Checker& c) {
  c.expect_equal(vhat[ElementSet{}], 0, "extension_vanishes_on_empty_set");
  for (std::size_t i = 0; i < sys.m(); ++i) c.expect_equal(vhat[sys.set(i)], v[i], "extension_agrees_on_members");
  if (!sys.is_weakly_union_closed()) return;
  bool agrees = true;
  for (ElementSet::Bits b = 0; b < vhat.size(); ++b) {
    Rational sum = 0;
    for (auto i : maximal_in(sys, ElementSet(b))) sum += v[i];
    if (sum != vhat[ElementSet(b)]) agrees = false;
  }
  c.expect(agrees, "extension_is_sum_over_maximal_members");
}

void check_extension(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  if (inst.kind == "restricted_game") {
    const auto& literal = inst.valuations.at(0);
    const auto& completed = inst.valuations.at(1);
    const auto s1235 = sys.ground().parse("1235");
    for (const auto* v : {&literal, &completed}) {
      auto vhat = extension_hat(sys, *v);
      check_extension_common(sys, *v, vhat, c);
      c.expect_equal(vhat[s1235], 2, "restricted_game_extension_at_1235");
      c.expect_equal(vhat[sys.all()], 1, "restricted_game_extension_at_N");
      c.expect(!vhat.is_monotone(), "restricted_game_extension_not_monotone");
    }
    c.expect(!is_capacity(sys, literal), "restricted_game_literal_values_not_isotone");
    c.expect(is_capacity(sys, completed), "restricted_game_completion_is_capacity");
  } else {
    for (const auto& v : inst.valuations) check_extension_common(sys, v, extension_hat(sys, v), c);
    if (sys.is_weakly_union_closed() && !extension_hat(sys, inst.valuations.at(1)).is_monotone())
      c.note("capacity_extensions_not_monotone");
  }
  c.monge(sys, inst.weightings.at(0));
}

// -- lehrer -------------------------------------------------------------------

std::vector<Instance> gen_lehrer(Rng& rng, const Config& cfg, std::size_t trial) {
  if (trial == 0) {
    GroundSet g = GroundSet::numbered(3);
    auto sys = SetSystem::build(g, {g.parse("1"), g.parse("23"), g.parse("123")}, OrderSpec::containment());
    auto inst = make("lehrer", "atom_fixture", cfg.seed, trial, sys);
    Valuation p(sys.m());
    p[*sys.find(g.parse("1"))] = Rational(1, 3);
    p[*sys.find(g.parse("23"))] = Rational(2, 3);
    p[*sys.find(g.parse("123"))] = 1;
    Weighting f(3);
    f[0] = 6;
    f[1] = 3;
    f[2] = 9;
    inst.valuations = {p};
    inst.weightings = {f};
    return {inst};
  }
  auto sys = random_algebra(rng, draw_n(rng, cfg), cfg.m_max);
  auto inst = make("lehrer", "algebra", cfg.seed, trial, sys);
  inst.valuations = {random_probability(rng, sys)};
  inst.weightings = {random_weighting(rng, sys.n()), random_weighting(rng, sys.n())};
  return {inst};
}

void check_lehrer(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  const auto& p = inst.valuations.at(0);
  auto atoms = probability_atoms(sys, p);
  for (const auto& f : inst.weightings) {
    const Rational lehrer = lehrer_integral(sys, p, f);
    c.expect_equal(lehrer, value(sys, p, f), "lehrer_equals_integral");
    Rational atom_form = 0;
    for (auto a : atoms) atom_form += p[*sys.find(a)] * min_over(f, a);
    c.expect_equal(lehrer, atom_form, "lehrer_equals_atom_form");
    if (inst.kind == "atom_fixture") c.expect_equal(lehrer, 4, "atom_fixture_value");
    c.monge(sys, f);
  }
  c.expect(induced_capacity(sys, p) == extension_hat(sys, p), "induced_capacity_equals_extension");
}

// -- homogeneity_superadditivity ----------------------------------------------

std::vector<Instance> gen_functional(Rng& rng, const Config& cfg, std::size_t trial) {
  auto inst = make("homogeneity_superadditivity", "functional", cfg.seed, trial, random_system(rng, cfg, trial));
  const auto& sys = inst.system;
  inst.valuations = {random_belief(rng, sys), random_belief(rng, sys), random_valuation(rng, sys.m())};
  inst.weightings = {random_weighting(rng, sys.n()), random_weighting(rng, sys.n())};

  const std::size_t cn = classical_n(cfg);
  auto como = make("homogeneity_superadditivity", "comonotonic", cfg.seed, trial, classical_system(cn));
  auto [f, g] = random_comonotonic_pair(rng, cn);
  como.valuations = {random_valuation(rng, como.system.m())};
  como.weightings = {f, g};
  return {inst, como};
}

void check_functional(const Instance& inst, Checker& c) {
  const auto& sys = inst.system;
  if (inst.kind == "comonotonic") {
    const auto& f = inst.weightings.at(0);
    const auto& g = inst.weightings.at(1);
    auto vhat = as_set_function(sys, inst.valuations.at(0));
    c.expect(comonotonic(f, g), "pair_is_comonotonic");
    c.expect(comonotonic(f, ones(sys.n())), "comonotonic_with_constant");
    c.expect_equal(classical_integral(vhat, f + g), classical_integral(vhat, f) + classical_integral(vhat, g),
                   "classical_comonotonic_additive");
    c.monge(sys, f);
    return;
  }
  const auto& v = inst.valuations.at(0);
  const auto& w = inst.valuations.at(1);
  const auto& u = inst.valuations.at(2);
  const auto& f = inst.weightings.at(0);
  const auto& g = inst.weightings.at(1);

  for (const auto* val : {&v, &u}) {
    const Rational base = value(sys, *val, f);
    for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(2), Rational(3)})
      c.expect_equal(value(sys, *val, scaled(lambda, f)), lambda * base, "positively_homogeneous");
  }
  const Rational vf = value(sys, v, f);
  c.expect(value(sys, v, f + g) >= vf + value(sys, v, g), "superadditive_for_beliefs");
  c.expect(value(sys, v + w, f) <= vf + value(sys, w, f), "subadditive_in_valuation");
  for (std::size_t i = 0; i < sys.m(); ++i)
    c.expect(value(sys, v, indicator(sys.n(), sys.set(i))) >= v[i], "dominates_on_indicators");

  // Strongness is searched, not asserted.
  for (const Rational& lambda : {Rational(1), Rational(5, 2)})
    c.note(check_strong(sys, v, f, lambda) ? "strong_holds" : "strong_fails");
  c.monge(sys, f);
}

struct SuiteDef {
  std::string name;
  std::function<std::vector<Instance>(Rng&, const Config&, std::size_t)> generate;
  std::function<void(const Instance&, Checker&)> check;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"mobius", gen_mobius, check_mobius},
      {"duality", gen_duality, check_duality},
      {"monge_wuc", gen_monge_wuc, check_monge_wuc},
      {"monge_intersection", gen_monge_intersection, check_monge_intersection},
      {"supermodular_equiv", gen_supermodular, check_supermodular},
      {"extension", gen_extension, check_extension},
      {"lehrer", gen_lehrer, check_lehrer},
      {"classical_agreement", gen_classical, check_classical},
      {"homogeneity_superadditivity", gen_functional, check_functional},
  };
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d;
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace

std::size_t union_closed_enumeration_size(const Config& config) { return enumerated_union_closed(config).size(); }

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.name);
    return v;
  }();
  return out;
}

bool is_suite(const std::string& name) {
  const auto& n = names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Instance> generate(const std::string& suite, const Config& config, std::size_t trial) {
  if (config.n_max < 2) throw Error(ErrorCode::InvalidInput, "n_max must be at least 2");
  if (config.m_max < 3) throw Error(ErrorCode::InvalidInput, "m_max must be at least 3");
  auto rng = trial_rng(suite, config.seed, trial);
  return find_suite(suite).generate(rng, config, trial);
}

void check(const Instance& inst, Checker& checker) { find_suite(inst.suite).check(inst, checker); }

Report run(const std::string& suite, const Config& config) {
  Report report;
  report.suite = suite;
  report.seed = config.seed;
  report.trials = config.trials;
  for (std::size_t t = 0; t < config.trials; ++t) {
    for (const auto& inst : generate(suite, config, t)) {
      ++report.instances;
      Checker checker(report, inst);
      check(inst, checker);
    }
  }
  return report;
}

Report replay(const json& instance) {
  auto inst = instance_from_json(instance);
  Report report;
  report.suite = inst.suite;
  report.seed = inst.seed;
  report.trials = 1;
  report.instances = 1;
  Checker checker(report, inst);
  check(inst, checker);
  return report;
}

}  // namespace ordchoquet::suites
