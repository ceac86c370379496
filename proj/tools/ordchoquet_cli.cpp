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

// Command-line front end: integrals, the greedy trace, structure checks,
// Moebius transforms, extensions, Lehrer integrals and the property suites.

#include "ordchoquet/choquet.hpp"
#include "ordchoquet/error.hpp"
#include "ordchoquet/json_io.hpp"
#include "ordchoquet/lp.hpp"
#include "ordchoquet/monge.hpp"
#include "ordchoquet/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ordchoquet;
using io::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "json";
  std::string system_path;
  std::string valuation_path;
  std::string weighting_path;
  std::string method = "auto";
  bool certificates = false;
  bool shift = false;
  bool unchecked = false;
  bool matrix = false;
  bool capacity = false;
  std::string suite;
  suites::Config config;
  std::string dump_dir;
  std::string replay_path;
};

json exact(const Rational& q) { return {{"exact", to_string(q)}, {"decimal", to_decimal(q)}}; }

// Family-indexed values in input order, each with its member.
json by_member(const SetSystem& sys, const std::vector<Rational>& values) {
  json out = json::array();
  for (std::size_t in = 0; in < sys.m(); ++in) {
    const std::size_t i = sys.index_of_input(in);
    out.push_back({{"index", in}, {"set", sys.ground().format(sys.set(i))}, {"value", to_string(values[i])}});
  }
  return out;
}

json by_element(const GroundSet& ground, const std::vector<Rational>& values) {
  json out = json::object();
  for (std::size_t e = 0; e < values.size(); ++e) out[ground.label(e)] = to_string(values[e]);
  return out;
}

json predicate(const SetSystem& sys, const PredicateResult& r) {
  json j = {{"holds", r.holds}};
  if (!r.holds) {
    json w = json::array();
    for (auto i : r.witness) w.push_back(sys.ground().format(sys.set(i)));
    j["witness"] = w;
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j;
}

// Text output: one "key: value" line per scalar, nested keys joined by dots.
void print_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    if (j.contains("exact") && j.contains("decimal") && j.size() == 2) {
      out << prefix << ": " << j["exact"].get<std::string>() << " (" << j["decimal"].get<std::string>() << ")\n";
      return;
    }
    for (const auto& [k, v] : j.items()) print_text(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Options& opt, const json& j) {
  if (opt.format == "text") {
    print_text(std::cout, j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

SetSystem load_system(const Options& opt) { return io::system_from_json(io::read_file(opt.system_path)); }

json certificate_json(const SetSystem& sys, const monge::Certificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) {
    entries.push_back({{"set", sys.ground().format(sys.set(e.index))},
                       {"greedy", to_string(e.monge)},
                       {"lp", to_string(e.lp)},
                       {"agrees", e.agrees()}});
  }
  json j = {{"certified", cert.certified}, {"simple_functions", entries}};
  if (cert.first_failure) j["first_failure"] = sys.ground().format(sys.set(*cert.first_failure));
  return j;
}

json trace_json(const SetSystem& sys, const monge::MongeOutput& out) {
  const auto& g = sys.ground();
  json rounds = json::array();
  for (const auto& r : out.rounds) {
    rounds.push_back({{"set", g.format(sys.set(r.set))},
                      {"element", g.label(r.element)},
                      {"step", to_string(r.step)},
                      {"residual", by_element(g, r.residual)}});
  }
  json chosen = json::array();
  for (auto i : out.chosen) chosen.push_back(g.format(sys.set(i)));
  json removed = json::array();
  for (auto e : out.removed) removed.push_back(g.label(e));
  return {{"rounds", rounds},
          {"chosen", chosen},
          {"removed", removed},
          {"y", by_member(sys, out.y)},
          {"residual", by_element(g, out.residual)}};
}

int cmd_integrate(const Options& opt) {
  const auto sys = load_system(opt);
  const auto v = io::valuation_from_json(io::read_file(opt.valuation_path), sys);
  const auto f = io::weighting_from_json(io::read_file(opt.weighting_path), sys.ground());
  json out;

  if (!f.is_nonnegative()) {
    if (!opt.shift) throw Error(ErrorCode::NegativeWeighting, "weighting has negative entries; use --shift");
    auto s = integral_shifted(sys, v, f);
    out = {{"value", exact(s.value)}, {"method", "lp"}, {"lambda", to_string(s.lambda)},
           {"shift_dependent", s.shift_dependent}};
    emit(opt, out);
    return kOk;
  }

  std::string method = opt.method;
  if (method == "auto") method = monge::certify(sys, f).certified ? "monge" : "lp";

  if (method == "lp") {
    auto r = integral(sys, v, f);
    out = {{"value", exact(r.value)}, {"method", "lp"}};
    if (opt.certificates) {
      auto d = decompose(sys, v);
      json parts = json::object();
      for (const auto& [name, part] : {std::pair{"v_plus", &d.v_plus}, std::pair{"v_minus", &d.v_minus}}) {
        auto core = lp::solve_core_min(sys, *part, f);
        auto pack = lp::solve_packing_max(sys, *part, f);
        auto core_err = lp::verify_certificates(sys, *part, f, core);
        auto pack_err = lp::verify_certificates(sys, *part, f, pack);
        parts[name] = {{"value", to_string(core.value)},
                       {"core_x", by_element(sys.ground(), core.primal_x)},
                       {"packing_y", by_member(sys, pack.dual_y)},
                       {"verified", core_err.empty() && pack_err.empty()}};
        if (!core_err.empty()) parts[name]["core_error"] = core_err;
        if (!pack_err.empty()) parts[name]["packing_error"] = pack_err;
      }
      out["certificates"] = parts;
    }
  } else if (method == "monge") {
    auto cert = monge::certify(sys, f);
    if (!cert.certified && !opt.unchecked) {
      json refusal = {{"error", "greedy value not certified for this weighting"},
                      {"certificate", certificate_json(sys, cert)}};
      emit(opt, refusal);
      return kViolation;
    }
    out = {{"value", exact(monge::functional(cert.output, v))}, {"method", "monge"}, {"certified", cert.certified}};
    if (opt.certificates) out["certificate"] = certificate_json(sys, cert);
  } else if (method == "classical") {
    if (!sys.is_containment_ordered() || !sys.is_weakly_union_closed()) {
      throw Error(ErrorCode::InvalidInput,
                  "classical method needs a weakly union-closed family under containment");
    }
    out = {{"value", exact(classical_integral(extension_hat(sys, v), f))}, {"method", "classical"}};
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown method '" + method + "'");
  }
  emit(opt, out);
  return kOk;
}

int cmd_monge(const Options& opt) {
  const auto sys = load_system(opt);
  const auto f = io::weighting_from_json(io::read_file(opt.weighting_path), sys.ground());
  auto out = trace_json(sys, monge::run(sys, f));
  if (opt.certificates) out["certificate"] = certificate_json(sys, monge::certify(sys, f));
  emit(opt, out);
  return kOk;
}

int cmd_classify(const Options& opt) {
  const auto sys = load_system(opt);
  auto r = classify(sys);
  json order = json::array();
  for (std::size_t i = 0; i < sys.m(); ++i) order.push_back(sys.ground().format(sys.set(i)));
  json out = {{"order", order},
              {"index_map", io::index_map_json(sys)},
              {"trivially_ordered", predicate(sys, r.trivially_ordered)},
              {"containment_ordered", predicate(sys, r.containment_ordered)},
              {"weakly_union_closed", predicate(sys, r.weakly_union_closed)},
              {"union_closed", predicate(sys, r.union_closed)},
              {"algebra", predicate(sys, r.algebra)},
              {"consecutive", predicate(sys, r.consecutive)},
              {"intersection_system", predicate(sys, r.intersection_system)}};
  if (r.algebra.holds) {
    json atoms = json::array();
    for (auto a : r.atoms) atoms.push_back(sys.ground().format(a));
    out["atoms"] = atoms;
  }
  emit(opt, out);
  return kOk;
}

json matrix_json(const SetSystem& sys, auto&& entry) {
  json rows = json::array();
  for (std::size_t i = 0; i < sys.m(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sys.m(); ++j) row.push_back(entry(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_mobius(const Options& opt) {
  const auto sys = load_system(opt);
  json out;
  if (!opt.valuation_path.empty()) {
    const auto v = io::valuation_from_json(io::read_file(opt.valuation_path), sys);
    out["beta"] = by_member(sys, mobius_inverse(sys, v).values());
    out["belief"] = is_belief(sys, v);
  }
  if (opt.matrix || opt.valuation_path.empty()) {
    json order = json::array();
    for (std::size_t i = 0; i < sys.m(); ++i) order.push_back(sys.ground().format(sys.set(i)));
    out["order"] = order;
    out["incidence"] = matrix_json(sys, [&](std::size_t i, std::size_t j) { return sys.incidence()(i, j); });
    out["mobius"] = matrix_json(sys, [&](std::size_t i, std::size_t j) { return sys.mobius()(i, j).get_str(); });
  }
  emit(opt, out);
  return kOk;
}

int cmd_decompose(const Options& opt) {
  const auto sys = load_system(opt);
  const auto v = io::valuation_from_json(io::read_file(opt.valuation_path), sys);
  auto d = decompose(sys, v);
  emit(opt, {{"beta", by_member(sys, d.beta.values())},
             {"v_plus", by_member(sys, d.v_plus.values())},
             {"v_minus", by_member(sys, d.v_minus.values())},
             {"belief", is_belief(sys, v)}});
  return kOk;
}

int cmd_extend(const Options& opt) {
  const auto sys = load_system(opt);
  const auto v = io::valuation_from_json(io::read_file(opt.valuation_path), sys);
  auto vhat = extension_hat(sys, v);
  std::pair<ElementSet, ElementSet> witness;
  const bool monotone = vhat.is_monotone(&witness);
  json out = {{"extension", io::set_function_to_json(vhat, sys.ground())}, {"monotone", monotone}};
  if (!monotone) {
    out["monotonicity_witness"] = {{"subset", sys.ground().format(witness.first)},
                                   {"superset", sys.ground().format(witness.second)}};
  }
  emit(opt, out);
  return kOk;
}

int cmd_lehrer(const Options& opt) {
  const auto sys = load_system(opt);
  const auto p = io::valuation_from_json(io::read_file(opt.valuation_path), sys);
  json out;
  json atoms = json::array();
  for (auto a : probability_atoms(sys, p)) atoms.push_back(sys.ground().format(a));
  out["atoms"] = atoms;
  if (!opt.weighting_path.empty()) {
    const auto f = io::weighting_from_json(io::read_file(opt.weighting_path), sys.ground());
    out["value"] = exact(lehrer_integral(sys, p, f));
  }
  if (opt.capacity) out["induced_capacity"] = io::set_function_to_json(induced_capacity(sys, p), sys.ground());
  emit(opt, out);
  return kOk;
}

int cmd_verify(const Options& opt) {
  suites::Report report;
  if (!opt.replay_path.empty()) {
    report = suites::replay(io::read_file(opt.replay_path));
  } else {
    if (!suites::is_suite(opt.suite)) throw Error(ErrorCode::InvalidInput, "unknown suite '" + opt.suite + "'");
    report = suites::run(opt.suite, opt.config);
  }

  json out = report.to_json();
  if (!opt.dump_dir.empty() && !report.violations.empty()) {
    std::filesystem::create_directories(opt.dump_dir);
    json files = json::array();
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      const auto path = std::filesystem::path(opt.dump_dir) / (report.suite + "-" + std::to_string(k) + ".json");
      std::ofstream file(path);
      file << report.violations[k].instance.dump(2) << "\n";
      files.push_back(path.string());
    }
    out["dumped"] = files;
  }
  // Instances are only in the dump files; the report keeps the check names.
  for (auto& v : out["violations"]) v.erase("instance");
  emit(opt, out);
  return report.passed() ? kOk : kViolation;
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Choquet integrals on ordered set systems"};
  app.require_subcommand(1);

  auto* integrate = app.add_subcommand("integrate", "Integrate a weighting against a valuation");
  integrate->add_option("--system", opt.system_path, "System JSON file")->required();
  integrate->add_option("--valuation", opt.valuation_path, "Valuation JSON file")->required();
  integrate->add_option("--weighting", opt.weighting_path, "Weighting JSON file")->required();
  integrate->add_option("--method", opt.method, "lp, monge, classical or auto")
      ->check(CLI::IsMember({"lp", "monge", "classical", "auto"}));
  integrate->add_flag("--certificates", opt.certificates, "Print LP or greedy certificates");
  integrate->add_flag("--shift", opt.shift, "Allow negative weightings via a constant shift");
  integrate->add_flag("--unchecked", opt.unchecked, "Report the greedy value even when not certified");
  add_format(integrate, opt);

  auto* monge_cmd = app.add_subcommand("monge", "Trace of the greedy algorithm");
  monge_cmd->add_option("--system", opt.system_path, "System JSON file")->required();
  monge_cmd->add_option("--weighting", opt.weighting_path, "Weighting JSON file")->required();
  monge_cmd->add_flag("--certificates", opt.certificates, "Compare with the LP on every simple function");
  add_format(monge_cmd, opt);

  auto* classify_cmd = app.add_subcommand("classify", "Structural properties of a system");
  classify_cmd->add_option("--system", opt.system_path, "System JSON file")->required();
  add_format(classify_cmd, opt);

  auto* mobius = app.add_subcommand("mobius", "Moebius coefficients, or the incidence and Moebius matrices");
  mobius->add_option("--system", opt.system_path, "System JSON file")->required();
  mobius->add_option("--valuation", opt.valuation_path, "Valuation JSON file");
  mobius->add_flag("--matrix", opt.matrix, "Also print Z and its inverse");
  add_format(mobius, opt);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a valuation into two belief functions");
  decompose_cmd->add_option("--system", opt.system_path, "System JSON file")->required();
  decompose_cmd->add_option("--valuation", opt.valuation_path, "Valuation JSON file")->required();
  add_format(decompose_cmd, opt);

  auto* extend = app.add_subcommand("extend", "Extension of a valuation to all subsets");
  extend->add_option("--system", opt.system_path, "System JSON file")->required();
  extend->add_option("--valuation", opt.valuation_path, "Valuation JSON file")->required();
  add_format(extend, opt);

  auto* lehrer = app.add_subcommand("lehrer", "Lehrer integral of a probability on an algebra");
  lehrer->add_option("--system", opt.system_path, "System JSON file")->required();
  lehrer->add_option("--probability,--valuation", opt.valuation_path)->required();
  lehrer->add_option("--weighting", opt.weighting_path, "Weighting JSON file");
  lehrer->add_flag("--capacity", opt.capacity, "Also print the induced capacity");
  add_format(lehrer, opt);

  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  verify->add_option("suite", opt.suite, "One of: " + [] {
    std::string s;
    for (const auto& n : suites::names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  verify->add_option("--seed", opt.config.seed, "Base seed")->capture_default_str();
  verify->add_option("--trials", opt.config.trials, "Number of trials")->capture_default_str();
  verify->add_option("--n-max", opt.config.n_max, "Largest ground set")->capture_default_str()->check(CLI::Range(2, 12));
  verify->add_option("--m-max", opt.config.m_max, "Largest family")->capture_default_str()->check(CLI::Range(3, 200));
  verify->add_option("--dump-dir", opt.dump_dir, "Write each violating instance here");
  verify->add_option("--replay", opt.replay_path, "Re-check a dumped instance");
  add_format(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*integrate) return cmd_integrate(opt);
    if (*monge_cmd) return cmd_monge(opt);
    if (*classify_cmd) return cmd_classify(opt);
    if (*mobius) return cmd_mobius(opt);
    if (*decompose_cmd) return cmd_decompose(opt);
    if (*extend) return cmd_extend(opt);
    if (*lehrer) return cmd_lehrer(opt);
    if (*verify) {
      if (opt.suite.empty() && opt.replay_path.empty()) throw Error(ErrorCode::InvalidInput, "name a suite or --replay");
      return cmd_verify(opt);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
