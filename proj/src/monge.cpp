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

#include "ordchoquet/monge.hpp"

#include "ordchoquet/error.hpp"
#include "ordchoquet/lp.hpp"

namespace ordchoquet::monge {

MongeOutput run(const SetSystem& sys, const Weighting& f) {
  if (f.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "weighting length differs from ground set size");
  if (!f.is_nonnegative()) throw Error(ErrorCode::NegativeWeighting, "the greedy loop needs f >= 0");

  MongeOutput out;
  out.y.assign(sys.m(), Rational(0));
  std::vector<Rational> c = f.values();
  ElementSet x = sys.all();

  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.set(i).subset_of(x)) {
        pick = i;
        break;
      }
    if (!pick) break;

    const ElementSet members = sys.set(*pick);
    std::size_t p = members.elements().front();
    for (auto e : members.elements())
      if (c[e] < c[p]) p = e;
    const Rational step = c[p];

    out.y[*pick] += step;
    for (auto e : members.elements()) c[e] -= step;
    x = x.without(p);
    out.chosen.push_back(*pick);
    out.removed.push_back(p);
    out.rounds.push_back({*pick, p, step, c});
  }
  out.residual = std::move(c);
  return out;
}

Rational functional(const MongeOutput& out, const Valuation& v) {
  if (v.size() != out.y.size()) throw Error(ErrorCode::DimensionMismatch, "valuation length differs from family size");
  return dot(v.values(), out.y);
}

bool is_feasible(const SetSystem& sys, const Weighting& f, const MongeOutput& out) {
  if (out.y.size() != sys.m()) return false;
  std::vector<Rational> load(sys.n(), Rational(0));
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (out.y[i] < 0) return false;
    for (auto e : sys.set(i).elements()) load[e] += out.y[i];
  }
  for (std::size_t e = 0; e < sys.n(); ++e)
    if (load[e] > f[e]) return false;
  return true;
}

Certificate certify(const SetSystem& sys, const Weighting& f) {
  Certificate cert;
  cert.output = run(sys, f);
  cert.certified = true;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    const Valuation zeta = simple_function(sys, i);
    CertificateEntry entry{i, functional(cert.output, zeta), lp::solve_core_min(sys, zeta, f).value};
    if (!entry.agrees() && cert.certified) {
      cert.certified = false;
      cert.first_failure = i;
    }
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

Forest chosen_forest(const SetSystem& sys, const MongeOutput& out) {
  const std::size_t k = out.chosen.size();
  Forest forest;
  forest.father.assign(k, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    const ElementSet node = sys.set(out.chosen[i]);
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < k; ++j) {
      const ElementSet other = sys.set(out.chosen[j]);
      if (other != node && node.subset_of(other)) above.push_back(j);
    }
    for (auto a : above)
      for (auto b : above) {
        const ElementSet sa = sys.set(out.chosen[a]), sb = sys.set(out.chosen[b]);
        if (!sa.subset_of(sb) && !sb.subset_of(sa)) forest.is_forest = false;
      }
    for (auto a : above)
      if (!forest.father[i] ||
          sys.set(out.chosen[a]).size() < sys.set(out.chosen[*forest.father[i]]).size()) {
        forest.father[i] = a;
      }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (forest.father[a] == forest.father[b] &&
          sys.set(out.chosen[a]).intersects(sys.set(out.chosen[b]))) {
        forest.children_disjoint = false;
      }
  return forest;
}

Rational father_difference_value(const MongeOutput& out, const Forest& forest, const Weighting& f,
                                 const Valuation& v) {
  Rational total = 0;
  for (std::size_t i = 0; i < out.chosen.size(); ++i) {
    Rational upper = forest.father[i] ? f[out.removed[*forest.father[i]]] : Rational(0);
    total += (f[out.removed[i]] - upper) * v[out.chosen[i]];
  }
  return total;
}

}  // namespace ordchoquet::monge
