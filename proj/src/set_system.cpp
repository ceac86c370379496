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

#include "ordchoquet/set_system.hpp"

#include "ordchoquet/error.hpp"

#include <algorithm>
#include <set>

namespace ordchoquet {

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidInput, "ground set must have at least one element");
  if (labels_.size() > ElementSet::max_elements) {
    throw Error(ErrorCode::InvalidInput, "ground sets are limited to 64 elements");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::InvalidInput, "empty element label");
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidInput, "duplicate element label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

bool single_char_labels(const std::vector<std::string>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.size() == 1; });
}

}  // namespace

ElementSet GroundSet::parse(const std::string& text) const {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorCode::InvalidInput, "unbalanced braces in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> tokens;
  if (body.find(',') != std::string::npos || !single_char_labels(labels_)) {
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        tokens.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty() || !tokens.empty()) tokens.push_back(cur);
  } else {
    for (char c : body) {
      if (c != ' ') tokens.emplace_back(1, c);
    }
  }
  ElementSet s;
  for (const auto& t : tokens) {
    auto e = index_of(t);
    if (!e) throw Error(ErrorCode::InvalidInput, "unknown element '" + t + "' in '" + text + "'");
    s = s.with(*e);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (auto e : s.elements()) out.push_back(label(e));
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  auto labels = labels_of(s);
  std::string out;
  if (single_char_labels(labels_)) {
    for (const auto& l : labels) out += l;
    return out.empty() ? "{}" : out;
  }
  out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// SetSystem

SetSystem SetSystem::build(GroundSet ground, const std::vector<ElementSet>& family, const OrderSpec& order) {
  const std::size_t n = ground.size();
  const std::size_t m = family.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty ground set");
  if (m == 0) throw Error(ErrorCode::InvalidInput, "family must not be empty");

  const ElementSet all = ground.all();
  ElementSet covered;
  std::set<ElementSet::Bits> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (family[i].empty()) throw Error(ErrorCode::EmptySetInFamily, "member " + std::to_string(i) + " is empty");
    if (!family[i].subset_of(all)) {
      throw Error(ErrorCode::InvalidInput, "member " + std::to_string(i) + " has elements outside the ground set");
    }
    if (!seen.insert(family[i].bits()).second) {
      throw Error(ErrorCode::DuplicateSet, "member " + std::to_string(i) + " (" + ground.format(family[i]) +
                                               ") occurs twice");
    }
    covered = covered | family[i];
  }
  if (covered != all) {
    throw Error(ErrorCode::CoverViolation, "elements " + ground.format(all - covered) + " are not covered");
  }

  // Order relation in input indexing.
  Matrix<int> rel(m, m, 0);
  for (std::size_t i = 0; i < m; ++i) rel(i, i) = 1;
  for (const auto& [a, b] : order.pairs) {
    if (a >= m || b >= m) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "order pair [" + std::to_string(a) + "," + std::to_string(b) + "] refers to a missing member");
    }
  }
  switch (order.kind) {
    case OrderSpec::Kind::Trivial:
      if (!order.pairs.empty()) throw Error(ErrorCode::InvalidInput, "trivial order takes no pairs");
      break;
    case OrderSpec::Kind::Containment:
      for (const auto& [a, b] : order.pairs) {
        if (!family[a].subset_of(family[b])) {
          throw Error(ErrorCode::OrderContradictsContainment,
                      "pair [" + std::to_string(a) + "," + std::to_string(b) + "]: " + ground.format(family[a]) +
                          " is not contained in " + ground.format(family[b]));
        }
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rel(i, j) = family[i].subset_of(family[j]) ? 1 : 0;
      break;
    case OrderSpec::Kind::Explicit:
      for (const auto& [a, b] : order.pairs) rel(a, b) = 1;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
          if (rel(i, k))
            for (std::size_t j = 0; j < m; ++j)
              if (rel(k, j)) rel(i, j) = 1;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (rel(i, j) && rel(j, i)) {
            throw Error(ErrorCode::CycleInOrder, "members " + std::to_string(i) + " and " + std::to_string(j) +
                                                     " precede each other");
          }
      break;
  }

  // Linear extension, larger members first. A member becomes available once
  // everything above it has been placed.
  std::vector<std::size_t> order_out;
  std::vector<bool> placed(m, false);
  std::vector<std::size_t> pending_above(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && rel(i, j)) ++pending_above[i];
  auto better = [&](std::size_t a, std::size_t b) {
    if (family[a].size() != family[b].size()) return family[a].size() > family[b].size();
    return lex_less(family[a], family[b]);
  };
  for (std::size_t step = 0; step < m; ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < m; ++i) {
      if (placed[i] || pending_above[i] != 0) continue;
      if (!pick || better(i, *pick)) pick = i;
    }
    if (!pick) throw Error(ErrorCode::Internal, "no linear extension found");
    placed[*pick] = true;
    order_out.push_back(*pick);
    for (std::size_t i = 0; i < m; ++i)
      if (i != *pick && rel(i, *pick)) --pending_above[i];
  }

  SetSystem sys;
  sys.ground_ = std::move(ground);
  sys.kind_ = order.kind;
  sys.to_input_ = order_out;
  sys.from_input_.assign(m, 0);
  for (std::size_t k = 0; k < m; ++k) sys.from_input_[order_out[k]] = k;
  for (auto i : order_out) sys.sets_.push_back(family[i]);

  sys.leq_ = Matrix<int>(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sys.leq_(i, j) = rel(order_out[i], order_out[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sys.leq_(i, j)) throw Error(ErrorCode::Internal, "incidence matrix is not lower triangular");

  // Z is unit lower triangular, so Z^{-1} follows by forward substitution.
  sys.mobius_ = Matrix<Integer>(m, m, Integer(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = j; i < m; ++i) {
      Integer acc = (i == j) ? 1 : 0;
      for (std::size_t k = j; k < i; ++k)
        if (sys.leq_(i, k)) acc -= sys.mobius_(k, j);
      sys.mobius_(i, j) = acc;
    }
  }

  sys.containment_ordered_ = true;
  for (std::size_t i = 0; i < m && sys.containment_ordered_; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((sys.leq_(i, j) != 0) != sys.sets_[i].subset_of(sys.sets_[j])) {
        sys.containment_ordered_ = false;
        break;
      }
  sys.weakly_union_closed_ = check_weakly_union_closed(sys).holds;
  return sys;
}

std::optional<std::size_t> SetSystem::find(ElementSet s) const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i] == s) return i;
  return std::nullopt;
}

Matrix<Integer> mobius_matrix(const SetSystem& sys) { return sys.mobius(); }

// ---------------------------------------------------------------------------
// Structure predicates

PredicateResult check_weakly_union_closed(const SetSystem& sys) {
  const auto& F = sys.sets();
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (F[i].intersects(F[j]) && !sys.find(F[i] | F[j])) {
        return PredicateResult::fail({i, j}, "intersecting members whose union is missing");
      }
  return {};
}

PredicateResult check_union_closed(const SetSystem& sys) {
  const auto& F = sys.sets();
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (!sys.find(F[i] | F[j])) return PredicateResult::fail({i, j}, "union is missing");
  return {};
}

PredicateResult check_algebra(const SetSystem& sys, std::vector<ElementSet>* atoms) {
  const auto& F = sys.sets();
  const ElementSet all = sys.all();
  if (!sys.find(all)) return PredicateResult::fail({}, "ground set is not a member");
  for (std::size_t i = 0; i < F.size(); ++i) {
    ElementSet comp = all - F[i];
    if (!comp.empty() && !sys.find(comp)) return PredicateResult::fail({i}, "complement is missing");
  }
  if (auto uc = check_union_closed(sys); !uc) return uc;
  if (atoms) {
    atoms->clear();
    for (std::size_t i = 0; i < F.size(); ++i) {
      bool minimal = std::none_of(F.begin(), F.end(), [&](ElementSet g) { return g != F[i] && g.subset_of(F[i]); });
      if (minimal) atoms->push_back(F[i]);
    }
  }
  return {};
}

PredicateResult check_consecutive(const SetSystem& sys) {
  const std::size_t m = sys.m();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (!sys.precedes(f, g)) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (!sys.precedes(g, h)) continue;
        if (!(sys.set(f) & sys.set(h)).subset_of(sys.set(g))) {
          return PredicateResult::fail({f, g, h}, "F <= G <= H but F & H is not inside G");
        }
      }
    }
  return {};
}

PredicateResult check_intersection_system(const SetSystem& sys) {
  if (auto c = check_consecutive(sys); !c) return c;
  const std::size_t m = sys.m();

  // (IS0): intersecting members have a common upper bound inside their union.
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = f + 1; g < m; ++g) {
      if (!sys.set(f).intersects(sys.set(g))) continue;
      const ElementSet u = sys.set(f) | sys.set(g);
      bool found = false;
      for (std::size_t j = 0; j < m && !found; ++j)
        found = sys.set(j).subset_of(u) && sys.precedes(f, j) && sys.precedes(g, j);
      if (!found) return PredicateResult::fail({f, g}, "(IS0) no join inside the union");
    }

  // (IS1): any two members above F have a join and a meet above F inside their union.
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = g + 1; h < m; ++h) {
      const ElementSet u = sys.set(g) | sys.set(h);
      bool has_join = false;
      std::vector<std::size_t> meets;
      for (std::size_t k = 0; k < m; ++k) {
        if (!sys.set(k).subset_of(u)) continue;
        if (sys.precedes(g, k) && sys.precedes(h, k)) has_join = true;
        if (sys.precedes(k, g) && sys.precedes(k, h)) meets.push_back(k);
      }
      for (std::size_t f = 0; f < m; ++f) {
        if (!sys.precedes(f, g) || !sys.precedes(f, h)) continue;
        if (!has_join) return PredicateResult::fail({f, g, h}, "(IS1) no join inside the union");
        bool meet = std::any_of(meets.begin(), meets.end(), [&](std::size_t k) { return sys.precedes(f, k); });
        if (!meet) return PredicateResult::fail({f, g, h}, "(IS1) no meet above F inside the union");
      }
    }
  return {};
}

StructureReport classify(const SetSystem& sys) {
  StructureReport r;
  const std::size_t m = sys.m();
  for (std::size_t i = 0; i < m && r.trivially_ordered; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && sys.precedes(i, j)) {
        r.trivially_ordered = PredicateResult::fail({i, j}, "distinct comparable members");
        break;
      }
  for (std::size_t i = 0; i < m && r.containment_ordered; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sys.precedes(i, j) != sys.set(i).subset_of(sys.set(j))) {
        r.containment_ordered = PredicateResult::fail(
            {i, j}, sys.precedes(i, j) ? "ordered but not contained" : "contained but not ordered");
        break;
      }
  r.weakly_union_closed = check_weakly_union_closed(sys);
  r.union_closed = check_union_closed(sys);
  r.algebra = check_algebra(sys, &r.atoms);
  r.consecutive = check_consecutive(sys);
  r.intersection_system = r.consecutive ? check_intersection_system(sys) : r.consecutive;
  return r;
}

std::vector<std::size_t> restrict_to(const SetSystem& sys, ElementSet x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sys.m(); ++i)
    if (sys.set(i).subset_of(x)) out.push_back(i);
  return out;
}

std::vector<std::size_t> maximal_in(const SetSystem& sys, ElementSet x) {
  auto inside = restrict_to(sys, x);
  std::vector<std::size_t> out;
  for (auto i : inside) {
    bool dominated = std::any_of(inside.begin(), inside.end(), [&](std::size_t j) {
      return j != i && sys.set(i).subset_of(sys.set(j));
    });
    if (!dominated) out.push_back(i);
  }
  if (sys.is_weakly_union_closed()) {
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = a + 1; b < out.size(); ++b)
        if (sys.set(out[a]).intersects(sys.set(out[b]))) {
          throw Error(ErrorCode::Internal, "maximal members of a weakly union-closed family intersect");
        }
  }
  return out;
}

SetSystem relabel(const SetSystem& sys, const std::vector<std::size_t>& perm) {
  const std::size_t n = sys.n();
  if (perm.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length differs from n");
  std::vector<std::string> labels(n);
  std::vector<bool> hit(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (perm[e] >= n || hit[perm[e]]) throw Error(ErrorCode::InvalidInput, "not a permutation");
    hit[perm[e]] = true;
    labels[perm[e]] = sys.ground().label(e);
  }
  std::vector<ElementSet> family;
  for (auto s : sys.sets()) {
    ElementSet t;
    for (auto e : s.elements()) t = t.with(perm[e]);
    family.push_back(t);
  }
  OrderSpec order{sys.order_kind(), {}};
  if (order.kind == OrderSpec::Kind::Explicit) {
    for (std::size_t i = 0; i < sys.m(); ++i)
      for (std::size_t j = 0; j < sys.m(); ++j)
        if (i != j && sys.precedes(i, j)) order.pairs.emplace_back(i, j);
  }
  return SetSystem::build(GroundSet(std::move(labels)), family, order);
}

}  // namespace ordchoquet
