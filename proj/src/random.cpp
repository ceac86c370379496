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

#include "ordchoquet/random.hpp"

#include "ordchoquet/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ordchoquet {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidInput, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t q = uniform(1, max_den);
  const std::int64_t p = uniform(lo * q, hi * q);
  Rational r(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[index(i)]);
  return p;
}

namespace {

ElementSet random_nonempty(Rng& rng, std::size_t n) {
  return ElementSet(static_cast<ElementSet::Bits>(rng.uniform(1, (std::int64_t{1} << n) - 1)));
}

std::vector<ElementSet> random_family(Rng& rng, std::size_t n, std::size_t count) {
  std::set<ElementSet::Bits> seen;
  std::vector<ElementSet> family;
  const std::size_t limit = std::min<std::size_t>(count, (std::size_t{1} << n) - 1);
  while (family.size() < limit) {
    ElementSet s = random_nonempty(rng, n);
    if (seen.insert(s.bits()).second) family.push_back(s);
  }
  return family;
}

void add_cover(std::vector<ElementSet>& family, std::size_t n) {
  ElementSet covered;
  for (auto s : family) covered = covered | s;
  ElementSet rest = ElementSet::full(n) - covered;
  if (!rest.empty()) family.push_back(rest);
}

// Closes under unions of pairs; intersecting pairs only when `weak` is set.
std::vector<ElementSet> union_closure(std::vector<ElementSet> family, bool weak) {
  std::set<ElementSet::Bits> seen;
  for (auto s : family) seen.insert(s.bits());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (weak && !family[i].intersects(family[j])) continue;
      ElementSet u = family[i] | family[j];
      if (seen.insert(u.bits()).second) family.push_back(u);
    }
  return family;
}

SetSystem closed_system(Rng& rng, std::size_t n, std::size_t m_max, bool weak) {
  std::size_t seeds = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) + 1));
  for (;;) {
    auto family = random_family(rng, n, seeds);
    add_cover(family, n);
    family = union_closure(std::move(family), weak);
    if (family.size() <= m_max || seeds == 1) {
      return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::containment());
    }
    --seeds;
  }
}

// Keeps each covering pair of the order with probability 3/4 and adds a few
// random pairs consistent with the current indexing.
SetSystem perturb_order(Rng& rng, const SetSystem& sys) {
  std::vector<OrderSpec::Pair> pairs;
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!sys.precedes(i, j)) continue;
      bool covering = true;
      for (std::size_t k = j + 1; k < i && covering; ++k)
        if (sys.precedes(i, k) && sys.precedes(k, j)) covering = false;
      if (covering && rng.chance(3, 4)) pairs.emplace_back(i, j);
    }
  const std::size_t extra = rng.index(3);
  for (std::size_t t = 0; t < extra && sys.m() > 1; ++t) {
    std::size_t a = rng.index(sys.m()), b = rng.index(sys.m());
    if (a != b) pairs.emplace_back(std::max(a, b), std::min(a, b));
  }
  return SetSystem::build(sys.ground(), sys.sets(), OrderSpec::explicit_pairs(std::move(pairs)));
}

// F(X) of the lattice fixture for a random X, over the elements it covers,
// after a random renaming of {1..6}.
std::optional<SetSystem> lattice_subsystem(Rng& rng, std::size_t n_max) {
  SetSystem base = relabel(lattice_fixture(), rng.permutation(6));
  ElementSet x = base.all();
  if (n_max < 6 || rng.chance(1, 2)) {
    x = random_nonempty(rng, 6);
  }
  auto idx = restrict_to(base, x);
  if (idx.empty()) return std::nullopt;
  ElementSet covered;
  for (auto i : idx) covered = covered | base.set(i);
  if (covered.size() > n_max) return std::nullopt;

  // Compress the covered elements onto positions 0..k-1, keeping labels.
  std::vector<std::size_t> pos(6, 0);
  std::vector<std::string> labels;
  for (auto e : covered.elements()) {
    pos[e] = labels.size();
    labels.push_back(base.ground().label(e));
  }
  std::vector<ElementSet> family;
  for (auto i : idx) {
    ElementSet s;
    for (auto e : base.set(i).elements()) s = s.with(pos[e]);
    family.push_back(s);
  }
  std::vector<OrderSpec::Pair> pairs;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b && base.precedes(idx[a], idx[b])) pairs.emplace_back(a, b);
  return SetSystem::build(GroundSet(labels), family, OrderSpec::explicit_pairs(std::move(pairs)));
}

}  // namespace

SetSystem random_containment_system(Rng& rng, std::size_t n, std::size_t m_max) {
  const std::size_t cap = std::max<std::size_t>(1, std::min(m_max - 1, (std::size_t{1} << n) - 1));
  auto family = random_family(rng, n, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cap))));
  add_cover(family, n);
  return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::containment());
}

SetSystem random_weakly_union_closed(Rng& rng, std::size_t n, std::size_t m_max) {
  return closed_system(rng, n, m_max, true);
}

SetSystem random_union_closed(Rng& rng, std::size_t n, std::size_t m_max) {
  return closed_system(rng, n, m_max, false);
}

SetSystem random_algebra(Rng& rng, std::size_t n, std::size_t m_max) {
  std::size_t blocks = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
  while (blocks > 1 && (std::size_t{1} << blocks) - 1 > m_max) --blocks;
  // Every block gets at least one element.
  auto perm = rng.permutation(n);
  std::vector<ElementSet> atoms(blocks);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t b = k < blocks ? k : rng.index(blocks);
    atoms[b] = atoms[b].with(perm[k]);
  }
  std::vector<ElementSet> family;
  for (std::size_t mask = 1; mask < (std::size_t{1} << blocks); ++mask) {
    ElementSet s;
    for (std::size_t b = 0; b < blocks; ++b)
      if ((mask >> b) & 1U) s = s | atoms[b];
    family.push_back(s);
  }
  return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::containment());
}

SetSystem random_poset_system(Rng& rng, std::size_t n, std::size_t m_max) {
  const std::size_t cap = std::max<std::size_t>(1, std::min(m_max - 1, (std::size_t{1} << n) - 1));
  auto family = random_family(rng, n, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cap))));
  add_cover(family, n);
  auto rank = rng.permutation(family.size());
  std::vector<OrderSpec::Pair> pairs;
  const std::int64_t density = rng.uniform(1, 4);
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b)
      if (rank[a] < rank[b] && rng.chance(density, 10)) pairs.emplace_back(a, b);
  return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::explicit_pairs(std::move(pairs)));
}

namespace {

std::optional<SetSystem> intersection_candidate(Rng& rng, std::size_t n, std::size_t m_max) {
  switch (rng.index(4)) {
    case 0:
      return lattice_subsystem(rng, n);
    case 1:
      return perturb_order(rng, random_weakly_union_closed(rng, n, m_max));
    case 2:
      return random_weakly_union_closed(rng, n, m_max);
    default:
      return random_poset_system(rng, n, m_max);
  }
}

// With `exact`, the draw must use all n elements (fixture subsystems may cover fewer).
SetSystem draw_intersection(Rng& rng, std::size_t n, std::size_t m_max, std::size_t& misses, bool exact = false) {
  // Fewer than three members makes every check trivial.
  const std::size_t m_min = n >= 2 ? 3 : 1;
  for (;;) {
    auto candidate = intersection_candidate(rng, n, m_max);
    if (candidate && (!exact || candidate->n() == n) && candidate->m() >= m_min && candidate->m() <= m_max &&
        check_intersection_system(*candidate)) {
      return *std::move(candidate);
    }
    ++misses;
  }
}

// Side by side copies of systems on disjoint blocks of {1..n}, with no order
// relations between blocks.
std::optional<SetSystem> glued_candidate(Rng& rng, std::size_t n, std::size_t m_max, std::size_t& misses) {
  auto perm = rng.permutation(n);
  const std::size_t split = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(n) - 2));
  std::vector<std::vector<std::size_t>> elements(2);
  for (std::size_t k = 0; k < n; ++k) elements[k < split ? 0 : 1].push_back(perm[k]);

  std::vector<ElementSet> family;
  std::vector<OrderSpec::Pair> pairs;
  for (const auto& block : elements) {
    auto part = draw_intersection(rng, block.size(), m_max, misses, true);
    const std::size_t offset = family.size();
    for (auto s : part.sets()) {
      ElementSet mapped;
      for (auto e : s.elements()) mapped = mapped.with(block[e]);
      family.push_back(mapped);
    }
    for (std::size_t i = 0; i < part.m(); ++i)
      for (std::size_t j = 0; j < part.m(); ++j)
        if (i != j && part.precedes(i, j)) pairs.emplace_back(offset + i, offset + j);
  }
  if (family.size() > m_max) return std::nullopt;
  return SetSystem::build(GroundSet::numbered(n), family, OrderSpec::explicit_pairs(std::move(pairs)));
}

}  // namespace

SetSystem random_intersection_system(Rng& rng, std::size_t n, std::size_t m_max, std::size_t* rejected) {
  std::size_t misses = 0;
  if (n >= 4 && rng.chance(1, 2)) {
    for (;;) {
      auto candidate = glued_candidate(rng, n, m_max, misses);
      if (candidate && check_intersection_system(*candidate)) {
        if (rejected) *rejected = misses;
        return *std::move(candidate);
      }
      ++misses;
    }
  }
  auto out = draw_intersection(rng, n, m_max, misses);
  if (rejected) *rejected = misses;
  return out;
}

std::vector<SetSystem> all_union_closed_systems(std::size_t n) {
  if (n == 0 || n > 4) throw Error(ErrorCode::InvalidInput, "exhaustive enumeration supports 1 <= n <= 4");
  const ElementSet::Bits full = (ElementSet::Bits{1} << n) - 1;
  // Proper non-empty subsets; N itself is always present.
  std::vector<ElementSet> proper;
  for (ElementSet::Bits b = 1; b < full; ++b) proper.emplace_back(b);

  std::vector<SetSystem> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << proper.size()); ++mask) {
    std::vector<ElementSet> family{ElementSet(full)};
    for (std::size_t k = 0; k < proper.size(); ++k)
      if ((mask >> k) & 1U) family.push_back(proper[k]);
    std::set<ElementSet::Bits> members;
    for (auto s : family) members.insert(s.bits());
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i)
      for (std::size_t j = i + 1; j < family.size() && closed; ++j)
        closed = members.count((family[i] | family[j]).bits()) > 0;
    if (closed) out.push_back(SetSystem::build(GroundSet::numbered(n), family, OrderSpec::containment()));
  }
  return out;
}

Valuation random_valuation(Rng& rng, std::size_t m) {
  Valuation v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = rng.rational(-3, 3, 4);
  return v;
}

Valuation random_density(Rng& rng, std::size_t m) {
  Valuation w(m);
  for (std::size_t i = 0; i < m; ++i)
    if (rng.chance(2, 3)) w[i] = rng.rational(0, 3, 4);
  return w;
}

Valuation random_belief(Rng& rng, const SetSystem& sys) { return cumulative(sys, random_density(rng, sys.m())); }

Valuation random_capacity(Rng& rng, const SetSystem& sys) {
  Valuation raw(sys.m());
  for (std::size_t i = 0; i < sys.m(); ++i)
    if (rng.chance(1, 2)) raw[i] = rng.rational(0, 4, 3);
  Valuation v(sys.m());
  for (std::size_t j = 0; j < sys.m(); ++j)
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.precedes(i, j) && raw[i] > v[j]) v[j] = raw[i];
  return v;
}

Valuation random_probability(Rng& rng, const SetSystem& algebra) {
  std::vector<ElementSet> atoms;
  if (!check_algebra(algebra, &atoms)) throw Error(ErrorCode::NotAnAlgebra, "probability needs an algebra");
  std::vector<Rational> mass(atoms.size());
  Rational total = 0;
  while (total == 0) {
    total = 0;
    for (auto& a : mass) {
      a = rng.chance(1, 5) ? Rational(0) : rng.rational(0, 3, 4);
      total += a;
    }
  }
  Valuation p(algebra.m());
  for (std::size_t i = 0; i < algebra.m(); ++i)
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (atoms[k].subset_of(algebra.set(i))) p[i] += mass[k] / total;
  return p;
}

Weighting random_weighting(Rng& rng, std::size_t n) {
  Weighting f(n);
  // Small integer ranges produce ties, which exercise the tie-breaking paths.
  const bool coarse = rng.chance(1, 3);
  for (std::size_t e = 0; e < n; ++e) f[e] = coarse ? Rational(rng.uniform(0, 3)) : rng.rational(0, 6, 3);
  return f;
}

std::pair<Weighting, Weighting> random_comonotonic_pair(Rng& rng, std::size_t n) {
  auto order = rng.permutation(n);
  Weighting f(n), g(n);
  Rational a = 0, b = 0;
  for (auto e : order) {
    if (rng.chance(2, 3)) a += rng.rational(0, 2, 3);
    if (rng.chance(2, 3)) b += rng.rational(0, 2, 3);
    f[e] = a;
    g[e] = b;
  }
  return {f, g};
}

SetSystem lattice_fixture() {
  GroundSet g = GroundSet::numbered(6);
  // Input order: 0:12 1:126 2:234 3:236 4:15 5:16 6:45 7:6
  std::vector<ElementSet> family;
  for (const char* s : {"12", "126", "234", "236", "15", "16", "45", "6"}) family.push_back(g.parse(s));
  std::vector<OrderSpec::Pair> pairs = {
      {7, 6}, {7, 5}, {7, 3},  // 6 < 45, 6 < 16, 6 < 236
      {6, 2}, {6, 4},          // 45 < 234, 45 < 15
      {5, 4}, {5, 1},          // 16 < 15, 16 < 126
      {3, 2}, {3, 1},          // 236 < 234, 236 < 126
      {4, 0}, {2, 0}, {1, 0},  // 15, 234, 126 < 12
  };
  return SetSystem::build(g, family, OrderSpec::explicit_pairs(pairs));
}

SetSystem restricted_game_fixture() {
  GroundSet g = GroundSet::numbered(5);
  std::vector<ElementSet> family;
  for (const char* s : {"12345", "1234", "2345", "1345", "124", "234", "345", "12", "35", "2", "5"})
    family.push_back(g.parse(s));
  return SetSystem::build(g, family, OrderSpec::containment());
}

Valuation restricted_game_valuation(const SetSystem& sys) {
  Valuation v(sys.m());
  for (const char* s : {"12345", "12", "35"}) v[*sys.find(sys.ground().parse(s))] = 1;
  return v;
}

Valuation restricted_game_capacity(const SetSystem& sys) {
  const ElementSet a = sys.ground().parse("12"), b = sys.ground().parse("35");
  Valuation v(sys.m());
  for (std::size_t i = 0; i < sys.m(); ++i)
    if (a.subset_of(sys.set(i)) || b.subset_of(sys.set(i))) v[i] = 1;
  return v;
}

}  // namespace ordchoquet
