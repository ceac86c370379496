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

// Independent reference computations. Nothing here calls the library's LP,
// Moebius, extension or greedy code; the only shared pieces are SetSystem
// membership/order queries and Rational.

#include "ordchoquet/rational.hpp"
#include "ordchoquet/set_system.hpp"
#include "ordchoquet/valuation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using ordchoquet::ElementSet;
using ordchoquet::Rational;
using ordchoquet::SetSystem;
using Mat = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

/// Solves the square system a x = b; nullopt when singular.
inline std::optional<Vec> solve(Mat a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Optimum of min/max c.x over {x : rows . x >= rhs} by enumerating every
/// choice of dim tight rows. The caller guarantees the optimum is attained at
/// a vertex (pointed region, bounded objective).
inline Rational vertex_optimum(const Mat& rows, const Vec& rhs, const Vec& c, bool maximize) {
  const std::size_t dim = c.size();
  const std::size_t k = rows.size();
  if (k > 22) throw std::logic_error("vertex enumeration too large");
  std::optional<Rational> best;
  std::vector<std::size_t> pick(dim);
  std::iota(pick.begin(), pick.end(), 0);
  if (dim == 0) return 0;
  while (true) {
    Mat a;
    Vec b;
    for (auto r : pick) {
      a.push_back(rows[r]);
      b.push_back(rhs[r]);
    }
    if (auto x = solve(a, b)) {
      bool feasible = true;
      for (std::size_t r = 0; r < k && feasible; ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < dim; ++j) lhs += rows[r][j] * (*x)[j];
        feasible = lhs >= rhs[r];
      }
      if (feasible) {
        Rational value = 0;
        for (std::size_t j = 0; j < dim; ++j) value += c[j] * (*x)[j];
        if (!best || (maximize ? value > *best : value < *best)) best = value;
      }
    }
    // next combination
    std::size_t i = dim;
    while (i > 0 && pick[i - 1] == k - dim + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) throw std::logic_error("no feasible vertex");
  return *best;
}

/// min <f,x> s.t. x >= 0, x(F) >= v(F).
inline Rational core_min(const SetSystem& sys, const ordchoquet::Valuation& v, const ordchoquet::Weighting& f) {
  Mat rows;
  Vec rhs;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    Vec row(sys.n(), Rational(0));
    for (std::size_t e = 0; e < sys.n(); ++e)
      if (sys.set(i).contains(e)) row[e] = 1;
    rows.push_back(row);
    rhs.push_back(v[i]);
  }
  for (std::size_t e = 0; e < sys.n(); ++e) {
    Vec row(sys.n(), Rational(0));
    row[e] = 1;
    rows.push_back(row);
    rhs.push_back(0);
  }
  return vertex_optimum(rows, rhs, f.values(), false);
}

/// max <v,y> s.t. y >= 0, sum y_F 1_F <= f.
inline Rational packing_max(const SetSystem& sys, const ordchoquet::Valuation& v, const ordchoquet::Weighting& f) {
  Mat rows;
  Vec rhs;
  for (std::size_t e = 0; e < sys.n(); ++e) {
    Vec row(sys.m(), Rational(0));
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.set(i).contains(e)) row[i] = -1;
    rows.push_back(row);
    rhs.push_back(-f[e]);
  }
  for (std::size_t i = 0; i < sys.m(); ++i) {
    Vec row(sys.m(), Rational(0));
    row[i] = 1;
    rows.push_back(row);
    rhs.push_back(0);
  }
  return vertex_optimum(rows, rhs, v.values(), true);
}

inline bool small_enough(const SetSystem& sys) { return sys.n() + sys.m() <= 14; }

/// Incidence matrix rebuilt from the order relation.
inline Mat incidence(const SetSystem& sys) {
  Mat z(sys.m(), Vec(sys.m(), Rational(0)));
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.m(); ++j)
      if (sys.precedes(i, j)) z[i][j] = 1;
  return z;
}

/// Gauss-Jordan inverse.
inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat inv(n, Vec(n, Rational(0)));
  for (std::size_t col = 0; col < n; ++col) {
    Vec e(n, Rational(0));
    e[col] = 1;
    auto x = solve(a, e);
    if (!x) throw std::logic_error("singular");
    for (std::size_t r = 0; r < n; ++r) inv[r][col] = (*x)[r];
  }
  return inv;
}

/// beta with v = beta Z.
inline Vec beta(const SetSystem& sys, const ordchoquet::Valuation& v) {
  Mat zt = incidence(sys);
  // transpose: beta Z = v  <=>  Z^T beta^T = v^T
  Mat t(sys.m(), Vec(sys.m(), Rational(0)));
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.m(); ++j) t[j][i] = zt[i][j];
  return *solve(t, v.values());
}

inline ordchoquet::Valuation zeta(const SetSystem& sys, std::size_t i) {
  ordchoquet::Valuation z(sys.m());
  for (std::size_t j = 0; j < sys.m(); ++j)
    if (sys.precedes(i, j)) z[j] = 1;
  return z;
}

/// Choquet integral by definition: split beta by sign, integrate both belief
/// parts with the brute-force covering LP.
inline Rational integral(const SetSystem& sys, const ordchoquet::Valuation& v, const ordchoquet::Weighting& f) {
  Vec b = beta(sys, v);
  ordchoquet::Valuation plus(sys.m()), minus(sys.m());
  for (std::size_t i = 0; i < sys.m(); ++i) {
    auto z = zeta(sys, i);
    for (std::size_t j = 0; j < sys.m(); ++j) {
      if (b[i] > 0) plus[j] += b[i] * z[j];
      if (b[i] < 0) minus[j] -= b[i] * z[j];
    }
  }
  Rational value = core_min(sys, plus, f);
  if (!minus.is_zero()) value -= core_min(sys, minus, f);
  return value;
}

/// Ascending-order form: sum_k (f_(k) - f_(k-1)) vhat({f >= f_(k)}).
inline Rational classical(const ordchoquet::SetFunction& vhat, const ordchoquet::Weighting& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  Rational total = 0, prev = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    ElementSet upper;
    for (std::size_t t = k; t < order.size(); ++t) upper = upper.with(order[t]);
    total += (f[order[k]] - prev) * vhat[upper];
    prev = f[order[k]];
  }
  return total;
}

/// Boolean Moebius transform by inclusion-exclusion.
inline ordchoquet::SetFunction boolean_mobius(const ordchoquet::SetFunction& v) {
  ordchoquet::SetFunction m(v.n());
  for (std::size_t s = 0; s < v.size(); ++s)
    for (std::size_t t = s;; t = (t - 1) & s) {
      const bool odd = (std::popcount(s) - std::popcount(t)) % 2 != 0;
      if (odd) {
        m[ElementSet(s)] -= v[ElementSet(t)];
      } else {
        m[ElementSet(s)] += v[ElementSet(t)];
      }
      if (t == 0) break;
    }
  return m;
}

/// vhat(S) = sum_F beta_F [F inside S], beta from the oracle inverse.
inline ordchoquet::SetFunction extension(const SetSystem& sys, const ordchoquet::Valuation& v) {
  Vec b = beta(sys, v);
  ordchoquet::SetFunction out(sys.n());
  for (std::size_t s = 0; s < out.size(); ++s)
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.set(i).subset_of(ElementSet(s))) out[ElementSet(s)] += b[i];
  return out;
}

inline bool weakly_union_closed(const SetSystem& sys) {
  for (auto a : sys.sets())
    for (auto b : sys.sets())
      if (a.intersects(b) && !sys.find(a | b)) return false;
  return true;
}

inline bool consecutive(const SetSystem& sys) {
  for (std::size_t f = 0; f < sys.m(); ++f)
    for (std::size_t g = 0; g < sys.m(); ++g)
      for (std::size_t h = 0; h < sys.m(); ++h)
        if (sys.precedes(f, g) && sys.precedes(g, h) && !(sys.set(f) & sys.set(h)).subset_of(sys.set(g))) return false;
  return true;
}

inline bool supermodular(const ordchoquet::SetFunction& v) {
  for (std::size_t s = 0; s < v.size(); ++s)
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[ElementSet(s | t)] + v[ElementSet(s & t)] < v[ElementSet(s)] + v[ElementSet(t)]) return false;
  return true;
}

inline Rational min_on(const ordchoquet::Weighting& f, ElementSet s) {
  std::optional<Rational> best;
  for (std::size_t e = 0; e < f.size(); ++e)
    if (s.contains(e) && (!best || f[e] < *best)) best = f[e];
  return best.value_or(Rational(0));
}

}  // namespace oracle
