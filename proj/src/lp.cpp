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

#include "ordchoquet/lp.hpp"

#include "ordchoquet/error.hpp"

#include <optional>

namespace ordchoquet::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dictionary form: for each row r, x[basis[r]] = rhs[r] - sum_j t[r][j] x[nonbasis[j]],
// objective z = z0 + sum_j obj[j] x[nonbasis[j]]. Variables 0..n-1 are the
// structural ones, n..n+m-1 the slacks, n+m the phase-one auxiliary.
class Dictionary {
public:
  Dictionary(const Problem& p) : n_(p.c.size()), m_(p.b.size()) {
    t_.assign(m_, std::vector<Rational>(n_));
    for (std::size_t r = 0; r < m_; ++r) {
      if (p.a[r].size() != n_) throw Error(ErrorCode::DimensionMismatch, "constraint row has wrong length");
      for (std::size_t j = 0; j < n_; ++j) t_[r][j] = p.a[r][j];
    }
    rhs_ = p.b;
    obj_ = p.c;
    z0_ = 0;
    for (std::size_t j = 0; j < n_; ++j) nonbasis_.push_back(j);
    for (std::size_t r = 0; r < m_; ++r) basis_.push_back(n_ + r);
  }

  Solution solve(const std::vector<Rational>& c) {
    Solution sol;
    if (!phase_one(c)) {
      sol.status = Status::Infeasible;
      return sol;
    }
    if (!iterate()) {
      sol.status = Status::Unbounded;
      return sol;
    }
    sol.status = Status::Optimal;
    sol.value = z0_;
    sol.x.assign(n_, Rational(0));
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (basis_[r] < n_) sol.x[basis_[r]] = rhs_[r];
    sol.duals.assign(m_, Rational(0));
    for (std::size_t j = 0; j < nonbasis_.size(); ++j) {
      auto var = nonbasis_[j];
      if (var >= n_ && var < n_ + m_) sol.duals[var - n_] = -obj_[j];
    }
    return sol;
  }

private:
  void pivot(std::size_t r, std::size_t s) {
    const Rational p = t_[r][s];
    const std::size_t cols = nonbasis_.size();
    rhs_[r] /= p;
    // Rows are sparse; only the pivot row's non-zero columns change elsewhere.
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < cols; ++j)
      if (j != s && t_[r][j] != 0) {
        t_[r][j] /= p;
        nonzero.push_back(j);
      }
    t_[r][s] = Rational(1) / p;

    Rational product;
    auto eliminate = [&](std::vector<Rational>& row, Rational& constant, const Rational& factor) {
      for (auto j : nonzero) {
        product = factor * t_[r][j];
        row[j] -= product;
      }
      row[s] = -factor * t_[r][s];
      if (rhs_[r] != 0) {
        product = factor * rhs_[r];
        constant -= product;
      }
    };
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][s] == 0) continue;
      const Rational factor = t_[i][s];
      eliminate(t_[i], rhs_[i], factor);
    }
    if (obj_[s] != 0) {
      const Rational factor = obj_[s];
      Rational neg_z0 = -z0_;
      eliminate(obj_, neg_z0, factor);
      z0_ = -neg_z0;
    }
    std::swap(basis_[r], nonbasis_[s]);
  }

  // Bland's rule: lowest-numbered improving variable enters, ratio ties go to
  // the lowest-numbered basic variable. Returns false on unboundedness.
  bool iterate() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < nonbasis_.size(); ++j)
        if (obj_[j] > 0 && (!enter || nonbasis_[j] < nonbasis_[*enter])) enter = j;
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][*enter] <= 0) continue;
        Rational ratio = rhs_[r] / t_[r][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  bool phase_one(const std::vector<Rational>& c) {
    std::optional<std::size_t> worst;
    for (std::size_t r = 0; r < m_; ++r)
      if (rhs_[r] < 0 && (!worst || rhs_[r] < rhs_[*worst])) worst = r;
    if (!worst) return true;

    const std::size_t aux = n_ + m_;
    nonbasis_.push_back(aux);
    for (auto& row : t_) row.push_back(Rational(-1));
    obj_.assign(nonbasis_.size(), Rational(0));
    obj_.back() = -1;
    z0_ = 0;
    pivot(*worst, nonbasis_.size() - 1);
    if (!iterate()) throw Error(ErrorCode::Internal, "phase one reported unbounded");
    if (z0_ < 0) return false;

    // Drive the auxiliary variable out of the basis if it is still there at level 0.
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] != aux) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < nonbasis_.size(); ++j)
        if (t_[r][j] != 0 && (!col || nonbasis_[j] < nonbasis_[*col])) col = j;
      if (col) {
        pivot(r, *col);
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
      break;
    }
    for (std::size_t j = 0; j < nonbasis_.size(); ++j) {
      if (nonbasis_[j] != aux) continue;
      nonbasis_.erase(nonbasis_.begin() + static_cast<std::ptrdiff_t>(j));
      for (auto& row : t_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
      break;
    }

    // Re-express the original objective in the current nonbasis.
    obj_.assign(nonbasis_.size(), Rational(0));
    z0_ = 0;
    for (std::size_t j = 0; j < nonbasis_.size(); ++j)
      if (nonbasis_[j] < n_) obj_[j] += c[nonbasis_[j]];
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] >= n_ || c[basis_[r]] == 0) continue;
      const Rational& cr = c[basis_[r]];
      z0_ += cr * rhs_[r];
      for (std::size_t j = 0; j < nonbasis_.size(); ++j) obj_[j] -= cr * t_[r][j];
    }
    return true;
  }

  std::size_t n_, m_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> obj_;
  Rational z0_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonbasis_;
};

void check_inputs(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  if (v.size() != sys.m()) throw Error(ErrorCode::DimensionMismatch, "valuation length differs from family size");
  if (f.size() != sys.n()) throw Error(ErrorCode::DimensionMismatch, "weighting length differs from ground set size");
  if (!f.is_nonnegative()) throw Error(ErrorCode::NegativeWeighting, "the covering program needs f >= 0");
}

}  // namespace

Solution maximize(const Problem& problem) {
  if (problem.a.size() != problem.b.size()) throw Error(ErrorCode::DimensionMismatch, "rows of A and b differ");
  Dictionary d(problem);
  return d.solve(problem.c);
}

LPResult solve_core_min(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  check_inputs(sys, v, f);
  // max -f.x  s.t.  -x(F) <= -v(F)
  Problem p;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    std::vector<Rational> row(sys.n(), Rational(0));
    for (auto e : sys.set(i).elements()) row[e] = -1;
    p.a.push_back(std::move(row));
    p.b.push_back(-v[i]);
  }
  for (std::size_t e = 0; e < sys.n(); ++e) p.c.push_back(-f[e]);

  Solution s = maximize(p);
  LPResult r;
  r.status = s.status;
  if (s.status == Status::Infeasible) throw Error(ErrorCode::Infeasible, "core program reported infeasible");
  if (s.status == Status::Unbounded) throw Error(ErrorCode::Unbounded, "core program reported unbounded");
  r.value = -s.value;
  r.primal_x = std::move(s.x);
  r.dual_y = std::move(s.duals);
  return r;
}

LPResult solve_packing_max(const SetSystem& sys, const Valuation& v, const Weighting& f) {
  check_inputs(sys, v, f);
  // max v.y  s.t.  sum_{F containing e} y_F <= f_e
  Problem p;
  for (std::size_t e = 0; e < sys.n(); ++e) {
    std::vector<Rational> row(sys.m(), Rational(0));
    for (std::size_t i = 0; i < sys.m(); ++i)
      if (sys.set(i).contains(e)) row[i] = 1;
    p.a.push_back(std::move(row));
    p.b.push_back(f[e]);
  }
  p.c = v.values();

  Solution s = maximize(p);
  LPResult r;
  r.status = s.status;
  if (s.status == Status::Infeasible) throw Error(ErrorCode::Infeasible, "packing program reported infeasible");
  if (s.status == Status::Unbounded) throw Error(ErrorCode::Unbounded, "packing program reported unbounded");
  r.value = s.value;
  r.dual_y = std::move(s.x);
  r.primal_x = std::move(s.duals);
  return r;
}

std::string verify_certificates(const SetSystem& sys, const Valuation& v, const Weighting& f, const LPResult& r) {
  if (r.status != Status::Optimal) return "result is not optimal";
  if (r.primal_x.size() != sys.n() || r.dual_y.size() != sys.m()) return "certificate has wrong dimension";
  std::vector<Rational> load(sys.n(), Rational(0));
  for (std::size_t e = 0; e < sys.n(); ++e)
    if (r.primal_x[e] < 0) return "x has a negative entry";
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (r.dual_y[i] < 0) return "y has a negative entry";
    Rational cover = 0;
    for (auto e : sys.set(i).elements()) {
      cover += r.primal_x[e];
      load[e] += r.dual_y[i];
    }
    if (cover < v[i]) return "x violates the core constraint of member " + std::to_string(i);
    if (r.dual_y[i] > 0 && cover != v[i]) return "complementary slackness fails at member " + std::to_string(i);
  }
  for (std::size_t e = 0; e < sys.n(); ++e) {
    if (load[e] > f[e]) return "y overloads element " + std::to_string(e);
    if (r.primal_x[e] > 0 && load[e] != f[e]) return "complementary slackness fails at element " + std::to_string(e);
  }
  if (dot(f.values(), r.primal_x) != r.value) return "<f,x> differs from the reported value";
  if (dot(v.values(), r.dual_y) != r.value) return "<v,y> differs from the reported value";
  return {};
}

}  // namespace ordchoquet::lp
