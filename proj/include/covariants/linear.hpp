#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covariants/numeric.hpp"

namespace covariants::lp {

enum class Rel { Eq, Ge, Le };

struct Constraint {
  std::vector<Rat> coeffs;
  Rel rel = Rel::Eq;
  Rat rhs;
};

// A small linear system over exact rationals. Variables marked nonneg
// carry an implicit x_j >= 0; the rest are free.
struct System {
  int num_vars = 0;
  std::vector<bool> nonneg;
  std::vector<Constraint> rows;

  void add_row(std::vector<Rat> coeffs, Rel rel, Rat rhs) {
    rows.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
  }
};

struct Optimum {
  enum class Kind { Infeasible, Optimal, Unbounded };
  Kind kind = Kind::Infeasible;
  Rat value;
  std::vector<Rat> point;  // values of the original variables when Optimal
};

namespace detail {

// Dense two-phase primal simplex with Bland's rule; exact arithmetic, so
// termination and correctness are unconditional.
class Tableau {
 public:
  // a: m x n, all variables implicitly >= 0, constraints a x = b.
  Tableau(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::size_t n)
      : m_(a.size()), n_(n), rows_(std::move(a)), rhs_(std::move(b)) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs_[i].sign() < 0) {
        for (auto& v : rows_[i]) v = -v;
        rhs_[i] = -rhs_[i];
      }
    }
    // Artificial columns n_..n_+m_-1 form the starting basis.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) rows_[i].push_back(Rat(i == k ? 1 : 0));
      basis_.push_back(static_cast<int>(n_ + i));
    }
  }

  // Phase 1: maximize -(sum of artificials). Returns false if infeasible.
  bool phase1() {
    std::vector<Rat> cost(n_ + m_, Rat(0));
    for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = Rat(-1);
    run(cost, n_ + m_);
    if (objective_value(cost).sign() < 0) return false;
    // Pivot artificials out of the basis; rows where that is impossible
    // are redundant and get dropped.
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < static_cast<int>(n_)) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && rows_[i][j].is_zero()) ++j;
      if (j < n_) {
        pivot(i, j);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
    return true;
  }

  // Phase 2 on the original columns. Returns false when unbounded.
  bool phase2(const std::vector<Rat>& cost) {
    std::vector<Rat> c(cost);
    c.resize(n_ + m_, Rat(0));
    return run(c, n_);
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < static_cast<int>(n_)) x[basis_[i]] = rhs_[i];
    return x;
  }

  Rat objective_value(const std::vector<Rat>& cost) const {
    Rat v(0);
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

 private:
  // Bland's rule simplex over columns [0, limit). Returns false iff unbounded.
  bool run(const std::vector<Rat>& cost, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_cost(cost, j).sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  Rat reduced_cost(const std::vector<Rat>& cost, std::size_t j) const {
    Rat z(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!rows_[i][j].is_zero()) z += cost[basis_[i]] * rows_[i][j];
    }
    return cost[j] - z;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rat p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      Rat f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = static_cast<int>(c);
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<int> basis_;
};

struct StandardForm {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  // Standard column -> (original variable, sign); free variables split
  // into a positive and a negative part.
  std::vector<std::pair<int, int>> col_map;
  std::size_t num_cols = 0;
};

inline StandardForm to_standard(const System& sys) {
  StandardForm sf;
  for (int j = 0; j < sys.num_vars; ++j) {
    sf.col_map.emplace_back(j, 1);
    if (!sys.nonneg[j]) sf.col_map.emplace_back(j, -1);
  }
  std::size_t base = sf.col_map.size();
  std::size_t extra = 0;
  for (const auto& row : sys.rows)
    if (row.rel != Rel::Eq) ++extra;
  sf.num_cols = base + extra;
  std::size_t next_slack = base;
  for (const auto& row : sys.rows) {
    std::vector<Rat> r(sf.num_cols, Rat(0));
    for (std::size_t k = 0; k < sf.col_map.size(); ++k) {
      auto [orig, sgn] = sf.col_map[k];
      if (!row.coeffs[orig].is_zero()) r[k] = sgn > 0 ? row.coeffs[orig] : -row.coeffs[orig];
    }
    if (row.rel == Rel::Ge) r[next_slack++] = Rat(-1);
    if (row.rel == Rel::Le) r[next_slack++] = Rat(1);
    sf.a.push_back(std::move(r));
    sf.b.push_back(row.rhs);
  }
  return sf;
}

inline std::vector<Rat> recover(const System& sys, const StandardForm& sf,
                                const std::vector<Rat>& std_x) {
  std::vector<Rat> x(sys.num_vars, Rat(0));
  for (std::size_t k = 0; k < sf.col_map.size(); ++k) {
    auto [orig, sgn] = sf.col_map[k];
    x[orig] += sgn > 0 ? std_x[k] : -std_x[k];
  }
  return x;
}

}  // namespace detail

inline std::optional<std::vector<Rat>> feasible_point(const System& sys) {
  auto sf = detail::to_standard(sys);
  detail::Tableau t(sf.a, sf.b);
  if (!t.phase1()) return std::nullopt;
  return detail::recover(sys, sf, t.solution());
}

inline Optimum maximize(const System& sys, const std::vector<Rat>& objective) {
  auto sf = detail::to_standard(sys);
  std::vector<Rat> cost(sf.num_cols, Rat(0));
  for (std::size_t k = 0; k < sf.col_map.size(); ++k) {
    auto [orig, sgn] = sf.col_map[k];
    cost[k] = sgn > 0 ? objective[orig] : -objective[orig];
  }
  detail::Tableau t(sf.a, sf.b);
  Optimum out;
  if (!t.phase1()) {
    out.kind = Optimum::Kind::Infeasible;
    return out;
  }
  if (!t.phase2(cost)) {
    out.kind = Optimum::Kind::Unbounded;
    return out;
  }
  out.kind = Optimum::Kind::Optimal;
  out.value = t.objective_value(cost);
  out.point = detail::recover(sys, sf, t.solution());
  return out;
}

}  // namespace covariants::lp
