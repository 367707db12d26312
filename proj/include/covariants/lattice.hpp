#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "covariants/numeric.hpp"

namespace covariants {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVec scale(const IntVec& a, Int k) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

inline IntVec negate(const IntVec& a) { return scale(a, -1); }

inline bool is_zero_vec(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

// v = k * p with p primitive and its first nonzero coordinate positive.
// Requires v != 0.
inline std::pair<IntVec, Int> primitive_direction(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = gcd_int(g, x);
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  Int k = g;
  for (Int x : p) {
    if (x != 0) {
      if (x < 0) {
        p = negate(p);
        k = checked_neg(k);
      }
      break;
    }
  }
  return {p, k};
}

// Rank over the rationals of the span of the given rows.
inline int rational_rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  std::size_t n = rows[0].size();
  std::vector<std::vector<Rat>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  int rank = 0;
  for (std::size_t col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    std::size_t piv = m.size();
    for (std::size_t i = rank; i < m.size(); ++i) {
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// True iff v lies in the rational span of the rows.
inline bool in_rational_span(const std::vector<IntVec>& rows, const IntVec& v) {
  if (is_zero_vec(v)) return true;
  auto extended = rows;
  extended.push_back(v);
  return rational_rank(rows) == rational_rank(extended);
}

// Primitive integer basis of {x : <x, row> = 0 for all rows} in Z^n.
inline std::vector<IntVec> integer_kernel_basis(const std::vector<IntVec>& rows, std::size_t n) {
  // Rational row reduction, then read the kernel off the free columns
  // and clear denominators.
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t piv = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Rat lead = m[r][col];
    for (std::size_t j = 0; j < n; ++j) m[r][j] /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<IntVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[free] = Rat(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m[i][free];
    Int lcm = 1;
    for (const auto& xi : x) lcm = checked_mul(lcm / gcd_int(lcm, xi.den()), xi.den());
    IntVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = checked_mul(x[j].num(), lcm / x[j].den());
    basis.push_back(primitive_direction(v).first);
  }
  return basis;
}

// An element of Z^m / L presented in diagonalized coordinates: residues
// against the nontrivial diagonal moduli plus an exact free part.
struct QuotientElement {
  IntVec torsion;    // component i lives in [0, moduli[i])
  IntVec free_part;  // exact integers

  bool is_zero() const { return is_zero_vec(torsion) && is_zero_vec(free_part); }
  bool operator==(const QuotientElement& o) const = default;
};

// Z^m modulo the lattice spanned by a list of integer generators.
// Diagonalizing the generator matrix with unimodular row operations (and
// untracked column operations) gives U with U*L = d_1 Z x ... x d_r Z x 0;
// membership and quotient arithmetic read off U coordinatewise.
class LatticeQuotient {
 public:
  LatticeQuotient(int m, const std::vector<IntVec>& generators) : m_(m) {
    // Work matrix: generators as columns, m rows.
    std::size_t k = generators.size();
    IntMat a(m, IntVec(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      for (int i = 0; i < m; ++i) a[i][j] = generators[j][i];
    // U starts as identity and tracks row operations.
    IntMat u(m, IntVec(m, 0));
    for (int i = 0; i < m; ++i) u[i][i] = 1;

    std::size_t t = 0;
    std::vector<Int> diag;
    while (t < static_cast<std::size_t>(m) && t < k) {
      // Find the entry of smallest absolute value in the working block.
      std::size_t pi = 0, pj = 0;
      Int best = 0;
      for (std::size_t i = t; i < static_cast<std::size_t>(m); ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 && (best == 0 || abs_checked(a[i][j]) < best)) {
            best = abs_checked(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      std::swap(a[t], a[pi]);
      std::swap(u[t], u[pi]);
      for (std::size_t i = t; i < static_cast<std::size_t>(m); ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < static_cast<std::size_t>(m); ++i) {
        if (a[i][t] == 0) continue;
        Int q = floor_div(a[i][t], a[t][t]);
        if (q != 0) {
          for (std::size_t j = t; j < k; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
          u[i] = sub(u[i], scale(u[t], q));
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] == 0) continue;
        Int q = floor_div(a[t][j], a[t][t]);
        if (q != 0)
          for (std::size_t i = t; i < static_cast<std::size_t>(m); ++i)
            a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders appeared; redo the pivot
      if (a[t][t] < 0) {
        a[t] = negate(a[t]);
        u[t] = negate(u[t]);
      }
      diag.push_back(a[t][t]);
      ++t;
    }

    u_ = std::move(u);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] > 1) {
        moduli_.push_back(diag[i]);
        torsion_rows_.push_back(static_cast<int>(i));
      }
    }
    for (int i = static_cast<int>(diag.size()); i < m; ++i) free_rows_.push_back(i);
  }

  QuotientElement map(const IntVec& v) const {
    QuotientElement e;
    e.torsion.reserve(torsion_rows_.size());
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i)
      e.torsion.push_back(mod_pos(dot(u_[torsion_rows_[i]], v), moduli_[i]));
    e.free_part.reserve(free_rows_.size());
    for (int r : free_rows_) e.free_part.push_back(dot(u_[r], v));
    return e;
  }

  bool contains(const IntVec& v) const { return map(v).is_zero(); }

  QuotientElement add_elems(const QuotientElement& a, const QuotientElement& b) const {
    QuotientElement e;
    e.torsion.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      e.torsion[i] = mod_pos(checked_add(a.torsion[i], b.torsion[i]), moduli_[i]);
    e.free_part = add(a.free_part, b.free_part);
    return e;
  }

  QuotientElement sub_elems(const QuotientElement& a, const QuotientElement& b) const {
    QuotientElement e;
    e.torsion.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      e.torsion[i] = mod_pos(checked_sub(a.torsion[i], b.torsion[i]), moduli_[i]);
    e.free_part = sub(a.free_part, b.free_part);
    return e;
  }

  QuotientElement scale_elem(const QuotientElement& a, Int s) const {
    QuotientElement e;
    e.torsion.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      e.torsion[i] = mod_pos(checked_mul(a.torsion[i], s), moduli_[i]);
    e.free_part = scale(a.free_part, s);
    return e;
  }

  // Order of the element in the quotient group; 0 means infinite.
  Int element_order(const QuotientElement& e) const {
    if (!is_zero_vec(e.free_part)) return 0;
    Int ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      Int component = moduli_[i] / gcd_int(moduli_[i], e.torsion[i]);
      ord = checked_mul(ord / gcd_int(ord, component), component);
    }
    return ord;
  }

  const std::vector<Int>& moduli() const { return moduli_; }
  int free_rank() const { return static_cast<int>(free_rows_.size()); }
  bool is_trivial() const { return moduli_.empty() && free_rows_.empty(); }

 private:
  int m_;
  IntMat u_;
  std::vector<Int> moduli_;
  std::vector<int> torsion_rows_;
  std::vector<int> free_rows_;
};

// True iff the integer vectors generate all of Z^n as a lattice
// (all elementary divisors equal 1).
inline bool generates_full_lattice(const std::vector<IntVec>& vectors, int n) {
  return LatticeQuotient(n, vectors).is_trivial();
}

}  // namespace covariants
