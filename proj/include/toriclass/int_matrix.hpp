#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "toriclass/errors.hpp"
#include "toriclass/ints.hpp"

namespace toriclass {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == c);
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  std::vector<Int> row(std::size_t i) const {
    return {a_.begin() + static_cast<long>(i * cols_),
            a_.begin() + static_cast<long>((i + 1) * cols_)};
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    assert(v.size() == cols_);
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, i), (*this)(r, j));
  }

  // row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(dst, c) += q * (*this)(src, c);
  }

  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, dst) += q * (*this)(r, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Fraction-free Gaussian elimination (Bareiss); all divisions are exact.
inline Int determinant(IntMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// adj(A) with A * adj(A) = det(A) * I.
inline IntMatrix adjugate(const IntMatrix& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc) = a(r, c);
          ++cc;
        }
        ++rr;
      }
      Int m = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  return adj;
}

struct SmithForm {
  std::vector<Int> invariant_factors;  // positive, d_i | d_{i+1}
  std::size_t rank = 0;
  std::optional<IntMatrix> left;   // U with U*A*V diagonal
  std::optional<IntMatrix> right;  // V
};

inline SmithForm smith_normal_form(IntMatrix a, bool with_transforms = false) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(m);
    v = IntMatrix::identity(n);
  }
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    a.add_row_multiple(dst, src, q);
    if (with_transforms) u.add_row_multiple(dst, src, q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    a.add_col_multiple(dst, src, q);
    if (with_transforms) v.add_col_multiple(dst, src, q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (with_transforms) u.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (with_transforms) v.swap_cols(i, j);
  };

  std::size_t k = 0;
  while (k < m && k < n) {
    // pivot: smallest absolute value, ties broken by (row, col) order
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a(i, j) != 0 &&
            (pi == m || abs_int(a(i, j)) < abs_int(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    row_swap(k, pi);
    col_swap(k, pj);

    for (;;) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = k + 1; i < m; ++i) {
          while (a(i, k) != 0) {
            Int q = a(i, k) / a(k, k);
            row_add(i, k, -q);
            if (a(i, k) != 0) {
              row_swap(i, k);
              changed = true;
            }
          }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
          while (a(k, j) != 0) {
            Int q = a(k, j) / a(k, k);
            col_add(j, k, -q);
            if (a(k, j) != 0) {
              col_swap(j, k);
              changed = true;
            }
          }
        }
      }
      // pivot must divide every remaining entry
      std::size_t bi = m;
      for (std::size_t i = k + 1; i < m && bi == m; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bi = i;
            break;
          }
      if (bi == m) break;
      row_add(k, bi, 1);
    }
    ++k;
  }

  SmithForm s;
  s.rank = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (a(i, i) < 0) {
      a.negate_row(i);
      if (with_transforms) u.negate_row(i);
    }
    s.invariant_factors.push_back(a(i, i));
  }
  if (with_transforms) {
    s.left = std::move(u);
    s.right = std::move(v);
  }
  return s;
}

// Canonical row-style Hermite form; returns only the nonzero rows,
// which form a basis of the lattice spanned by the input rows.
inline IntMatrix hermite_row_basis(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, col) != 0 &&
            (piv == m || abs_int(a(i, col)) < abs_int(a(piv, col))))
          piv = i;
      if (piv == m) break;
      a.swap_rows(r, piv);
      bool any = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        Int q = a(i, col) / a(r, col);
        a.add_row_multiple(i, r, -q);
        if (a(i, col) != 0) any = true;
      }
      if (!any) break;
    }
    if (a(r, col) != 0) {
      if (a(r, col) < 0) a.negate_row(r);
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(a(i, col), a(r, col));
        a.add_row_multiple(i, r, -q);
      }
      ++r;
    }
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

// Rows form a basis of {x in Z^cols : A x = 0}; the basis is saturated.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a, true);
  const IntMatrix& v = *s.right;
  const std::size_t n = a.cols();
  IntMatrix k(n - s.rank, n);
  for (std::size_t t = s.rank; t < n; ++t)
    for (std::size_t i = 0; i < n; ++i) k(t - s.rank, i) = v(i, t);
  return k;
}

// Incremental rank over Q, kept in integer echelon rows.
class QRank {
 public:
  std::size_t rank() const { return rows_.size(); }

  bool spans(std::vector<Int> v) const {
    reduce(v);
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }

  // Adds v if it enlarges the span; returns true when it does.
  bool add(std::vector<Int> v) {
    reduce(v);
    std::size_t p = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == v.size()) return false;
    normalize(v);
    std::size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
  }

 private:
  void reduce(std::vector<Int>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (v[p] == 0) continue;
      Int c = v[p], d = rows_[i][p];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = v[j] * d - rows_[i][j] * c;
      normalize(v);
    }
  }

  static void normalize(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    if (g > 1)
      for (Int& x : v) x /= g;
  }

  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace toriclass
