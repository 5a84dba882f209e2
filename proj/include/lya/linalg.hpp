#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lya {

template <class F>
using basic_vector = std::vector<F>;

using Vector = basic_vector<Rational>;

template <class F>
bool is_zero(const basic_vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& a) { return a.is_zero(); });
}

template <class F>
basic_vector<F> unit_vector(std::size_t n, std::size_t i) {
  basic_vector<F> v(n);
  v[i] = F(1);
  return v;
}

inline Vector unit(std::size_t n, std::size_t i) { return unit_vector<Rational>(n, i); }

template <class F>
void axpy(basic_vector<F>& y, const F& a, const basic_vector<F>& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

template <class F>
basic_vector<F> operator+(basic_vector<F> a, const basic_vector<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class F>
basic_vector<F> operator-(basic_vector<F> a, const basic_vector<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class F>
basic_vector<F> operator-(basic_vector<F> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class F>
basic_vector<F> operator*(const F& s, basic_vector<F> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class F>
F dot(const basic_vector<F>& a, const basic_vector<F>& b) {
  F s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

template <class F>
class basic_matrix {
 public:
  basic_matrix() = default;
  basic_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static basic_matrix identity(std::size_t n) {
    basic_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static basic_matrix from_rows(const std::vector<basic_vector<F>>& rows, std::size_t cols) {
    basic_matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, "DimMismatch", "ragged row in matrix literal");
      std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + i * cols);
    }
    return m;
  }

  static basic_matrix from_columns(const std::vector<basic_vector<F>>& cols, std::size_t rows) {
    basic_matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, "DimMismatch", "ragged column");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<F>& entries() const { return a_; }

  basic_vector<F> row(std::size_t i) const {
    return basic_vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  basic_vector<F> column(std::size_t j) const {
    basic_vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  basic_matrix transpose() const {
    basic_matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const F& x) { return x.is_zero(); });
  }

  basic_vector<F> operator*(const basic_vector<F>& v) const {
    require(v.size() == cols_, "DimMismatch", "matrix-vector shape");
    basic_vector<F> out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) out[i].add_product((*this)(i, j), v[j]);
    }
    return out;
  }

  basic_matrix operator*(const basic_matrix& b) const {
    require(cols_ == b.rows_, "DimMismatch", "matrix product shape");
    basic_matrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(a, b(k, j));
      }
    return c;
  }

  basic_matrix& operator+=(const basic_matrix& b) {
    require(rows_ == b.rows_ && cols_ == b.cols_, "DimMismatch", "matrix sum shape");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
  }
  basic_matrix& operator-=(const basic_matrix& b) {
    require(rows_ == b.rows_ && cols_ == b.cols_, "DimMismatch", "matrix difference shape");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
  }
  friend basic_matrix operator+(basic_matrix a, const basic_matrix& b) { return a += b; }
  friend basic_matrix operator-(basic_matrix a, const basic_matrix& b) { return a -= b; }
  friend basic_matrix operator-(basic_matrix a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }
  friend basic_matrix operator*(const F& s, basic_matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }

  friend bool operator==(const basic_matrix& a, const basic_matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

using Matrix = basic_matrix<Rational>;

// Reduced row echelon form of a list of rows. Pivot choice is the first
// nonzero entry; the RREF is unique, so results do not depend on it.
template <class F>
struct echelon {
  std::vector<basic_vector<F>> rows;  // nonzero rows only, in pivot order
  std::vector<std::size_t> pivots;
};

template <class F>
echelon<F> rref(std::vector<basic_vector<F>> rows, std::size_t cols) {
  echelon<F> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    F inv = F(1) / rows[r][c];
    if (!(inv == F(1)))
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      F f = -rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j].add_product(f, rows[r][j]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

template <class F>
echelon<F> rref(const basic_matrix<F>& m) {
  std::vector<basic_vector<F>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rref(std::move(rows), m.cols());
}

template <class F>
std::size_t rank(const basic_matrix<F>& m) {
  return rref(m).pivots.size();
}

// A linear subspace of F^n, stored canonically: the basis vectors are the
// nonzero rows of the RREF of any spanning set.
template <class F>
class basic_subspace {
 public:
  basic_subspace() = default;
  explicit basic_subspace(std::size_t ambient) : n_(ambient) {}

  static basic_subspace span(std::size_t ambient, std::vector<basic_vector<F>> vecs) {
    for (const auto& v : vecs) require(v.size() == ambient, "DimMismatch", "spanning vector length");
    basic_subspace s(ambient);
    s.basis_ = rref(std::move(vecs), ambient).rows;
    return s;
  }
  static basic_subspace full(std::size_t n) {
    std::vector<basic_vector<F>> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector<F>(n, i));
    return span(n, std::move(e));
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<basic_vector<F>>& basis() const { return basis_; }

  bool contains(const basic_vector<F>& v) const {
    require(v.size() == n_, "AmbientMismatch", "vector length differs from ambient dimension");
    // Reduce against the RREF basis; zero residual means membership.
    basic_vector<F> r = v;
    auto piv = pivots();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (r[piv[k]].is_zero()) continue;
      F f = -r[piv[k]];
      axpy(r, f, basis_[k]);
    }
    return lya::is_zero(r);
  }

  bool contains(const basic_subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& b : basis_) {
      std::size_t j = 0;
      while (b[j].is_zero()) ++j;
      p.push_back(j);
    }
    return p;
  }

  friend bool operator==(const basic_subspace& a, const basic_subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<basic_vector<F>> basis_;
};

using Subspace = basic_subspace<Rational>;

template <class F>
basic_subspace<F> nullspace(const basic_matrix<F>& m) {
  auto e = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<basic_vector<F>> vecs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basic_vector<F> v(n);
    v[free] = F(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    vecs.push_back(std::move(v));
  }
  return basic_subspace<F>::span(n, std::move(vecs));
}

template <class F>
basic_subspace<F> column_space(const basic_matrix<F>& m) {
  std::vector<basic_vector<F>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return basic_subspace<F>::span(m.rows(), std::move(cols));
}

template <class F>
basic_subspace<F> sum(const basic_subspace<F>& a, const basic_subspace<F>& b) {
  require(a.ambient_dim() == b.ambient_dim(), "AmbientMismatch", "subspace sum");
  auto v = a.basis();
  v.insert(v.end(), b.basis().begin(), b.basis().end());
  return basic_subspace<F>::span(a.ambient_dim(), std::move(v));
}

template <class F>
basic_subspace<F> intersect(const basic_subspace<F>& a, const basic_subspace<F>& b) {
  require(a.ambient_dim() == b.ambient_dim(), "AmbientMismatch", "subspace intersection");
  std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
  // Solve A s = B t through the kernel of [A | -B]; A s spans the intersection.
  basic_matrix<F> m(n, ka + kb);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, ka + j) = -b.basis()[j][i];
  std::vector<basic_vector<F>> vecs;
  const basic_subspace<F> ker = nullspace(m);
  for (const auto& k : ker.basis()) {
    basic_vector<F> v(n);
    for (std::size_t j = 0; j < ka; ++j) axpy(v, k[j], a.basis()[j]);
    vecs.push_back(std::move(v));
  }
  return basic_subspace<F>::span(n, std::move(vecs));
}

// Result of solving m x = b. When inconsistent, `certificate` is a vector y
// with yᵀm = 0 and yᵀb ≠ 0.
template <class F>
struct solve_result {
  std::optional<basic_vector<F>> x;
  basic_vector<F> certificate;
  bool consistent() const { return x.has_value(); }
};

template <class F>
solve_result<F> solve_with_certificate(const basic_matrix<F>& m, const basic_vector<F>& b) {
  require(b.size() == m.rows(), "DimMismatch", "right-hand side length");
  std::size_t n = m.cols();
  std::vector<basic_vector<F>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto e = rref(std::move(rows), n + 1);
  solve_result<F> out;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    const basic_subspace<F> left = nullspace(m.transpose());
    for (const auto& y : left.basis())
      if (!dot(y, b).is_zero()) {
        out.certificate = y;
        break;
      }
    return out;
  }
  basic_vector<F> x(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rows[k][n];
  out.x = std::move(x);
  return out;
}

template <class F>
std::optional<basic_vector<F>> solve(const basic_matrix<F>& m, const basic_vector<F>& b) {
  return solve_with_certificate(m, b).x;
}

// Throws Inconsistent instead of returning an empty optional.
template <class F>
basic_vector<F> solve_or_throw(const basic_matrix<F>& m, const basic_vector<F>& b) {
  auto x = solve(m, b);
  if (!x) throw error("Inconsistent", "right-hand side is outside the column space");
  return *x;
}

template <class F>
std::optional<basic_matrix<F>> inverse(const basic_matrix<F>& m) {
  require(m.rows() == m.cols(), "DimMismatch", "inverse of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<basic_vector<F>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = m.row(i);
    r.resize(2 * n);
    r[n + i] = F(1);
    rows.push_back(std::move(r));
  }
  auto e = rref(std::move(rows), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  basic_matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

}  // namespace lya
