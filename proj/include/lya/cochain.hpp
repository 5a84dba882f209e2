#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "representation.hpp"

namespace lya {

// Pairs (i<j) of an m-dimensional space, in lexicographic order.
class pair_basis {
 public:
  explicit pair_basis(std::size_t m = 0) : m_(m) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pairs_.push_back({i, j});
  }
  std::size_t size() const { return pairs_.size(); }
  std::pair<std::size_t, std::size_t> operator[](std::size_t k) const { return pairs_[k]; }
  std::size_t index(std::size_t i, std::size_t j) const {
    // i < j assumed; offset of row i plus column
    return i * m_ - i * (i + 1) / 2 + (j - i - 1);
  }
  // e_a ^ e_b as (sign, index); sign 0 when a == b.
  std::pair<int, std::size_t> wedge(std::size_t a, std::size_t b) const {
    if (a == b) return {0, 0};
    return a < b ? std::pair<int, std::size_t>{1, index(a, b)} : std::pair<int, std::size_t>{-1, index(b, a)};
  }

 private:
  std::size_t m_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Coordinates of a degree-p cochain on an m-dimensional algebra with values
// in an n-dimensional space. p = 1: index src*n + out. p >= 2: the f part
// first (tuple*n + out), then the g part (K*n + (tuple*m + z)*n + out), where
// tuple encodes p-1 pair indices with the first slot most significant.
struct cochain_layout {
  std::size_t degree = 1, m = 0, n = 0;

  std::size_t M() const { return m * (m - (m > 0 ? 1 : 0)) / 2; }
  std::size_t K() const { return degree >= 2 ? ipow(M(), degree - 1) : 0; }
  std::size_t dim() const { return degree == 1 ? m * n : K() * n * (1 + m); }
  std::size_t f_index(std::size_t tuple, std::size_t out) const { return tuple * n + out; }
  std::size_t g_index(std::size_t tuple, std::size_t z, std::size_t out) const {
    return K() * n + (tuple * m + z) * n + out;
  }

  std::vector<std::size_t> decode(std::size_t tuple) const {
    std::vector<std::size_t> s(degree - 1);
    for (std::size_t k = s.size(); k-- > 0;) {
      s[k] = tuple % M();
      tuple /= M();
    }
    return s;
  }
  std::size_t encode(const std::vector<std::size_t>& s) const {
    std::size_t t = 0;
    for (auto v : s) t = t * M() + v;
    return t;
  }
};

struct Cochain {
  cochain_layout layout;
  Vector coords;

  static Cochain zero(cochain_layout l) { return {l, Vector(l.dim())}; }
  bool is_zero() const { return lya::is_zero(coords); }
};

// Row-major sparse matrix used for coboundary operators.
struct sparse_matrix {
  using row_t = std::vector<std::pair<std::size_t, Rational>>;
  std::size_t rows = 0, cols = 0;
  std::vector<row_t> r;

  Matrix dense() const {
    Matrix d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (const auto& [j, v] : r[i]) d(i, j) = v;
    return d;
  }

  Vector operator*(const Vector& x) const {
    require(x.size() == cols, "ShapeMismatch", "sparse operator applied to wrong-length vector");
    Vector y(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (const auto& [j, v] : r[i]) y[i].add_product(v, x[j]);
    return y;
  }

  sparse_matrix operator*(const sparse_matrix& b) const {
    require(cols == b.rows, "ShapeMismatch", "sparse product shape");
    sparse_matrix c{rows, b.cols, std::vector<row_t>(rows)};
    Vector acc(b.cols);
    std::vector<char> touched(b.cols, 0);
    std::vector<std::size_t> list;
    for (std::size_t i = 0; i < rows; ++i) {
      for (const auto& [k, a] : r[i])
        for (const auto& [j, v] : b.r[k]) {
          if (!touched[j]) {
            touched[j] = 1;
            list.push_back(j);
          }
          acc[j].add_product(a, v);
        }
      std::sort(list.begin(), list.end());
      for (auto j : list) {
        if (!acc[j].is_zero()) c.r[i].emplace_back(j, acc[j]);
        acc[j] = Rational();
        touched[j] = 0;
      }
      list.clear();
    }
    return c;
  }

  bool is_zero() const {
    for (const auto& row : r)
      if (!row.empty()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t s = 0;
    for (const auto& row : r) s += row.size();
    return s;
  }
};

namespace detail {

// Accumulates one output argument's value as a sum of n x n blocks applied
// to input coordinate blocks starting at `base`.
class block_row {
 public:
  explicit block_row(std::size_t n) : n_(n) {}

  void add_matrix(std::size_t base, const Rational& coef, const Matrix& A) {
    if (coef.is_zero()) return;
    auto& b = block(base);
    for (std::size_t o = 0; o < n_; ++o)
      for (std::size_t q = 0; q < n_; ++q)
        if (!A(o, q).is_zero()) b[o * n_ + q].add_product(coef, A(o, q));
  }
  void add_identity(std::size_t base, const Rational& coef) {
    if (coef.is_zero()) return;
    auto& b = block(base);
    for (std::size_t o = 0; o < n_; ++o) b[o * n_ + o] += coef;
  }

  void emit(sparse_matrix& out, std::size_t first_row) const {
    for (std::size_t o = 0; o < n_; ++o) {
      auto& row = out.r[first_row + o];
      for (const auto& [base, b] : blocks_)
        for (std::size_t q = 0; q < n_; ++q)
          if (!b[o * n_ + q].is_zero()) row.emplace_back(base + q, b[o * n_ + q]);
    }
  }

 private:
  std::vector<Rational>& block(std::size_t base) {
    auto it = blocks_.find(base);
    if (it == blocks_.end()) it = blocks_.emplace(base, std::vector<Rational>(n_ * n_)).first;
    return it->second;
  }
  std::size_t n_;
  std::map<std::size_t, std::vector<Rational>> blocks_;
};

}  // namespace detail

// Matrix of the Yamaguti coboundary C^p -> C^{p+1} for the representation
// `rep` (cochains on rep.acting() with values in the carrier). Each output
// coordinate is assembled as a linear form over input coordinates.
inline sparse_matrix coboundary_rows(const RepAction& rep, std::size_t p) {
  require(p >= 1, "ShapeMismatch", "coboundary degree must be at least 1");
  const LYAlgebra& alg = rep.acting();
  const std::size_t m = alg.dim(), n = rep.carrier_dim();
  const cochain_layout in{p, m, n}, out{p + 1, m, n};
  const pair_basis pb(m);
  sparse_matrix S{out.dim(), in.dim(), std::vector<sparse_matrix::row_t>(out.dim())};
  const std::size_t nn = p - 1;  // pairs taken by the input f part
  const Rational sign0 = (nn % 2 == 0) ? Rational(1) : Rational(-1);
  auto alt = [](std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };

  auto f_base = [&](const std::vector<std::size_t>& t) { return p == 1 ? t.at(0) * n : in.encode(t) * n; };
  auto g_base = [&](const std::vector<std::size_t>& t, std::size_t z) {
    return p == 1 ? z * n : in.g_index(in.encode(t), z, 0);
  };
  // Expansion of X_k o X_l into pair-index terms.
  auto circ = [&](std::size_t Xk, std::size_t Xl) {
    auto [xk, yk] = pb[Xk];
    auto [xl, yl] = pb[Xl];
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [r, c] : alg.ternary().entries({xk, yk, xl})) {
      auto [s, idx] = pb.wedge(r, yl);
      if (s != 0) terms.emplace_back(idx, s > 0 ? c : -c);
    }
    for (const auto& [r, c] : alg.ternary().entries({xk, yk, yl})) {
      auto [s, idx] = pb.wedge(xl, r);
      if (s != 0) terms.emplace_back(idx, s > 0 ? c : -c);
    }
    return terms;
  };
  auto without = [](const std::vector<std::size_t>& X, std::size_t k) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (i != k) t.push_back(X[i]);
    return t;
  };

  for (std::size_t tup = 0; tup < out.K(); ++tup) {
    const std::vector<std::size_t> X = out.decode(tup);  // nn+1 pairs
    const auto [a, b] = pb[X.back()];
    std::vector<std::size_t> head(X.begin(), X.end() - 1);

    if (p == 1) {
      detail::block_row fI(n);
      fI.add_matrix(b * n, 1, rep.rho(a));
      fI.add_matrix(a * n, -1, rep.rho(b));
      for (const auto& [k, c] : alg.binary().entries({a, b})) fI.add_identity(k * n, -c);
      fI.emit(S, out.f_index(tup, 0));
      for (std::size_t z = 0; z < m; ++z) {
        detail::block_row gII(n);
        gII.add_matrix(z * n, 1, rep.D(a, b));
        gII.add_matrix(a * n, 1, rep.mu(b, z));
        gII.add_matrix(b * n, -1, rep.mu(a, z));
        for (const auto& [k, c] : alg.ternary().entries({a, b, z})) gII.add_identity(k * n, -c);
        gII.emit(S, out.g_index(tup, z, 0));
      }
      continue;
    }

    // f part of the output.
    detail::block_row fI(n);
    fI.add_matrix(g_base(head, b), sign0, rep.rho(a));
    fI.add_matrix(g_base(head, a), -sign0, rep.rho(b));
    for (const auto& [k, c] : alg.binary().entries({a, b})) fI.add_identity(g_base(head, k), -sign0 * c);
    for (std::size_t k = 0; k < nn; ++k) {
      auto [xk, yk] = pb[X[k]];
      fI.add_matrix(f_base(without(X, k)), alt(k), rep.D(xk, yk));
    }
    for (std::size_t k = 0; k < X.size(); ++k)
      for (std::size_t l = k + 1; l < X.size(); ++l) {
        Rational s = -alt(k);  // (-1)^(k+1) with 1-based k
        for (const auto& [idx, c] : circ(X[k], X[l])) {
          std::vector<std::size_t> t = X;
          t[l] = idx;
          fI.add_identity(f_base(without(t, k)), s * c);
        }
      }
    fI.emit(S, out.f_index(tup, 0));

    // g part of the output.
    for (std::size_t z = 0; z < m; ++z) {
      detail::block_row gII(n);
      gII.add_matrix(g_base(head, a), sign0, rep.mu(b, z));
      gII.add_matrix(g_base(head, b), -sign0, rep.mu(a, z));
      for (std::size_t k = 0; k < X.size(); ++k) {
        auto [xk, yk] = pb[X[k]];
        gII.add_matrix(g_base(without(X, k), z), alt(k), rep.D(xk, yk));
      }
      for (std::size_t k = 0; k < X.size(); ++k)
        for (std::size_t l = k + 1; l < X.size(); ++l) {
          Rational s = -alt(k);
          for (const auto& [idx, c] : circ(X[k], X[l])) {
            std::vector<std::size_t> t = X;
            t[l] = idx;
            gII.add_identity(g_base(without(t, k), z), s * c);
          }
        }
      for (std::size_t k = 0; k < X.size(); ++k) {
        auto [xk, yk] = pb[X[k]];
        for (const auto& [r, c] : alg.ternary().entries({xk, yk, z}))
          gII.add_identity(g_base(without(X, k), r), -alt(k) * c);
      }
      gII.emit(S, out.g_index(tup, z, 0));
    }
  }
  return S;
}

inline Cochain yamaguti_coboundary(const LYAlgebra& alg, const RepAction& rep, const Cochain& c) {
  require(same_structure(alg, rep.acting()), "ShapeMismatch", "algebra differs from the representation's acting algebra");
  require(c.layout.m == alg.dim() && c.layout.n == rep.carrier_dim() && c.coords.size() == c.layout.dim(),
          "ShapeMismatch", "cochain shape does not match the representation");
  sparse_matrix S = coboundary_rows(rep, c.layout.degree);
  return {cochain_layout{c.layout.degree + 1, c.layout.m, c.layout.n}, S * c.coords};
}

// Matrix of f |-> psi_g o f o (psi_h^{-1} in every slot) on degree-p
// cochains; psi_h must be invertible.
inline Matrix pushforward_matrix(const Matrix& psi_g, const Matrix& psi_h, std::size_t p) {
  require(psi_h.rows() == psi_h.cols() && psi_g.rows() == psi_g.cols(), "ShapeMismatch", "pushforward maps must be square");
  auto Qo = inverse(psi_h);
  if (!Qo) throw error("NotInvertible", "psi_h is not invertible");
  const Matrix& Q = *Qo;
  const std::size_t m = psi_h.rows(), n = psi_g.rows();
  const cochain_layout L{p, m, n};
  const pair_basis pb(m);
  const std::size_t M = pb.size();
  // W(new pair, old pair): coefficient of e_a ^ e_b in Q e_i ^ Q e_j.
  Matrix W(M, M);
  for (std::size_t col = 0; col < M; ++col) {
    auto [i, j] = pb[col];
    for (std::size_t row = 0; row < M; ++row) {
      auto [a, b] = pb[row];
      W(row, col) = Q(a, i) * Q(b, j) - Q(b, i) * Q(a, j);
    }
  }
  Matrix P(L.dim(), L.dim());
  auto place = [&](std::size_t out_base, std::size_t in_base, const Rational& c) {
    if (c.is_zero()) return;
    for (std::size_t o = 0; o < n; ++o)
      for (std::size_t q = 0; q < n; ++q)
        if (!psi_g(o, q).is_zero()) P(out_base + o, in_base + q).add_product(c, psi_g(o, q));
  };
  if (p == 1) {
    for (std::size_t z = 0; z < m; ++z)
      for (std::size_t zi = 0; zi < m; ++zi) place(z * n, zi * n, Q(zi, z));
    return P;
  }
  const std::size_t K = L.K();
  // Weight of the input tuple `ti` in the output tuple `to`: product of W.
  std::vector<Rational> weight(K * K);
  for (std::size_t to = 0; to < K; ++to) {
    auto so = L.decode(to);
    for (std::size_t ti = 0; ti < K; ++ti) {
      auto si = L.decode(ti);
      Rational w(1);
      for (std::size_t s = 0; s < so.size() && !w.is_zero(); ++s) w *= W(si[s], so[s]);
      weight[to * K + ti] = w;
    }
  }
  for (std::size_t to = 0; to < K; ++to)
    for (std::size_t ti = 0; ti < K; ++ti) {
      const Rational& w = weight[to * K + ti];
      if (w.is_zero()) continue;
      place(L.f_index(to, 0), L.f_index(ti, 0), w);
      for (std::size_t z = 0; z < m; ++z)
        for (std::size_t zi = 0; zi < m; ++zi)
          if (!Q(zi, z).is_zero()) place(L.g_index(to, z, 0), L.g_index(ti, zi, 0), w * Q(zi, z));
    }
  return P;
}

}  // namespace lya
