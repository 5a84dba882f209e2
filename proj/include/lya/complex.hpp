#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cochain.hpp"
#include "rota_baxter.hpp"

namespace lya {

// (g; rho_T, mu_T) as a representation of the descent algebra on h.
inline RepAction induced_rep(const RRBOperator& op) {
  if (!op.verified) throw error("Unverified", "induced representation needs a verified operator");
  const LYAlgebra& g = op.g();
  const RepAction& a = op.action;
  const std::size_t m = op.h_dim(), n = op.g_dim();
  std::vector<Vector> Te, eg, eh;
  for (std::size_t u = 0; u < m; ++u) {
    Te.push_back(op.T.column(u));
    eh.push_back(unit(m, u));
  }
  for (std::size_t x = 0; x < n; ++x) eg.push_back(unit(n, x));
  std::vector<Matrix> rho(m, Matrix(n, n)), mu(m * m, Matrix(n, n));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t x = 0; x < n; ++x) {
      Vector c = g.bracket2(Te[u], eg[x]) + op.T * (a.rho(x) * eh[u]);
      for (std::size_t k = 0; k < n; ++k) rho[u](k, x) = c[k];
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t x = 0; x < n; ++x) {
        Vector c = g.bracket3(eg[x], Te[u], Te[v]) -
                   op.T * (a.D(eg[x], Te[u]) * eh[v] - a.mu(eg[x], Te[v]) * eh[u]);
        for (std::size_t k = 0; k < n; ++k) mu[u * m + v](k, x) = c[k];
      }
  return RepAction(descent_algebra(op), g, std::move(rho), std::move(mu));
}

// D_T computed from its own closed form rather than from rho_T and mu_T.
inline std::vector<Matrix> induced_D_formula(const RRBOperator& op) {
  const LYAlgebra& g = op.g();
  const RepAction& a = op.action;
  const std::size_t m = op.h_dim(), n = op.g_dim();
  std::vector<Matrix> D(m * m, Matrix(n, n));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector Tu = op.T.column(u), Tv = op.T.column(v);
      for (std::size_t x = 0; x < n; ++x) {
        Vector ex = unit(n, x);
        Vector c = g.bracket3(Tu, Tv, ex) - op.T * (a.mu(Tv, ex) * unit(m, u) - a.mu(Tu, ex) * unit(m, v));
        for (std::size_t k = 0; k < n; ++k) D[u * m + v](k, x) = c[k];
      }
    }
  return D;
}

// d(X)v = T(D(x,y)v) - <x,y,Tv>_g for X = x ^ y; X given on the pair basis of g.
inline Cochain zero_cochain_map(const RRBOperator& op, const Vector& X) {
  const std::size_t m = op.h_dim(), n = op.g_dim();
  const pair_basis pg(n);
  require(X.size() == pg.size(), "ShapeMismatch", "element of wedge^2 g has the wrong length");
  Cochain c = Cochain::zero({1, m, n});
  for (std::size_t k = 0; k < pg.size(); ++k) {
    if (X[k].is_zero()) continue;
    auto [x, y] = pg[k];
    for (std::size_t v = 0; v < m; ++v) {
      Vector val = op.T * (op.action.D(x, y) * unit(m, v)) - op.g().bracket3(unit(n, x), unit(n, y), op.T.column(v));
      for (std::size_t o = 0; o < n; ++o) c.coords[v * n + o].add_product(X[k], val[o]);
    }
  }
  return c;
}

struct CohomologyDims {
  std::size_t Z = 0, B = 0, H = 0;
};

// Cochain complex of a verified operator with coefficients in (g; rho_T, mu_T).
// Coboundary matrices are built on first use; concurrent first access is
// serialised by a lock.
class TComplex {
 public:
  explicit TComplex(RRBOperator op) : op_(std::move(op)), state_(std::make_shared<state>()) {
    if (!op_.verified) throw error("Unverified", "T-complex needs a verified operator");
    rep_ = induced_rep(op_);
  }

  const RRBOperator& op() const { return op_; }
  const LYAlgebra& descent() const { return rep_.acting(); }
  const RepAction& rep() const { return rep_; }
  std::size_t m() const { return op_.h_dim(); }
  std::size_t n() const { return op_.g_dim(); }
  cochain_layout layout(std::size_t p) const { return {p, m(), n()}; }

  // p = 0 is the degree-0 map from wedge^2 g; p >= 1 the coboundary out of C^p.
  const sparse_matrix& coboundary(std::size_t p) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->cache.find(p);
    if (it != state_->cache.end()) return *it->second;
    auto built = std::make_shared<const sparse_matrix>(p == 0 ? build_zero_map() : coboundary_rows(rep_, p));
    return *state_->cache.emplace(p, built).first->second;
  }

 private:
  sparse_matrix build_zero_map() const {
    const pair_basis pg(n());
    const std::size_t rows = m() * n();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < pg.size(); ++k) cols.push_back(zero_cochain_map(op_, unit(pg.size(), k)).coords);
    sparse_matrix S{rows, pg.size(), std::vector<sparse_matrix::row_t>(rows)};
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (!cols[j][i].is_zero()) S.r[i].emplace_back(j, cols[j][i]);
    return S;
  }

  struct state {
    std::mutex mu;
    std::map<std::size_t, std::shared_ptr<const sparse_matrix>> cache;
  };
  RRBOperator op_;
  RepAction rep_;
  std::shared_ptr<state> state_;
};

inline Matrix coboundary_matrix(const TComplex& cx, std::size_t p) { return cx.coboundary(p).dense(); }

inline std::size_t sparse_rank(const sparse_matrix& S) {
  std::vector<Vector> rows;
  rows.reserve(S.rows);
  for (const auto& r : S.r) {
    if (r.empty()) continue;
    Vector v(S.cols);
    for (const auto& [j, c] : r) v[j] = c;
    rows.push_back(std::move(v));
  }
  return rref(std::move(rows), S.cols).pivots.size();
}

inline CohomologyDims cohomology_dims(const TComplex& cx, std::size_t p) {
  require(p >= 1, "ShapeMismatch", "cohomology degree must be at least 1");
  CohomologyDims d;
  const sparse_matrix& out = cx.coboundary(p);
  d.Z = out.cols - sparse_rank(out);
  d.B = sparse_rank(cx.coboundary(p - 1));
  d.H = d.Z - d.B;
  return d;
}

inline Subspace cocycles(const TComplex& cx, std::size_t p) { return nullspace(cx.coboundary(p).dense()); }

inline Subspace coboundaries(const TComplex& cx, std::size_t p) {
  require(p >= 1, "ShapeMismatch", "coboundaries live in degree at least 1");
  return column_space(cx.coboundary(p - 1).dense());
}

// Cocycles completing a basis of B^p to a basis of Z^p.
inline std::vector<Vector> cohomology_representatives(const TComplex& cx, std::size_t p) {
  Subspace Z = cocycles(cx, p), acc = coboundaries(cx, p);
  std::vector<Vector> reps;
  for (const auto& z : Z.basis()) {
    if (acc.contains(z)) continue;
    reps.push_back(z);
    acc = sum(acc, Subspace::span(acc.ambient_dim(), {z}));
  }
  return reps;
}

// Transport of a cochain of T' to one of T along an invertible pair.
inline Cochain pushforward_cochain(const HomPair& pr, const Cochain& c) {
  require(c.coords.size() == c.layout.dim(), "ShapeMismatch", "cochain coordinate count");
  Matrix P = pushforward_matrix(pr.psi_g, pr.psi_h, c.layout.degree);
  return {c.layout, P * c.coords};
}

// Hom(h,g) matrix <-> degree-1 coordinates (index src*n + out).
inline Vector to_cochain_coords(const Matrix& F) {
  Vector v(F.rows() * F.cols());
  for (std::size_t s = 0; s < F.cols(); ++s)
    for (std::size_t o = 0; o < F.rows(); ++o) v[s * F.rows() + o] = F(o, s);
  return v;
}

inline Matrix from_cochain_coords(const Vector& v, std::size_t n, std::size_t m) {
  require(v.size() == n * m, "ShapeMismatch", "degree-1 coordinate count");
  Matrix F(n, m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t o = 0; o < n; ++o) F(o, s) = v[s * n + o];
  return F;
}

}  // namespace lya
