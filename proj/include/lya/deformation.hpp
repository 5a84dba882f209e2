#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"

namespace lya {

// Polynomials in t with vector or matrix coefficients; index = power of t.
using poly_vector = std::vector<Vector>;
using poly_matrix = std::vector<Matrix>;

namespace detail {

inline void add_at(poly_vector& p, std::size_t deg, const Vector& v, std::size_t max_deg) {
  if (deg > max_deg || is_zero(v)) return;
  if (p.size() <= deg) p.resize(deg + 1, Vector(v.size()));
  p[deg] = p[deg] + v;
}

inline poly_vector apply(const poly_matrix& T, const Vector& u, std::size_t max_deg) {
  poly_vector out;
  for (std::size_t i = 0; i < T.size() && i <= max_deg; ++i) add_at(out, i, T[i] * u, max_deg);
  return out;
}

inline poly_vector apply(const poly_matrix& T, const poly_vector& x, std::size_t max_deg) {
  poly_vector out;
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) add_at(out, i + j, T[i] * x[j], max_deg);
  return out;
}

}  // namespace detail

// Coefficients of [T_t u, T_t v] - T_t(rho(T_t u)v - rho(T_t v)u + [u,v]_h).
inline poly_vector binary_residual(const RRBOperator& base, const poly_matrix& T, const Vector& u, const Vector& v,
                                   std::size_t max_deg) {
  const auto& a = base.action;
  poly_vector Tu = detail::apply(T, u, max_deg), Tv = detail::apply(T, v, max_deg);
  poly_vector out, inner;
  for (std::size_t i = 0; i < Tu.size(); ++i)
    for (std::size_t j = 0; j < Tv.size(); ++j) detail::add_at(out, i + j, base.g().bracket2(Tu[i], Tv[j]), max_deg);
  for (std::size_t j = 0; j < std::max(Tu.size(), Tv.size()); ++j) {
    Vector s(base.h_dim());
    if (j < Tu.size()) s = s + a.rho(Tu[j]) * v;
    if (j < Tv.size()) s = s - a.rho(Tv[j]) * u;
    detail::add_at(inner, j, s, max_deg);
  }
  detail::add_at(inner, 0, base.h().bracket2(u, v), max_deg);
  poly_vector rhs = detail::apply(T, inner, max_deg);
  for (std::size_t k = 0; k < rhs.size(); ++k) detail::add_at(out, k, -rhs[k], max_deg);
  return out;
}

// Coefficients of <T_t u, T_t v, T_t w> - T_t(D(T_t u, T_t v)w + mu(T_t v, T_t w)u
// - mu(T_t u, T_t w)v + <u,v,w>_h).
inline poly_vector ternary_residual(const RRBOperator& base, const poly_matrix& T, const Vector& u, const Vector& v,
                                    const Vector& w, std::size_t max_deg) {
  const auto& a = base.action;
  poly_vector Tu = detail::apply(T, u, max_deg), Tv = detail::apply(T, v, max_deg), Tw = detail::apply(T, w, max_deg);
  poly_vector out, inner;
  for (std::size_t i = 0; i < Tu.size(); ++i)
    for (std::size_t j = 0; j < Tv.size(); ++j)
      for (std::size_t k = 0; k < Tw.size(); ++k)
        if (i + j + k <= max_deg) detail::add_at(out, i + j + k, base.g().bracket3(Tu[i], Tv[j], Tw[k]), max_deg);
  for (std::size_t j = 0; j < T.size(); ++j)
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (j + k > max_deg) continue;
      Vector s = a.D(Tu.size() > j ? Tu[j] : Vector(base.g_dim()), Tv.size() > k ? Tv[k] : Vector(base.g_dim())) * w;
      if (j < Tv.size() && k < Tw.size()) s = s + a.mu(Tv[j], Tw[k]) * u;
      if (j < Tu.size() && k < Tw.size()) s = s - a.mu(Tu[j], Tw[k]) * v;
      detail::add_at(inner, j + k, s, max_deg);
    }
  detail::add_at(inner, 0, base.h().bracket3(u, v, w), max_deg);
  poly_vector rhs = detail::apply(T, inner, max_deg);
  for (std::size_t k = 0; k < rhs.size(); ++k) detail::add_at(out, k, -rhs[k], max_deg);
  return out;
}

namespace detail {

// Scans all basis pairs/triples and records nonzero coefficients of t^lo..t^hi.
inline void scan_coefficients(Report& r, const RRBOperator& base, const poly_matrix& T, std::size_t lo,
                              std::size_t hi) {
  const std::size_t m = base.h_dim();
  for (std::size_t k = lo; k <= hi; ++k) {
    r.mark("binary.t" + std::to_string(k));
    r.mark("ternary.t" + std::to_string(k));
  }
  std::vector<bool> stop(2 * (hi + 1), false);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      poly_vector res = binary_residual(base, T, unit(m, u), unit(m, v), hi);
      for (std::size_t k = lo; k <= hi && k < res.size(); ++k)
        if (!stop[k] && !is_zero(res[k])) stop[k] = r.fail("binary.t" + std::to_string(k), {u, v}, res[k]);
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        poly_vector res = ternary_residual(base, T, unit(m, u), unit(m, v), unit(m, w), hi);
        for (std::size_t k = lo; k <= hi && k < res.size(); ++k)
          if (!stop[hi + 1 + k] && !is_zero(res[k]))
            stop[hi + 1 + k] = r.fail("ternary.t" + std::to_string(k), {u, v, w}, res[k]);
      }
}

inline void check_shapes(const RRBOperator& base, const std::vector<Matrix>& terms) {
  for (const auto& t : terms)
    require(t.rows() == base.g_dim() && t.cols() == base.h_dim(), "ShapeMismatch",
            "deformation term must be dim(g) x dim(h)");
}

}  // namespace detail

// T + t*F is a relative Rota-Baxter operator for every t. Per-coefficient
// verdicts are reported; notes say whether the t^1 coefficient vanishes and
// whether F is closed under the degree-1 coboundary of T.
inline Report check_linear_deformation(const RRBOperator& op, const Matrix& F,
                                       std::size_t limit = Report::default_limit) {
  if (!op.verified) throw error("Unverified", "linear deformation needs a verified base operator");
  detail::check_shapes(op, {F});
  Report r("linear deformation", limit);
  detail::scan_coefficients(r, op, {op.T, F}, 1, 3);
  bool t1 = r.equation_passed("binary.t1") && r.equation_passed("ternary.t1");
  TComplex cx(op);
  bool closed = is_zero(cx.coboundary(1) * to_cochain_coords(F));
  r.note(std::string("t1 coefficient vanishes: ") + (t1 ? "yes" : "no"));
  r.note(std::string("closed under the degree-1 coboundary: ") + (closed ? "yes" : "no"));
  return r;
}

struct OrderNDeformation {
  RRBOperator base;
  std::vector<Matrix> terms;  // T_1 .. T_n
  std::size_t order() const { return terms.size(); }
  poly_matrix all_terms() const {
    poly_matrix T{base.T};
    T.insert(T.end(), terms.begin(), terms.end());
    return T;
  }
};

inline Report check_order_n(const OrderNDeformation& d, std::size_t limit = Report::default_limit) {
  detail::check_shapes(d.base, d.terms);
  Report r("order-" + std::to_string(d.order()) + " deformation", limit);
  if (d.order() == 0) {
    r.merge(check_rrb(d.base, limit));
    return r;
  }
  detail::scan_coefficients(r, d.base, d.all_terms(), 1, d.order());
  return r;
}

struct ObstructionClass {
  Cochain cochain;      // degree 2
  bool cocycle = false; // delta^T of the class vanishes

  // Ob_I on the pair (i<j) and Ob_II on (pair, z), as vectors in g.
  Vector ob_I(std::size_t pair) const {
    const auto& L = cochain.layout;
    return Vector(cochain.coords.begin() + static_cast<long>(L.f_index(pair, 0)),
                  cochain.coords.begin() + static_cast<long>(L.f_index(pair, 0) + L.n));
  }
  Vector ob_II(std::size_t pair, std::size_t z) const {
    const auto& L = cochain.layout;
    return Vector(cochain.coords.begin() + static_cast<long>(L.g_index(pair, z, 0)),
                  cochain.coords.begin() + static_cast<long>(L.g_index(pair, z, 0) + L.n));
  }
};

// Index-sum form: every term of the t^{n+1} coefficient whose indices all
// lie in 0..n. The coefficient itself equals this plus delta^T(T_{n+1}).
inline Cochain obstruction_cochain(const OrderNDeformation& d) {
  const RRBOperator& op = d.base;
  const auto& a = op.action;
  const std::size_t m = op.h_dim(), n = op.g_dim(), N = d.order() + 1;
  const poly_matrix T = d.all_terms();
  const pair_basis pb(m);
  Cochain c = Cochain::zero({2, m, n});
  std::vector<Vector> e;
  for (std::size_t i = 0; i < m; ++i) e.push_back(unit(m, i));

  auto Ti = [&](std::size_t i, std::size_t u) { return T[i].column(u); };
  for (std::size_t p = 0; p < pb.size(); ++p) {
    auto [u, v] = pb[p];
    Vector ob(n);
    for (std::size_t i = 1; i < N; ++i) {
      std::size_t j = N - i;
      ob = ob + op.g().bracket2(Ti(i, u), Ti(j, v)) - T[i] * (a.rho(Ti(j, u)) * e[v] - a.rho(Ti(j, v)) * e[u]);
    }
    for (std::size_t o = 0; o < n; ++o) c.coords[c.layout.f_index(p, o)] = ob[o];

    for (std::size_t w = 0; w < m; ++w) {
      Vector ob2(n);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; i + j <= N && j < N; ++j) {
          std::size_t k = N - i - j;
          if (k >= N) continue;
          ob2 = ob2 + op.g().bracket3(Ti(i, u), Ti(j, v), Ti(k, w));
          Vector inner = a.D(Ti(j, u), Ti(k, v)) * e[w] + a.mu(Ti(j, v), Ti(k, w)) * e[u] -
                         a.mu(Ti(j, u), Ti(k, w)) * e[v];
          ob2 = ob2 - T[i] * inner;
        }
      for (std::size_t o = 0; o < n; ++o) c.coords[c.layout.g_index(p, w, o)] = ob2[o];
    }
  }
  return c;
}

inline ObstructionClass obstruction_class(const OrderNDeformation& d, const TComplex& cx) {
  if (!check_order_n(d, 1).passed()) throw error("InvalidDeformation", "terms do not form an order-n deformation");
  ObstructionClass ob{obstruction_cochain(d), false};
  ob.cocycle = is_zero(cx.coboundary(2) * ob.cochain.coords);
  return ob;
}

inline ObstructionClass obstruction_class(const OrderNDeformation& d) { return obstruction_class(d, TComplex(d.base)); }

struct ExtensionResult {
  ObstructionClass ob;
  std::optional<Matrix> next;  // T_{n+1} when extendable
  Vector certificate;          // y with y^T delta = 0 and y . (-Ob) != 0 otherwise
  bool extendable() const { return next.has_value(); }
};

// Checks that y annihilates the columns of `delta` but not `rhs`.
inline bool certificate_holds(const Matrix& delta, const Vector& rhs, const Vector& y) {
  if (y.size() != delta.rows() || rhs.size() != delta.rows()) return false;
  return is_zero(delta.transpose() * y) && !dot(y, rhs).is_zero();
}

// Solves delta^T(T_{n+1}) = -Ob over Hom(h,g).
inline ExtensionResult extend(const OrderNDeformation& d, const TComplex& cx) {
  ExtensionResult res{obstruction_class(d, cx), std::nullopt, {}};
  Matrix delta = coboundary_matrix(cx, 1);
  Vector rhs = -res.ob.cochain.coords;
  auto sol = solve_with_certificate(delta, rhs);
  if (sol.x)
    res.next = from_cochain_coords(*sol.x, d.base.g_dim(), d.base.h_dim());
  else
    res.certificate = sol.certificate;
  return res;
}

inline ExtensionResult extend(const OrderNDeformation& d) { return extend(d, TComplex(d.base)); }

struct DifferenceResult {
  bool cohomologous = false;
  Vector X;            // preimage on the pair basis of g
  Vector certificate;  // when not cohomologous
};

// Is F2 - F1 in the image of the degree-0 map?
inline DifferenceResult difference_class(const RRBOperator& op, const Matrix& F1, const Matrix& F2) {
  detail::check_shapes(op, {F1, F2});
  TComplex cx(op);
  auto sol = solve_with_certificate(coboundary_matrix(cx, 0), to_cochain_coords(F2 - F1));
  DifferenceResult r;
  if (sol.x) {
    r.cohomologous = true;
    r.X = *sol.x;
  } else {
    r.certificate = sol.certificate;
  }
  return r;
}

// L(X)z = <x,y,z>_g and D(X) for X on the pair basis of g.
inline Matrix L_of(const RRBOperator& op, const Vector& X) {
  const std::size_t n = op.g_dim();
  const pair_basis pg(n);
  Matrix L(n, n);
  for (std::size_t k = 0; k < pg.size(); ++k) {
    if (X[k].is_zero()) continue;
    auto [x, y] = pg[k];
    for (std::size_t z = 0; z < n; ++z)
      for (const auto& [l, c] : op.g().ternary().entries({x, y, z})) L(l, z).add_product(X[k], c);
  }
  return L;
}

inline Matrix D_of(const RRBOperator& op, const Vector& X) {
  const pair_basis pg(op.g_dim());
  Matrix D(op.h_dim(), op.h_dim());
  for (std::size_t k = 0; k < pg.size(); ++k)
    if (!X[k].is_zero()) {
      auto [x, y] = pg[k];
      D += X[k] * op.action.D(x, y);
    }
  return D;
}

// (Id + tL(X), Id + tD(X)) is a homomorphism from T + tF2 to T + tF1,
// checked coefficient by coefficient.
inline Report check_equivalence(const RRBOperator& op, const Matrix& F1, const Matrix& F2, const Vector& X,
                                std::size_t limit = Report::default_limit) {
  detail::check_shapes(op, {F1, F2});
  const std::size_t n = op.g_dim(), m = op.h_dim();
  require(X.size() == pair_basis(n).size(), "ShapeMismatch", "element of wedge^2 g has the wrong length");
  Report r("equivalence of linear deformations", limit);
  const Matrix L = L_of(op, X), DX = D_of(op, X);
  const Matrix Ig = Matrix::identity(n), Ih = Matrix::identity(m);
  const auto& a = op.action;
  auto coef_name = [](const char* base, std::size_t k) { return std::string(base) + ".t" + std::to_string(k); };
  auto check_poly = [&](const char* base, const std::vector<Matrix>& coeffs, std::vector<std::size_t> wit) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      r.mark(coef_name(base, k));
      if (!coeffs[k].is_zero()) r.fail(coef_name(base, k), wit, flatten(coeffs[k]));
    }
  };

  // psi_g(T + tF2) = (T + tF1)psi_h
  check_poly("intertwine", {op.T - op.T, L * op.T + F2 - F1 - op.T * DX, L * F2 - F1 * DX}, {});

  // psi_g and psi_h preserve the brackets of g and h.
  for (int which = 0; which < 2; ++which) {
    const LYAlgebra& A = which == 0 ? op.g() : op.h();
    const Matrix& P = which == 0 ? L : DX;
    const char* b2 = which == 0 ? "psi_g.binary" : "psi_h.binary";
    const char* b3 = which == 0 ? "psi_g.ternary" : "psi_h.ternary";
    const std::size_t d = A.dim();
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x + 1; y < d; ++y) {
        Vector ex = unit(d, x), ey = unit(d, y), Px = P * ex, Py = P * ey;
        Vector c1 = P * A.bracket2(ex, ey) - A.bracket2(Px, ey) - A.bracket2(ex, Py);
        Vector c2 = -A.bracket2(Px, Py);
        Matrix m1 = Matrix::from_columns({c1}, d), m2 = Matrix::from_columns({c2}, d);
        check_poly(b2, {Matrix(d, 1), m1, m2}, {x, y});
        for (std::size_t z = 0; z < d; ++z) {
          Vector ez = unit(d, z), Pz = P * ez;
          Vector t1 = P * A.bracket3(ex, ey, ez) - A.bracket3(Px, ey, ez) - A.bracket3(ex, Py, ez) -
                      A.bracket3(ex, ey, Pz);
          Vector t2 = -(A.bracket3(Px, Py, ez) + A.bracket3(Px, ey, Pz) + A.bracket3(ex, Py, Pz));
          Vector t3 = -A.bracket3(Px, Py, Pz);
          check_poly(b3, {Matrix(d, 1), Matrix::from_columns({t1}, d), Matrix::from_columns({t2}, d),
                          Matrix::from_columns({t3}, d)},
                     {x, y, z});
        }
      }
  }

  // psi_h rho(x) = rho(psi_g x) psi_h, and the same for mu.
  for (std::size_t x = 0; x < n; ++x) {
    Vector ex = unit(n, x), Lx = L * ex;
    check_poly("rho_equivariant", {Matrix(m, m), DX * a.rho(ex) - a.rho(Lx) - a.rho(ex) * DX, -(a.rho(Lx) * DX)},
               {x});
    for (std::size_t y = 0; y < n; ++y) {
      Vector ey = unit(n, y), Ly = L * ey;
      Matrix c1 = DX * a.mu(ex, ey) - a.mu(Lx, ey) - a.mu(ex, Ly) - a.mu(ex, ey) * DX;
      Matrix c2 = -(a.mu(Lx, Ly) + (a.mu(Lx, ey) + a.mu(ex, Ly)) * DX);
      Matrix c3 = -(a.mu(Lx, Ly) * DX);
      check_poly("mu_equivariant", {Matrix(m, m), c1, c2, c3}, {x, y});
    }
  }
  Vector diff = to_cochain_coords(F2 - F1) - zero_cochain_map(op, X).coords;
  r.note(std::string("F2 - F1 equals d(X): ") + (is_zero(diff) ? "yes" : "no"));
  return r;
}

}  // namespace lya
