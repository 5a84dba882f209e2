#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "representation.hpp"

namespace lya {

// Weight-1 relative Rota-Baxter operator T: h -> g over an action of g on h.
// T is dim(g) x dim(h).
struct RRBOperator {
  RepAction action;
  Matrix T;
  bool verified = false;

  std::size_t g_dim() const { return action.acting_dim(); }
  std::size_t h_dim() const { return action.carrier_dim(); }
  const LYAlgebra& g() const { return action.acting(); }
  const LYAlgebra& h() const { return action.carrier(); }
};

struct HomPair {
  Matrix psi_g;  // g -> g
  Matrix psi_h;  // h -> h
};

inline void check_operator_shape(const RRBOperator& op) {
  require(op.T.rows() == op.g_dim() && op.T.cols() == op.h_dim(), "ShapeMismatch",
          "operator matrix must be dim(g) x dim(h)");
}

// rho(Tu)v - rho(Tv)u + [u,v]_h
inline Vector rrb_binary_inner(const RRBOperator& op, const Vector& u, const Vector& v) {
  const RepAction& a = op.action;
  return a.rho(op.T * u) * v - a.rho(op.T * v) * u + op.h().bracket2(u, v);
}

// D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v + <u,v,w>_h
inline Vector rrb_ternary_inner(const RRBOperator& op, const Vector& u, const Vector& v, const Vector& w) {
  const RepAction& a = op.action;
  Vector Tu = op.T * u, Tv = op.T * v, Tw = op.T * w;
  return a.D(Tu, Tv) * w + a.mu(Tv, Tw) * u - a.mu(Tu, Tw) * v + op.h().bracket3(u, v, w);
}

inline Report check_rrb_report(const RRBOperator& op, std::size_t limit = Report::default_limit) {
  check_operator_shape(op);
  Report r("relative Rota-Baxter operator", limit);
  if (!op.action.action_certified()) r.note("action is not certified");
  r.mark("rrb_binary");
  r.mark("rrb_ternary");
  const std::size_t m = op.h_dim();
  std::vector<Vector> e, Te;
  for (std::size_t i = 0; i < m; ++i) {
    e.push_back(unit(m, i));
    Te.push_back(op.T * e.back());
  }
  [&] {
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v) {
        Vector res = op.g().bracket2(Te[u], Te[v]) - op.T * rrb_binary_inner(op, e[u], e[v]);
        if (record(r, "rrb_binary", {u, v}, res)) return;
      }
  }();
  [&] {
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) {
          Vector res = op.g().bracket3(Te[u], Te[v], Te[w]) - op.T * rrb_ternary_inner(op, e[u], e[v], e[w]);
          if (record(r, "rrb_ternary", {u, v, w}, res)) return;
        }
  }();
  return r;
}

inline Report check_rrb(RRBOperator& op, std::size_t limit = Report::default_limit) {
  Report r = check_rrb_report(op, limit);
  op.verified = r.passed();
  return r;
}

inline Report check_rrb(const RRBOperator& op, std::size_t limit = Report::default_limit) {
  return check_rrb_report(op, limit);
}

// Closure of {Tu + u} under the semidirect brackets. Residual is the
// g-component minus T applied to the h-component.
inline Report graph_subalgebra_check(const RRBOperator& op, const LYAlgebra& semidirect,
                                     std::size_t limit = Report::default_limit) {
  check_operator_shape(op);
  Report r("graph subalgebra", limit);
  r.mark("graph_binary");
  r.mark("graph_ternary");
  const std::size_t ng = op.g_dim(), m = op.h_dim();
  std::vector<Vector> gr;
  for (std::size_t a = 0; a < m; ++a) {
    Vector v = op.T.column(a);
    v.resize(ng + m);
    v[ng + a] = Rational(1);
    gr.push_back(std::move(v));
  }
  auto off_graph = [&](const Vector& s) {
    Vector x(s.begin(), s.begin() + static_cast<long>(ng)), u(s.begin() + static_cast<long>(ng), s.end());
    return x - op.T * u;
  };
  [&] {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (record(r, "graph_binary", {a, b}, off_graph(semidirect.bracket2(gr[a], gr[b])))) return;
  }();
  [&] {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (record(r, "graph_ternary", {a, b, c}, off_graph(semidirect.bracket3(gr[a], gr[b], gr[c])))) return;
  }();
  return r;
}

inline Report graph_subalgebra_check(const RRBOperator& op, std::size_t limit = Report::default_limit) {
  return graph_subalgebra_check(op, semidirect_product(op.action), limit);
}

inline Report check_nijenhuis(const LYAlgebra& A, const Matrix& N, std::size_t limit = Report::default_limit) {
  const std::size_t n = A.dim();
  require(N.rows() == n && N.cols() == n, "DimMismatch", "Nijenhuis operator must be square of the algebra's dim");
  Report r("Nijenhuis operator", limit);
  r.mark("nijenhuis_binary");
  r.mark("nijenhuis_ternary");
  Matrix N2 = N * N;
  std::vector<Vector> e, Ne;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(unit(n, i));
    Ne.push_back(N.column(i));
  }
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Vector rhs = N * (A.bracket2(Ne[x], e[y]) + A.bracket2(e[x], Ne[y]) - N * A.bracket2(x, y));
        if (record(r, "nijenhuis_binary", {x, y}, A.bracket2(Ne[x], Ne[y]) - rhs)) return;
      }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vector inner = A.bracket3(Ne[x], Ne[y], e[z]) + A.bracket3(Ne[x], e[y], Ne[z]) +
                         A.bracket3(e[x], Ne[y], Ne[z]) -
                         N * (A.bracket3(Ne[x], e[y], e[z]) + A.bracket3(e[x], Ne[y], e[z]) +
                              A.bracket3(e[x], e[y], Ne[z])) +
                         N2 * A.bracket3(x, y, z);
          if (record(r, "nijenhuis_ternary", {x, y, z}, A.bracket3(Ne[x], Ne[y], Ne[z]) - N * inner)) return;
        }
  }();
  return r;
}

// [[Id, T], [0, 0]] on g + h.
inline Matrix lift_operator(const RRBOperator& op) {
  check_operator_shape(op);
  const std::size_t ng = op.g_dim(), m = op.h_dim();
  Matrix L(ng + m, ng + m);
  for (std::size_t i = 0; i < ng; ++i) L(i, i) = Rational(1);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < m; ++j) L(i, ng + j) = op.T(i, j);
  return L;
}

inline LYAlgebra descent_algebra(const RRBOperator& op) {
  if (!op.verified) throw error("Unverified", "descent algebra needs a verified operator");
  const std::size_t m = op.h_dim();
  LYAlgebra d(m, "descent(" + op.h().name() + ")", op.h().basis_names());
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      Vector b = rrb_binary_inner(op, unit(m, u), unit(m, v));
      for (std::size_t k = 0; k < m; ++k) d.set_binary(u, v, k, b[k]);
      for (std::size_t w = 0; w < m; ++w) {
        Vector t = rrb_ternary_inner(op, unit(m, u), unit(m, v), unit(m, w));
        for (std::size_t l = 0; l < m; ++l) d.set_ternary(u, v, w, l, t[l]);
      }
    }
  return d;
}

// Checks every hypothesis of the projection construction; notes record the
// binary and ternary derived spans.
inline Report projection_hypotheses(const LYAlgebra& A, const Subspace& h, const Subspace& t) {
  Report r("projection hypotheses", Report::unlimited);
  const std::size_t n = A.dim();
  require(h.ambient_dim() == n && t.ambient_dim() == n, "AmbientMismatch", "subspaces must live in the algebra");
  auto hyp = [&](const char* name, bool ok) {
    if (ok)
      r.mark(name);
    else
      r.fail(name, {}, {});
  };
  RepAction ad = adjoint_rep(A);
  hyp("adjoint_action", check_action(ad, 1).passed());

  bool abelian = true;
  for (const auto& x : h.basis())
    for (const auto& y : h.basis()) {
      if (!is_zero(A.bracket2(x, y))) abelian = false;
      for (const auto& z : h.basis())
        if (!is_zero(A.bracket3(x, y, z))) abelian = false;
    }
  hyp("abelian", abelian);

  Subspace g1 = derived_algebra(A);
  hyp("g1_meets_h_trivially", intersect(g1, h).dim() == 0);
  hyp("complement", h.dim() + t.dim() == n && sum(h, t).dim() == n);
  r.note("binary span dim " + std::to_string(binary_span(A).dim()) + ", ternary span dim " +
         std::to_string(ternary_span(A).dim()) + ", g1 dim " + std::to_string(g1.dim()));
  return r;
}

// Projection onto h along t over the adjoint action, after re-checking the
// hypotheses that make it a relative Rota-Baxter operator.
inline RRBOperator projection_operator(const LYAlgebra& A, const Subspace& h, const Subspace& t) {
  Report hy = projection_hypotheses(A, h, t);
  for (const auto& [name, ok] : hy.equations())
    if (!ok) throw error("PreconditionFailed", name);
  const std::size_t n = A.dim();
  std::vector<Vector> cols = h.basis();
  cols.insert(cols.end(), t.basis().begin(), t.basis().end());
  Matrix B = Matrix::from_columns(cols, n);
  Matrix keep(n, n);
  for (std::size_t i = 0; i < h.dim(); ++i) keep(i, i) = Rational(1);
  Matrix P = B * keep * *inverse(B);
  RepAction ad = adjoint_rep(A);
  check_action(ad);
  RRBOperator op{ad, P, false};
  check_rrb(op);
  return op;
}

// from: T' over (g', h'), to: T over (g, h); psi_g: g' -> g, psi_h: h' -> h.
inline Report check_rrb_homomorphism(const RRBOperator& from, const RRBOperator& to, const HomPair& pr,
                                     std::size_t limit = Report::default_limit) {
  const RepAction& a1 = from.action;
  const RepAction& a2 = to.action;
  const std::size_t ng = a1.acting_dim(), nh = a1.carrier_dim();
  require(pr.psi_g.rows() == a2.acting_dim() && pr.psi_g.cols() == ng, "DimMismatch", "psi_g shape");
  require(pr.psi_h.rows() == a2.carrier_dim() && pr.psi_h.cols() == nh, "DimMismatch", "psi_h shape");
  Report r("relative Rota-Baxter homomorphism", limit);
  r.merge(check_homomorphism(a1.acting(), a2.acting(), pr.psi_g, limit), "psi_g.");
  r.merge(check_homomorphism(a1.carrier(), a2.carrier(), pr.psi_h, limit), "psi_h.");
  for (auto eq : {"intertwines", "rho_equivariant", "mu_equivariant", "D_equivariant"}) r.mark(eq);

  Matrix lhs = pr.psi_g * from.T, rhs = to.T * pr.psi_h;
  if (!(lhs == rhs)) r.fail("intertwines", {}, flatten(lhs - rhs));

  std::vector<Vector> img;
  for (std::size_t i = 0; i < ng; ++i) img.push_back(pr.psi_g.column(i));
  [&] {
    for (std::size_t x = 0; x < ng; ++x) {
      Matrix s = pr.psi_h * a1.rho(x) - a2.rho(img[x]) * pr.psi_h;
      if (record(r, "rho_equivariant", {x}, flatten(s))) return;
    }
  }();
  for (const char* eq : {"mu_equivariant", "D_equivariant"}) {
    bool is_mu = eq[0] == 'm';
    [&] {
      for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t y = 0; y < ng; ++y) {
          Matrix s = is_mu ? pr.psi_h * a1.mu(x, y) - a2.mu(img[x], img[y]) * pr.psi_h
                           : pr.psi_h * a1.D(x, y) - a2.D(img[x], img[y]) * pr.psi_h;
          if (record(r, eq, {x, y}, flatten(s))) return;
        }
    }();
  }
  return r;
}

}  // namespace lya
