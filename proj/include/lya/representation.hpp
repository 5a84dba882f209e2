#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace lya {

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Vector flatten(const Matrix& m) { return m.entries(); }

// Representation (rho, mu) of `acting` on the carrier of `carrier`. D is
// derived from rho and mu at construction.
class RepAction {
 public:
  RepAction() = default;
  RepAction(LYAlgebra acting, LYAlgebra carrier, std::vector<Matrix> rho, std::vector<Matrix> mu)
      : g_(std::move(acting)), h_(std::move(carrier)), rho_(std::move(rho)), mu_(std::move(mu)) {
    std::size_t ng = g_.dim(), nh = h_.dim();
    require(rho_.size() == ng, "ShapeMismatch", "rho needs one matrix per acting basis vector");
    require(mu_.size() == ng * ng, "ShapeMismatch", "mu needs dim(g)^2 matrices");
    for (const auto& m : rho_) require(m.rows() == nh && m.cols() == nh, "ShapeMismatch", "rho matrix shape");
    for (const auto& m : mu_) require(m.rows() == nh && m.cols() == nh, "ShapeMismatch", "mu matrix shape");
    D_ = derive_D();
  }

  // Zero representation of g on h.
  static RepAction zero(LYAlgebra acting, LYAlgebra carrier) {
    std::size_t ng = acting.dim(), nh = carrier.dim();
    return RepAction(std::move(acting), std::move(carrier), std::vector<Matrix>(ng, Matrix(nh, nh)),
                     std::vector<Matrix>(ng * ng, Matrix(nh, nh)));
  }

  const LYAlgebra& acting() const { return g_; }
  const LYAlgebra& carrier() const { return h_; }
  std::size_t acting_dim() const { return g_.dim(); }
  std::size_t carrier_dim() const { return h_.dim(); }

  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  const Matrix& mu(std::size_t i, std::size_t j) const { return mu_[i * g_.dim() + j]; }
  const Matrix& D(std::size_t i, std::size_t j) const { return D_[i * g_.dim() + j]; }
  const std::vector<Matrix>& rho_all() const { return rho_; }
  const std::vector<Matrix>& mu_all() const { return mu_; }

  Matrix rho(const Vector& x) const { return combine1(rho_, x); }
  Matrix mu(const Vector& x, const Vector& y) const { return combine2(mu_, x, y); }
  Matrix D(const Vector& x, const Vector& y) const { return combine2(D_, x, y); }

  bool action_certified() const { return certified_; }
  void set_action_certified(bool v) { certified_ = v; }

  // D(x,y) = mu(y,x) - mu(x,y) + [rho(x), rho(y)] - rho([x,y]).
  std::vector<Matrix> derive_D() const {
    std::size_t n = g_.dim();
    std::vector<Matrix> D(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        D[i * n + j] = mu(j, i) - mu(i, j) + commutator(rho_[i], rho_[j]) - rho(g_.bracket2(i, j));
    return D;
  }

  bool D_consistent() const { return derive_D() == D_; }

 private:
  Matrix combine1(const std::vector<Matrix>& ms, const Vector& x) const {
    require(x.size() == g_.dim(), "DimMismatch", "acting vector length");
    Matrix out(h_.dim(), h_.dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) out += x[i] * ms[i];
    return out;
  }
  Matrix combine2(const std::vector<Matrix>& ms, const Vector& x, const Vector& y) const {
    require(x.size() == g_.dim() && y.size() == g_.dim(), "DimMismatch", "acting vector length");
    std::size_t n = g_.dim();
    Matrix out(h_.dim(), h_.dim());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[j].is_zero()) out += (x[i] * y[j]) * ms[i * n + j];
    }
    return out;
  }

  LYAlgebra g_, h_;
  std::vector<Matrix> rho_, mu_, D_;
  bool certified_ = false;
};

inline Report check_representation(const RepAction& r, std::size_t limit = Report::default_limit) {
  Report rep("representation of " + r.acting().name() + " on " + r.carrier().name(), limit);
  const LYAlgebra& g = r.acting();
  const std::size_t n = g.dim();
  for (auto eq : {"mu_bracket_left", "mu_bracket_right", "rho_ternary", "mu_mu", "mu_derivation"}) rep.mark(eq);
  if (!r.D_consistent()) rep.fail("D_cache", {}, {});

  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Matrix s = r.mu(g.bracket2(x, y), unit(n, z)) - r.mu(x, z) * r.rho(y) + r.mu(y, z) * r.rho(x);
          if (record(rep, "mu_bracket_left", {x, y, z}, flatten(s))) return;
        }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Matrix s = r.mu(unit(n, x), g.bracket2(y, z)) - r.rho(y) * r.mu(x, z) + r.rho(z) * r.mu(x, y);
          if (record(rep, "mu_bracket_right", {x, y, z}, flatten(s))) return;
        }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Matrix s = r.rho(g.bracket3(x, y, z)) - commutator(r.D(x, y), r.rho(z));
          if (record(rep, "rho_ternary", {x, y, z}, flatten(s))) return;
        }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Matrix s = r.mu(z, w) * r.mu(x, y) - r.mu(y, w) * r.mu(x, z) - r.mu(unit(n, x), g.bracket3(y, z, w)) +
                       r.D(y, z) * r.mu(x, w);
            if (record(rep, "mu_mu", {x, y, z, w}, flatten(s))) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Matrix s = r.mu(g.bracket3(x, y, z), unit(n, w)) + r.mu(unit(n, z), g.bracket3(x, y, w)) -
                       commutator(r.D(x, y), r.mu(z, w));
            if (record(rep, "mu_derivation", {x, y, z, w}, flatten(s))) return;
          }
  }();
  return rep;
}

// Consequences of the representation axioms; never fail for a genuine
// representation.
inline Report check_lemma_identities(const RepAction& r, std::size_t limit = Report::default_limit) {
  Report rep("derived identities", limit);
  const LYAlgebra& g = r.acting();
  const std::size_t n = g.dim();
  for (auto eq : {"D_cyclic", "D_derivation", "mu_ternary_left"}) rep.mark(eq);
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Matrix s = r.D(g.bracket2(x, y), unit(n, z)) + r.D(g.bracket2(y, z), unit(n, x)) +
                     r.D(g.bracket2(z, x), unit(n, y));
          if (record(rep, "D_cyclic", {x, y, z}, flatten(s))) return;
        }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Matrix s = r.D(g.bracket3(x, y, z), unit(n, w)) + r.D(unit(n, z), g.bracket3(x, y, w)) -
                       commutator(r.D(x, y), r.D(z, w));
            if (record(rep, "D_derivation", {x, y, z, w}, flatten(s))) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Matrix s = r.mu(g.bracket3(x, y, z), unit(n, w)) -
                       (r.mu(x, w) * r.mu(z, y) - r.mu(y, w) * r.mu(z, x) - r.mu(z, w) * r.D(x, y));
            if (record(rep, "mu_ternary_left", {x, y, z, w}, flatten(s))) return;
          }
  }();
  return rep;
}

// ad_x z = [x,z], R(x,y) z = <z,x,y>.
inline RepAction adjoint_rep(const LYAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Matrix> rho(n, Matrix(n, n)), mu(n * n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : a.binary().entries({i, j})) rho[i](k, j) = v;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [l, v] : a.ternary().entries({z, i, j})) mu[i * n + j](l, z) = v;
  return RepAction(a, a, std::move(rho), std::move(mu));
}

inline Report check_action_report(const RepAction& r, std::size_t limit = Report::default_limit) {
  Report rep("action of " + r.acting().name() + " on " + r.carrier().name(), limit);
  const LYAlgebra& h = r.carrier();
  const std::size_t ng = r.acting_dim(), nh = h.dim();
  Subspace c = center(h);
  for (auto eq : {"rho_central", "mu_central", "D_central", "rho_kills_binary", "mu_kills_binary",
                  "D_kills_binary", "rho_kills_ternary", "mu_kills_ternary", "D_kills_ternary"})
    rep.mark(eq);

  auto central = [&](const char* eq, const Matrix& m, std::vector<std::size_t> w) {
    for (std::size_t u = 0; u < nh; ++u) {
      Vector v = m.column(u);
      if (!c.contains(v)) {
        auto wit = w;
        wit.push_back(u);
        if (rep.fail(eq, wit, v)) return true;
      }
    }
    return false;
  };
  [&] {
    for (std::size_t x = 0; x < ng; ++x)
      if (central("rho_central", r.rho(x), {x})) return;
  }();
  [&] {
    for (std::size_t x = 0; x < ng; ++x)
      for (std::size_t y = 0; y < ng; ++y)
        if (central("mu_central", r.mu(x, y), {x, y})) return;
  }();
  [&] {
    for (std::size_t x = 0; x < ng; ++x)
      for (std::size_t y = 0; y < ng; ++y)
        if (central("D_central", r.D(x, y), {x, y})) return;
  }();

  std::vector<std::pair<std::vector<std::size_t>, Vector>> bin, tern;
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t v = u + 1; v < nh; ++v) bin.push_back({{u, v}, h.bracket2(u, v)});
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t v = u + 1; v < nh; ++v)
      for (std::size_t w = 0; w < nh; ++w) tern.push_back({{u, v, w}, h.bracket3(u, v, w)});

  auto kills = [&](const char* eq, const Matrix& m, std::vector<std::size_t> acting_idx,
                   const std::vector<std::pair<std::vector<std::size_t>, Vector>>& targets) {
    for (const auto& [idx, val] : targets) {
      if (is_zero(val)) continue;
      auto wit = acting_idx;
      wit.insert(wit.end(), idx.begin(), idx.end());
      if (record(rep, eq, wit, m * val)) return true;
    }
    return false;
  };
  for (int pass = 0; pass < 2; ++pass) {
    const auto& targets = pass == 0 ? bin : tern;
    const char* e_rho = pass == 0 ? "rho_kills_binary" : "rho_kills_ternary";
    const char* e_mu = pass == 0 ? "mu_kills_binary" : "mu_kills_ternary";
    const char* e_D = pass == 0 ? "D_kills_binary" : "D_kills_ternary";
    [&] {
      for (std::size_t x = 0; x < ng; ++x)
        if (kills(e_rho, r.rho(x), {x}, targets)) return;
    }();
    [&] {
      for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t y = 0; y < ng; ++y)
          if (kills(e_mu, r.mu(x, y), {x, y}, targets)) return;
    }();
    [&] {
      for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t y = 0; y < ng; ++y)
          if (kills(e_D, r.D(x, y), {x, y}, targets)) return;
    }();
  }
  return rep;
}

// Checks the action conditions and records the verdict on `r`.
inline Report check_action(RepAction& r, std::size_t limit = Report::default_limit) {
  Report rep = check_action_report(r, limit);
  r.set_action_certified(rep.passed());
  return rep;
}

inline Report check_action(const RepAction& r, std::size_t limit = Report::default_limit) {
  return check_action_report(r, limit);
}

// Algebra on g + h (g first); requires a certified action.
inline LYAlgebra semidirect_product(const RepAction& r) {
  if (!r.action_certified()) throw error("NotAnAction", "semidirect product needs a certified action");
  const LYAlgebra& g = r.acting();
  const LYAlgebra& h = r.carrier();
  std::size_t ng = g.dim(), nh = h.dim(), N = ng + nh;
  std::vector<std::string> names = g.basis_names();
  for (const auto& s : h.basis_names()) names.push_back(s + "'");
  LYAlgebra s(N, g.name() + " x| " + h.name(), names);

  auto lift = [&](std::size_t i) { return unit(N, i); };
  auto split = [&](const Vector& v, Vector& x, Vector& u) {
    x.assign(v.begin(), v.begin() + static_cast<long>(ng));
    u.assign(v.begin() + static_cast<long>(ng), v.end());
  };
  auto join = [&](const Vector& x, const Vector& u) {
    Vector v = x;
    v.insert(v.end(), u.begin(), u.end());
    return v;
  };
  auto br2 = [&](const Vector& a, const Vector& b) {
    Vector x, u, y, v;
    split(a, x, u);
    split(b, y, v);
    return join(g.bracket2(x, y), r.rho(x) * v - r.rho(y) * u + h.bracket2(u, v));
  };
  auto br3 = [&](const Vector& a, const Vector& b, const Vector& c) {
    Vector x, u, y, v, z, w;
    split(a, x, u);
    split(b, y, v);
    split(c, z, w);
    return join(g.bracket3(x, y, z),
                r.D(x, y) * w + r.mu(y, z) * u - r.mu(x, z) * v + h.bracket3(u, v, w));
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      Vector b = br2(lift(i), lift(j));
      for (std::size_t k = 0; k < N; ++k) s.set_binary(i, j, k, b[k]);
      for (std::size_t k = 0; k < N; ++k) {
        Vector t = br3(lift(i), lift(j), lift(k));
        for (std::size_t l = 0; l < N; ++l) s.set_ternary(i, j, k, l, t[l]);
      }
    }
  return s;
}

}  // namespace lya
