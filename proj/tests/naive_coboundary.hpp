#pragma once

// Functional evaluation of the Yamaguti coboundary, straight from the
// defining formula on vector arguments. Used only to cross-check the
// row-assembled coboundary matrices.

#include <functional>
#include <utility>
#include <vector>

#include "lya/cochain.hpp"

namespace naive {

using lya::Rational;
using lya::Vector;
using wedge_pair = std::pair<Vector, Vector>;

// f(X_1..X_k) and g(X_1..X_k, z) as functions of vectors.
using f_fn = std::function<Vector(const std::vector<wedge_pair>&)>;
using g_fn = std::function<Vector(const std::vector<wedge_pair>&, const Vector&)>;

// Reads a degree-p cochain (p >= 2) as functions; the pair slots are
// expanded bilinearly with the wedge sign.
inline std::pair<f_fn, g_fn> as_functions(const lya::Cochain& c) {
  const auto L = c.layout;
  const lya::pair_basis pb(L.m);
  auto expand = [L, pb](const std::vector<wedge_pair>& X, auto&& visit) {
    std::vector<std::size_t> tuple(X.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t s, Rational w) {
      if (s == X.size()) {
        visit(L.encode(tuple), w);
        return;
      }
      for (std::size_t i = 0; i < L.m; ++i) {
        if (X[s].first[i].is_zero()) continue;
        for (std::size_t j = 0; j < L.m; ++j) {
          if (X[s].second[j].is_zero() || i == j) continue;
          auto [sg, idx] = pb.wedge(i, j);
          tuple[s] = idx;
          Rational c2 = X[s].first[i] * X[s].second[j];
          rec(s + 1, sg > 0 ? w * c2 : -(w * c2));
        }
      }
    };
    rec(0, Rational(1));
  };
  f_fn f = [c, L, expand](const std::vector<wedge_pair>& X) {
    Vector out(L.n);
    expand(X, [&](std::size_t t, const Rational& w) {
      for (std::size_t o = 0; o < L.n; ++o) out[o] += w * c.coords[L.f_index(t, o)];
    });
    return out;
  };
  g_fn g = [c, L, expand](const std::vector<wedge_pair>& X, const Vector& z) {
    Vector out(L.n);
    expand(X, [&](std::size_t t, const Rational& w) {
      for (std::size_t k = 0; k < L.m; ++k) {
        if (z[k].is_zero()) continue;
        for (std::size_t o = 0; o < L.n; ++o) out[o] += w * z[k] * c.coords[L.g_index(t, k, o)];
      }
    });
    return out;
  };
  return {f, g};
}

inline Rational sgn(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// delta of a degree-(n+1) cochain, n >= 1, evaluated at X_1..X_{n+1} (and z).
inline Vector delta_I(const lya::RepAction& r, const f_fn& f, const g_fn& g, const std::vector<wedge_pair>& X) {
  const auto& A = r.acting();
  const std::size_t n = X.size() - 1;
  std::vector<wedge_pair> head(X.begin(), X.end() - 1);
  const Vector &x = X[n].first, &y = X[n].second;
  Vector out = sgn(n) * (r.rho(x) * g(head, y) - r.rho(y) * g(head, x) - g(head, A.bracket2(x, y)));
  auto hat = [&](std::size_t k) {
    std::vector<wedge_pair> t;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (i != k) t.push_back(X[i]);
    return t;
  };
  for (std::size_t k = 1; k <= n; ++k)
    out = out + sgn(k + 1) * (r.D(X[k - 1].first, X[k - 1].second) * f(hat(k - 1)));
  for (std::size_t k = 1; k <= n + 1; ++k)
    for (std::size_t l = k + 1; l <= n + 1; ++l) {
      const auto& [xk, yk] = X[k - 1];
      const auto& [xl, yl] = X[l - 1];
      auto t1 = X, t2 = X;
      t1[l - 1] = {A.bracket3(xk, yk, xl), yl};
      t2[l - 1] = {xl, A.bracket3(xk, yk, yl)};
      t1.erase(t1.begin() + static_cast<long>(k - 1));
      t2.erase(t2.begin() + static_cast<long>(k - 1));
      out = out + sgn(k) * (f(t1) + f(t2));
    }
  return out;
}

inline Vector delta_II(const lya::RepAction& r, const g_fn& g, const std::vector<wedge_pair>& X, const Vector& z) {
  const auto& A = r.acting();
  const std::size_t n = X.size() - 1;
  std::vector<wedge_pair> head(X.begin(), X.end() - 1);
  const Vector &x = X[n].first, &y = X[n].second;
  Vector out = sgn(n) * (r.mu(y, z) * g(head, x) - r.mu(x, z) * g(head, y));
  auto hat = [&](std::size_t k) {
    std::vector<wedge_pair> t;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (i != k) t.push_back(X[i]);
    return t;
  };
  for (std::size_t k = 1; k <= n + 1; ++k)
    out = out + sgn(k + 1) * (r.D(X[k - 1].first, X[k - 1].second) * g(hat(k - 1), z));
  for (std::size_t k = 1; k <= n + 1; ++k)
    for (std::size_t l = k + 1; l <= n + 1; ++l) {
      const auto& [xk, yk] = X[k - 1];
      const auto& [xl, yl] = X[l - 1];
      auto t1 = X, t2 = X;
      t1[l - 1] = {A.bracket3(xk, yk, xl), yl};
      t2[l - 1] = {xl, A.bracket3(xk, yk, yl)};
      t1.erase(t1.begin() + static_cast<long>(k - 1));
      t2.erase(t2.begin() + static_cast<long>(k - 1));
      out = out + sgn(k) * (g(t1, z) + g(t2, z));
    }
  for (std::size_t k = 1; k <= n + 1; ++k)
    out = out + sgn(k) * g(hat(k - 1), A.bracket3(X[k - 1].first, X[k - 1].second, z));
  return out;
}

// Full coboundary coordinates of a cochain of degree p >= 1.
inline Vector coboundary(const lya::RepAction& r, const lya::Cochain& c) {
  const auto L = c.layout;
  const lya::cochain_layout out{L.degree + 1, L.m, L.n};
  const lya::pair_basis pb(L.m);
  Vector res(out.dim());
  auto e = [&](std::size_t i) { return lya::unit(L.m, i); };
  if (L.degree == 1) {
    auto f = [&](const Vector& x) {
      Vector o(L.n);
      for (std::size_t s = 0; s < L.m; ++s)
        for (std::size_t k = 0; k < L.n; ++k) o[k] += x[s] * c.coords[s * L.n + k];
      return o;
    };
    const auto& A = r.acting();
    for (std::size_t t = 0; t < pb.size(); ++t) {
      auto [a, b] = pb[t];
      Vector x = e(a), y = e(b);
      Vector v = r.rho(x) * f(y) - r.rho(y) * f(x) - f(A.bracket2(x, y));
      for (std::size_t o = 0; o < L.n; ++o) res[out.f_index(t, o)] = v[o];
      for (std::size_t z = 0; z < L.m; ++z) {
        Vector w = r.D(x, y) * f(e(z)) + r.mu(y, e(z)) * f(x) - r.mu(x, e(z)) * f(y) - f(A.bracket3(x, y, e(z)));
        for (std::size_t o = 0; o < L.n; ++o) res[out.g_index(t, z, o)] = w[o];
      }
    }
    return res;
  }
  auto [f, g] = as_functions(c);
  for (std::size_t t = 0; t < out.K(); ++t) {
    std::vector<wedge_pair> X;
    for (auto idx : out.decode(t)) X.emplace_back(e(pb[idx].first), e(pb[idx].second));
    Vector v = delta_I(r, f, g, X);
    for (std::size_t o = 0; o < L.n; ++o) res[out.f_index(t, o)] = v[o];
    for (std::size_t z = 0; z < L.m; ++z) {
      Vector w = delta_II(r, g, X, e(z));
      for (std::size_t o = 0; o < L.n; ++o) res[out.g_index(t, z, o)] = w[o];
    }
  }
  return res;
}

}  // namespace naive
