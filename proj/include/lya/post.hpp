#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rota_baxter.hpp"

namespace lya {

// Post-Lie-Yamaguti algebra: dot and angle form a Lie-Yamaguti algebra, star
// and brace carry no symmetry. brace_D, [,]_C and <,,>_C are cached.
class PostLYAlgebra {
 public:
  PostLYAlgebra() = default;
  PostLYAlgebra(bilinear dot, bilinear star, trilinear angle, trilinear brace, std::string name = {})
      : name_(std::move(name)), dot_(std::move(dot)), star_(std::move(star)), angle_(std::move(angle)),
        brace_(std::move(brace)) {
    const std::size_t n = dot_.out_dim();
    auto sq2 = [n](const bilinear& b) { return b.out_dim() == n && b.in_dims()[0] == n && b.in_dims()[1] == n; };
    auto sq3 = [n](const trilinear& t) {
      return t.out_dim() == n && t.in_dims()[0] == n && t.in_dims()[1] == n && t.in_dims()[2] == n;
    };
    require(sq2(dot_) && sq2(star_) && sq3(angle_) && sq3(brace_), "ShapeMismatch", "post-algebra tensor shapes");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          require(dot_.at({i, j}, k) == -dot_.at({j, i}, k), "ShapeMismatch", "dot is not antisymmetric");
          for (std::size_t l = 0; l < n; ++l)
            require(angle_.at({i, j, k}, l) == -angle_.at({j, i, k}, l), "ShapeMismatch",
                    "angle is not antisymmetric in its first two slots");
        }
    build_caches();
  }

  static PostLYAlgebra zero(std::size_t n) {
    return PostLYAlgebra(square_bilinear(n), square_bilinear(n), square_trilinear(n), square_trilinear(n),
                         "zero" + std::to_string(n));
  }

  std::size_t dim() const { return dot_.out_dim(); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const bilinear& dot_tensor() const { return dot_; }
  const bilinear& star_tensor() const { return star_; }
  const trilinear& angle_tensor() const { return angle_; }
  const trilinear& brace_tensor() const { return brace_; }
  const trilinear& brace_D_tensor() const { return brace_D_; }
  const bilinear& sub_binary_tensor() const { return sub2_; }
  const trilinear& sub_ternary_tensor() const { return sub3_; }

  Vector dot(const Vector& x, const Vector& y) const { return dot_({&x, &y}); }
  Vector star(const Vector& x, const Vector& y) const { return star_({&x, &y}); }
  Vector angle(const Vector& x, const Vector& y, const Vector& z) const { return angle_({&x, &y, &z}); }
  Vector brace(const Vector& x, const Vector& y, const Vector& z) const { return brace_({&x, &y, &z}); }
  Vector brace_D(const Vector& x, const Vector& y, const Vector& z) const { return brace_D_({&x, &y, &z}); }
  Vector sub_binary(const Vector& x, const Vector& y) const { return sub2_({&x, &y}); }
  Vector sub_ternary(const Vector& x, const Vector& y, const Vector& z) const { return sub3_({&x, &y, &z}); }

  // (a*b)*c - a*(b*c)
  Vector associator(const Vector& a, const Vector& b, const Vector& c) const {
    return star(star(a, b), c) - star(a, star(b, c));
  }

  // Recomputes the caches from the four operations and compares.
  bool caches_consistent() const {
    PostLYAlgebra fresh = *this;
    fresh.build_caches();
    return fresh.brace_D_ == brace_D_ && fresh.sub2_ == sub2_ && fresh.sub3_ == sub3_;
  }

  // (A, dot, angle) as a Lie-Yamaguti algebra.
  LYAlgebra underlying() const {
    LYAlgebra a(dim(), name_.empty() ? std::string("post") : name_);
    copy_into(a, dot_, angle_);
    return a;
  }

  // Sub-adjacent structure without the axiom gate.
  LYAlgebra subadjacent_unchecked() const {
    LYAlgebra a(dim(), "subadjacent(" + name_ + ")");
    copy_into(a, sub2_, sub3_);
    return a;
  }

 private:
  static void copy_into(LYAlgebra& a, const bilinear& b, const trilinear& t) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        for (const auto& [k, v] : b.entries({i, j})) a.set_binary(i, j, k, v);
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& [l, v] : t.entries({i, j, k})) a.set_ternary(i, j, k, l, v);
      }
  }

  void build_caches() {
    const std::size_t n = dim();
    brace_D_ = square_trilinear(n);
    sub2_ = square_bilinear(n);
    sub3_ = square_trilinear(n);
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit(n, i));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vector b = star(e[x], e[y]) - star(e[y], e[x]) + dot(e[x], e[y]);
        for (std::size_t k = 0; k < n; ++k) sub2_.set({x, y}, k, b[k]);
        for (std::size_t z = 0; z < n; ++z) {
          Vector d = brace(e[z], e[y], e[x]) - brace(e[z], e[x], e[y]) + associator(e[y], e[x], e[z]) -
                     associator(e[x], e[y], e[z]) - star(dot(e[x], e[y]), e[z]);
          for (std::size_t l = 0; l < n; ++l) brace_D_.set({x, y, z}, l, d[l]);
        }
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vector t = brace_D(e[x], e[y], e[z]) + brace(e[x], e[y], e[z]) - brace(e[y], e[x], e[z]) +
                     angle(e[x], e[y], e[z]);
          for (std::size_t l = 0; l < n; ++l) sub3_.set({x, y, z}, l, t[l]);
        }
  }

  std::string name_;
  bilinear dot_, star_;
  trilinear angle_, brace_;
  trilinear brace_D_;
  bilinear sub2_;
  trilinear sub3_;
};

struct PostCheckOptions {
  // Use the two brace identities exactly as typeset in the source instead of
  // the forms carried over from the representation axioms.
  bool verbatim = false;
  std::size_t limit = Report::default_limit;
};

inline Report check_post_axioms(const PostLYAlgebra& A, PostCheckOptions opt = {}) {
  Report r("post-Lie-Yamaguti algebra " + A.name(), opt.limit);
  r.merge(check_ly_axioms(A.underlying(), opt.limit), "ly.");
  if (!A.caches_consistent()) r.fail("caches", {}, {});
  const std::size_t n = A.dim();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit(n, i));
  const char* ids[] = {"brace_middle_bracket", "brace_last_bracket", "ternary_star", "brace_ternary",
                       "brace_D_derivation", "star_dot", "star_angle_left", "star_angle_right",
                       "star_kills_dot", "brace_kills_dot", "star_kills_angle", "brace_kills_angle"};
  for (auto id : ids) r.mark(id);

  auto br = [&](const Vector& a, const Vector& b, const Vector& c) { return A.brace(a, b, c); };
  auto bD = [&](const Vector& a, const Vector& b, const Vector& c) { return A.brace_D(a, b, c); };
  auto st = [&](const Vector& a, const Vector& b) { return A.star(a, b); };

  // Four-index identities.
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Vector s = br(e[z], A.sub_binary(e[x], e[y]), e[w]) - br(st(e[y], e[z]), e[x], e[w]) +
                       br(st(e[x], e[z]), e[y], e[w]);
            if (record(r, "brace_middle_bracket", {x, y, z, w}, s)) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Vector s = br(e[x], e[y], A.sub_binary(e[z], e[w])) - st(e[z], br(e[x], e[y], e[w])) +
                       st(e[w], br(e[x], e[y], e[z]));
            if (record(r, "brace_last_bracket", {x, y, z, w}, s)) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Vector s = st(A.sub_ternary(e[x], e[y], e[z]), e[w]) - bD(e[x], e[y], st(e[z], e[w])) +
                       st(e[z], bD(e[x], e[y], e[w]));
            if (record(r, "ternary_star", {x, y, z, w}, s)) return;
          }
  }();

  // Five-index identities.
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t t = 0; t < n; ++t) {
              Vector lhs = br(e[x], e[y], A.sub_ternary(e[z], e[w], e[t]));
              Vector rhs = opt.verbatim ? br(br(e[x], e[w], e[z]), e[w], e[t]) - br(br(e[x], e[y], e[w]), e[z], e[t]) +
                                              br(e[z], e[w], bD(e[x], e[y], e[t]))
                                        : br(br(e[x], e[y], e[z]), e[w], e[t]) - br(br(e[x], e[y], e[w]), e[z], e[t]) +
                                              bD(e[z], e[w], br(e[x], e[y], e[t]));
              if (record(r, "brace_ternary", {x, y, z, w, t}, lhs - rhs)) return;
            }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t t = 0; t < n; ++t) {
              Vector lhs = opt.verbatim ? br(e[x], e[y], bD(e[z], e[w], e[t])) : bD(e[x], e[y], br(e[z], e[w], e[t]));
              Vector rhs = br(bD(e[x], e[y], e[z]), e[w], e[t]) + br(e[z], A.sub_ternary(e[x], e[y], e[w]), e[t]) +
                           br(e[z], e[w], A.sub_ternary(e[x], e[y], e[t]));
              if (record(r, "brace_D_derivation", {x, y, z, w, t}, lhs - rhs)) return;
            }
  }();

  // Vanishing conditions.
  auto vanish = [&](const char* eq, auto&& f, std::size_t arity) {
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      if (record(r, eq, idx, f(idx))) return;
      std::size_t a = arity;
      while (a > 0 && ++idx[a - 1] == n) idx[--a] = 0;
      if (a == 0) return;
    }
  };
  if (n == 0) return r;
  vanish("star_dot", [&](const auto& i) { return A.dot(st(e[i[0]], e[i[1]]), e[i[2]]); }, 3);
  vanish("star_angle_left", [&](const auto& i) { return A.angle(st(e[i[0]], e[i[1]]), e[i[2]], e[i[3]]); }, 4);
  vanish("star_angle_right", [&](const auto& i) { return A.angle(e[i[2]], e[i[3]], st(e[i[0]], e[i[1]])); }, 4);
  vanish("star_kills_dot", [&](const auto& i) { return st(e[i[0]], A.dot(e[i[1]], e[i[2]])); }, 3);
  vanish("brace_kills_dot", [&](const auto& i) { return br(A.dot(e[i[0]], e[i[1]]), e[i[2]], e[i[3]]); }, 4);
  vanish("star_kills_angle", [&](const auto& i) { return st(e[i[0]], A.angle(e[i[1]], e[i[2]], e[i[3]])); }, 4);
  vanish("brace_kills_angle",
         [&](const auto& i) { return br(A.angle(e[i[0]], e[i[1]], e[i[2]]), e[i[3]], e[i[4]]); }, 5);
  return r;
}

inline void require_post_axioms(const PostLYAlgebra& A) {
  if (!check_post_axioms(A, {false, 1}).passed())
    throw error("AxiomsFailed", "post-Lie-Yamaguti axioms fail for " + A.name());
}

inline LYAlgebra subadjacent(const PostLYAlgebra& A) {
  require_post_axioms(A);
  LYAlgebra s = A.subadjacent_unchecked();
  s.set_verified(check_ly_axioms(s, 1).passed());
  return s;
}

// L(x)z = x*z and R(x,y)z = {z,x,y}, acting on (A, dot, angle).
inline RepAction induced_action(const PostLYAlgebra& A) {
  LYAlgebra acting = subadjacent(A);
  const std::size_t n = A.dim();
  std::vector<Matrix> L(n, Matrix(n, n)), R(n * n, Matrix(n, n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      for (const auto& [k, v] : A.star_tensor().entries({x, z})) L[x](k, z) = v;
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& [k, v] : A.brace_tensor().entries({z, x, y})) R[x * n + y](k, z) = v;
    }
  RepAction r(std::move(acting), A.underlying(), std::move(L), std::move(R));
  check_action(r, 1);
  return r;
}

inline Report identity_is_rrb(const PostLYAlgebra& A) {
  require_post_axioms(A);
  RRBOperator op{induced_action(A), Matrix::identity(A.dim()), false};
  return check_rrb(op);
}

// h with uv = [u,v]_h, u*v = rho(Tu)v, {u,v,w} = mu(Tv,Tw)u, <u,v,w> = <u,v,w>_h.
inline PostLYAlgebra induced_post_from_rrb(const RRBOperator& op) {
  if (!op.verified) throw error("Unverified", "induced post-algebra needs a verified operator");
  const std::size_t m = op.h_dim();
  const LYAlgebra& h = op.h();
  bilinear dot = square_bilinear(m), star = square_bilinear(m);
  trilinear angle = square_trilinear(m), brace = square_trilinear(m);
  std::vector<Vector> Te;
  for (std::size_t u = 0; u < m; ++u) Te.push_back(op.T.column(u));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      for (const auto& [k, c] : h.binary().entries({u, v})) dot.set({u, v}, k, c);
      Matrix rho = op.action.rho(Te[u]);
      for (std::size_t k = 0; k < m; ++k) star.set({u, v}, k, rho(k, v));
      for (std::size_t w = 0; w < m; ++w) {
        for (const auto& [l, c] : h.ternary().entries({u, v, w})) angle.set({u, v, w}, l, c);
        Matrix mu = op.action.mu(Te[v], Te[w]);
        for (std::size_t l = 0; l < m; ++l) brace.set({u, v, w}, l, mu(l, u));
      }
    }
  return PostLYAlgebra(std::move(dot), std::move(star), std::move(angle), std::move(brace),
                       "post(" + h.name() + ")");
}

inline Report check_post_homomorphism(const PostLYAlgebra& A, const PostLYAlgebra& B, const Matrix& psi,
                                      std::size_t limit = Report::default_limit) {
  require(psi.rows() == B.dim() && psi.cols() == A.dim(), "DimMismatch", "post homomorphism matrix shape");
  Report r("post homomorphism", limit);
  const std::size_t n = A.dim();
  std::vector<Vector> e, img;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(unit(n, i));
    img.push_back(psi.column(i));
  }
  for (auto eq : {"preserves_dot", "preserves_star", "preserves_angle", "preserves_brace"}) r.mark(eq);
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (record(r, "preserves_dot", {x, y}, psi * A.dot(e[x], e[y]) - B.dot(img[x], img[y]))) return;
      }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (record(r, "preserves_star", {x, y}, psi * A.star(e[x], e[y]) - B.star(img[x], img[y]))) return;
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (record(r, "preserves_angle", {x, y, z},
                     psi * A.angle(e[x], e[y], e[z]) - B.angle(img[x], img[y], img[z])))
            return;
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (record(r, "preserves_brace", {x, y, z},
                     psi * A.brace(e[x], e[y], e[z]) - B.brace(img[x], img[y], img[z])))
            return;
  }();
  // Follows automatically when the four operations are preserved.
  r.merge(check_homomorphism(A.subadjacent_unchecked(), B.subadjacent_unchecked(), psi, limit), "subadjacent.");
  return r;
}

}  // namespace lya
