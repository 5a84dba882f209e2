#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace lya {

// Finite-dimensional Lie-Yamaguti algebra: an antisymmetric bracket and a
// ternary bracket antisymmetric in its first two slots. Setters keep both
// antisymmetries by writing the mirrored entry too.
class LYAlgebra {
 public:
  LYAlgebra() = default;
  explicit LYAlgebra(std::size_t dim, std::string name = {}, std::vector<std::string> basis = {})
      : name_(std::move(name)), basis_(std::move(basis)), c_(square_bilinear(dim)), d_(square_trilinear(dim)) {
    if (basis_.empty())
      for (std::size_t i = 0; i < dim; ++i) basis_.push_back("e" + std::to_string(i + 1));
    require(basis_.size() == dim, "DimMismatch", "basis label count differs from dim");
  }

  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  bool verified() const { return verified_; }
  void set_verified(bool v) { verified_ = v; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_.at({i, j}, k); }
  const Rational& d(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return d_.at({i, j, k}, l);
  }
  const bilinear& binary() const { return c_; }
  const trilinear& ternary() const { return d_; }

  // [e_i, e_j] gets `v` along e_k; [e_j, e_i] gets -v.
  void set_binary(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (i == j) {
      require(v.is_zero(), "ShapeMismatch", "nonzero [e_i, e_i] entry");
      return;
    }
    c_.set({i, j}, k, v);
    c_.set({j, i}, k, -v);
    verified_ = false;
  }
  void set_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Rational& v) {
    if (i == j) {
      require(v.is_zero(), "ShapeMismatch", "nonzero <e_i, e_i, e_k> entry");
      return;
    }
    d_.set({i, j, k}, l, v);
    d_.set({j, i, k}, l, -v);
    verified_ = false;
  }

  Vector bracket2(const Vector& x, const Vector& y) const {
    require(x.size() == dim() && y.size() == dim(), "DimMismatch", "bracket2 argument length");
    return c_({&x, &y});
  }
  Vector bracket3(const Vector& x, const Vector& y, const Vector& z) const {
    require(x.size() == dim() && y.size() == dim() && z.size() == dim(), "DimMismatch",
            "bracket3 argument length");
    return d_({&x, &y, &z});
  }
  Vector bracket2(std::size_t i, std::size_t j) const { return c_.basis_value({i, j}); }
  Vector bracket3(std::size_t i, std::size_t j, std::size_t k) const { return d_.basis_value({i, j, k}); }

  bool is_abelian() const { return c_.is_zero() && d_.is_zero(); }

  // Builds from dense tensors after validating both antisymmetries.
  static LYAlgebra from_tensors(const bilinear& c, const trilinear& d, std::string name = {}) {
    std::size_t n = c.out_dim();
    LYAlgebra a(n, std::move(name));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          require(c.at({i, j}, k) == -c.at({j, i}, k), "ShapeMismatch", "binary tensor not antisymmetric");
          if (i < j) a.set_binary(i, j, k, c.at({i, j}, k));
        }
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            require(d.at({i, j, k}, l) == -d.at({j, i, k}, l), "ShapeMismatch",
                    "ternary tensor not antisymmetric in its first two slots");
            if (i < j) a.set_ternary(i, j, k, l, d.at({i, j, k}, l));
          }
      }
    return a;
  }

  friend bool same_structure(const LYAlgebra& a, const LYAlgebra& b) {
    return a.c_ == b.c_ && a.d_ == b.d_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  bilinear c_;
  trilinear d_;
  bool verified_ = false;
};

inline LYAlgebra abelian(std::size_t n) { return LYAlgebra(n, "abelian" + std::to_string(n)); }

// Stop-or-continue helper shared by all checkers: records a violation when
// the residual is nonzero and tells the caller whether to stop this equation.
inline bool record(Report& r, const std::string& eq, std::vector<std::size_t> witness, const Vector& residual) {
  if (is_zero(residual)) return false;
  return r.fail(eq, std::move(witness), residual);
}

inline Report check_ly_axioms(const LYAlgebra& a, std::size_t limit = Report::default_limit) {
  Report r("algebra " + a.name(), limit);
  const std::size_t n = a.dim();
  auto e = [n](std::size_t i) { return unit(n, i); };
  auto b2 = [&](const Vector& x, const Vector& y) { return a.bracket2(x, y); };
  auto b3 = [&](const Vector& x, const Vector& y, const Vector& z) { return a.bracket3(x, y, z); };

  for (auto eq : {"mixed_jacobi", "cyclic_ternary", "ternary_derives_binary", "fundamental_identity"})
    r.mark(eq);

  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vector s = b2(a.bracket2(x, y), e(z)) + b2(a.bracket2(y, z), e(x)) + b2(a.bracket2(z, x), e(y)) +
                     a.bracket3(x, y, z) + a.bracket3(y, z, x) + a.bracket3(z, x, y);
          if (record(r, "mixed_jacobi", {x, y, z}, s)) return;
        }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Vector s = b3(a.bracket2(x, y), e(z), e(w)) + b3(a.bracket2(y, z), e(x), e(w)) +
                       b3(a.bracket2(z, x), e(y), e(w));
            if (record(r, "cyclic_ternary", {x, y, z, w}, s)) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w) {
            Vector lhs = b3(e(x), e(y), a.bracket2(z, w));
            Vector rhs = b2(a.bracket3(x, y, z), e(w)) + b2(e(z), a.bracket3(x, y, w));
            if (record(r, "ternary_derives_binary", {x, y, z, w}, lhs - rhs)) return;
          }
  }();
  [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t t = 0; t < n; ++t) {
              Vector lhs = b3(e(x), e(y), a.bracket3(z, w, t));
              Vector rhs = b3(a.bracket3(x, y, z), e(w), e(t)) + b3(e(z), a.bracket3(x, y, w), e(t)) +
                           b3(e(z), e(w), a.bracket3(x, y, t));
              if (record(r, "fundamental_identity", {x, y, z, w, t}, lhs - rhs)) return;
            }
      }
  }();
  return r;
}

// Marks the algebra verified when the axioms hold.
inline Report verify(LYAlgebra& a, std::size_t limit = Report::default_limit) {
  Report r = check_ly_axioms(a, limit);
  a.set_verified(r.passed());
  return r;
}

// Lie algebra -> Lie-Yamaguti algebra with <x,y,z> = [[x,y],z].
inline LYAlgebra from_lie_algebra(const bilinear& c, std::string name = {}) {
  std::size_t n = c.out_dim();
  LYAlgebra a(n, std::move(name));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        require(c.at({i, j}, k) == -c.at({j, i}, k), "NotLieAlgebra", "bracket is not antisymmetric");
        if (i < j) a.set_binary(i, j, k, c.at({i, j}, k));
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector s = a.bracket2(a.bracket2(x, y), unit(n, z)) + a.bracket2(a.bracket2(y, z), unit(n, x)) +
                   a.bracket2(a.bracket2(z, x), unit(n, y));
        if (!is_zero(s))
          throw error("NotLieAlgebra", "Jacobi identity fails at (" + std::to_string(x) + "," +
                                           std::to_string(y) + "," + std::to_string(z) + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = a.bracket2(a.bracket2(i, j), unit(n, k));
        for (std::size_t l = 0; l < n; ++l) a.set_ternary(i, j, k, l, v[l]);
      }
  a.set_verified(check_ly_axioms(a, 1).passed());
  return a;
}

inline LYAlgebra direct_sum(const LYAlgebra& a, const LYAlgebra& b) {
  std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> names = a.basis_names();
  for (const auto& s : b.basis_names()) names.push_back(s);
  LYAlgebra s(na + nb, a.name() + "+" + b.name(), names);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      for (const auto& [k, v] : a.binary().entries({i, j})) s.set_binary(i, j, k, v);
      for (std::size_t k = 0; k < na; ++k)
        for (const auto& [l, v] : a.ternary().entries({i, j, k})) s.set_ternary(i, j, k, l, v);
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      for (const auto& [k, v] : b.binary().entries({i, j})) s.set_binary(na + i, na + j, na + k, v);
      for (std::size_t k = 0; k < nb; ++k)
        for (const auto& [l, v] : b.ternary().entries({i, j, k})) s.set_ternary(na + i, na + j, na + k, na + l, v);
    }
  s.set_verified(a.verified() && b.verified());
  return s;
}

// Elements annihilated by every bracket slot: [x,-], <x,-,->, <-,-,x>.
inline Subspace center(const LYAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vector r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = a.c(i, j, k);
      rows.push_back(std::move(r));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        Vector r1(n), r2(n);
        for (std::size_t i = 0; i < n; ++i) {
          r1[i] = a.d(i, j, k, l);
          r2[i] = a.d(j, k, i, l);
        }
        rows.push_back(std::move(r1));
        rows.push_back(std::move(r2));
      }
  if (rows.empty()) return Subspace::full(n);
  return nullspace(Matrix::from_rows(rows, n));
}

inline Subspace binary_span(const LYAlgebra& a) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) v.push_back(a.bracket2(i, j));
  return Subspace::span(a.dim(), std::move(v));
}

inline Subspace ternary_span(const LYAlgebra& a) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) v.push_back(a.bracket3(i, j, k));
  return Subspace::span(a.dim(), std::move(v));
}

inline Subspace derived_algebra(const LYAlgebra& a) { return intersect(binary_span(a), ternary_span(a)); }

// phi is dim(B) x dim(A).
inline Report check_homomorphism(const LYAlgebra& A, const LYAlgebra& B, const Matrix& phi,
                                 std::size_t limit = Report::default_limit) {
  require(phi.rows() == B.dim() && phi.cols() == A.dim(), "DimMismatch", "homomorphism matrix shape");
  Report r("homomorphism " + A.name() + " -> " + B.name(), limit);
  r.mark("preserves_binary");
  r.mark("preserves_ternary");
  std::size_t n = A.dim();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(phi.column(i));
  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (record(r, "preserves_binary", {i, j}, phi * A.bracket2(i, j) - B.bracket2(img[i], img[j]))) return;
  }();
  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (record(r, "preserves_ternary", {i, j, k},
                     phi * A.bracket3(i, j, k) - B.bracket3(img[i], img[j], img[k])))
            return;
  }();
  return r;
}

}  // namespace lya
