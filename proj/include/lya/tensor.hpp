#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace lya {

// Multilinear map F^{d_0} x ... x F^{d_{K-1}} -> F^{out}, stored densely and
// mirrored as per-input-tuple sparse output lists for fast evaluation.
template <std::size_t K>
class multilinear {
 public:
  using entry = std::pair<std::size_t, Rational>;

  multilinear() = default;
  multilinear(std::array<std::size_t, K> in, std::size_t out) : in_(in), out_(out) {
    std::size_t slots = 1;
    for (auto d : in_) slots *= d;
    dense_.assign(slots * out_, Rational());
    sparse_.assign(slots, {});
  }

  const std::array<std::size_t, K>& in_dims() const { return in_; }
  std::size_t out_dim() const { return out_; }
  std::size_t slots() const { return sparse_.size(); }

  std::size_t slot(const std::array<std::size_t, K>& idx) const {
    std::size_t s = 0;
    for (std::size_t a = 0; a < K; ++a) {
      require(idx[a] < in_[a], "DimMismatch", "tensor index out of range");
      s = s * in_[a] + idx[a];
    }
    return s;
  }

  const Rational& at(const std::array<std::size_t, K>& idx, std::size_t o) const {
    return dense_[slot(idx) * out_ + o];
  }

  void set(const std::array<std::size_t, K>& idx, std::size_t o, const Rational& v) {
    require(o < out_, "DimMismatch", "tensor output index out of range");
    std::size_t s = slot(idx);
    dense_[s * out_ + o] = v;
    auto& row = sparse_[s];
    auto it = std::lower_bound(row.begin(), row.end(), o,
                               [](const entry& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == o) {
      if (v.is_zero())
        row.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      row.insert(it, {o, v});
    }
  }

  void add(const std::array<std::size_t, K>& idx, std::size_t o, const Rational& v) {
    set(idx, o, at(idx, o) + v);
  }

  const std::vector<entry>& entries(const std::array<std::size_t, K>& idx) const {
    return sparse_[slot(idx)];
  }
  const std::vector<entry>& entries_at_slot(std::size_t s) const { return sparse_[s]; }

  Vector basis_value(const std::array<std::size_t, K>& idx) const {
    Vector v(out_);
    for (const auto& [o, c] : entries(idx)) v[o] = c;
    return v;
  }

  Vector operator()(const std::array<const Vector*, K>& args) const {
    for (std::size_t a = 0; a < K; ++a)
      require(args[a]->size() == in_[a], "DimMismatch", "argument length");
    Vector out(out_);
    std::array<std::size_t, K> idx{};
    eval_rec(args, 0, 0, Rational(1), idx, out);
    return out;
  }

  bool is_zero() const {
    return std::all_of(sparse_.begin(), sparse_.end(), [](const auto& r) { return r.empty(); });
  }

  friend bool operator==(const multilinear& a, const multilinear& b) {
    return a.in_ == b.in_ && a.out_ == b.out_ && a.dense_ == b.dense_;
  }

 private:
  void eval_rec(const std::array<const Vector*, K>& args, std::size_t a, std::size_t s,
                const Rational& coef, std::array<std::size_t, K>& idx, Vector& out) const {
    if (a == K) {
      for (const auto& [o, c] : sparse_[s]) out[o].add_product(coef, c);
      return;
    }
    const Vector& x = *args[a];
    for (std::size_t i = 0; i < in_[a]; ++i) {
      if (x[i].is_zero()) continue;
      idx[a] = i;
      eval_rec(args, a + 1, s * in_[a] + i, a == 0 ? x[i] : coef * x[i], idx, out);
    }
  }

  std::array<std::size_t, K> in_{};
  std::size_t out_ = 0;
  std::vector<Rational> dense_;
  std::vector<std::vector<entry>> sparse_;
};

using bilinear = multilinear<2>;
using trilinear = multilinear<3>;

inline bilinear square_bilinear(std::size_t n) { return bilinear({n, n}, n); }
inline trilinear square_trilinear(std::size_t n) { return trilinear({n, n, n}, n); }

// Sum over a list of (coefficient, basis index) pairs, the usual shape of a
// sparse vector produced by a bracket.
inline std::vector<std::pair<std::size_t, Rational>> support(const Vector& v) {
  std::vector<std::pair<std::size_t, Rational>> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace lya
