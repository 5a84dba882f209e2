#pragma once

#include <random>
#include <string>

#include "lya/lya.hpp"

namespace fx {

inline std::string path(const std::string& name) { return std::string(LYA_FIXTURES) + "/" + name; }

inline lya::LYAlgebra algebra(const std::string& name) { return lya::io::load_algebra(path(name)); }
inline lya::RepAction rep(const std::string& name) { return lya::io::load_rep(path(name)); }

// Loaded operator with its action and the operator equations checked.
inline lya::RRBOperator op(const std::string& name) {
  lya::RRBOperator o = lya::io::load_operator(path(name));
  lya::check_action(o.action);
  lya::check_rrb(o);
  return o;
}

inline lya::Rational draw(std::mt19937_64& gen) {
  static const lya::Rational pool[] = {lya::Rational(-2), lya::Rational(-1), lya::Rational(0),
                                       lya::Rational(1),  lya::Rational(2),  lya::Rational(1, 2)};
  std::uniform_int_distribution<int> pick(0, 5);
  return pool[pick(gen)];
}

inline lya::Matrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c) {
  lya::Matrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = draw(gen);
  return M;
}

inline lya::Vector random_vector(std::mt19937_64& gen, std::size_t n) {
  lya::Vector v(n);
  for (auto& x : v) x = draw(gen);
  return v;
}

// Maps on the paper's 4-dim algebra that kill e4 and whose image, read
// modulo span{e3, e4}, has rank at most one.
inline lya::Matrix random_rrb_candidate(std::mt19937_64& gen) {
  lya::Vector a = random_vector(gen, 2), b = random_vector(gen, 3);
  lya::Matrix T(4, 4);
  for (std::size_t j = 0; j < 3; ++j) {
    T(0, j) = a[0] * b[j];
    T(1, j) = a[1] * b[j];
    T(2, j) = draw(gen);
    T(3, j) = draw(gen);
  }
  return T;
}

// Random element of the 1-cocycles of the complex.
inline lya::Matrix random_cocycle(std::mt19937_64& gen, const lya::TComplex& cx) {
  lya::Subspace Z = lya::cocycles(cx, 1);
  lya::Vector v(Z.ambient_dim());
  for (const auto& b : Z.basis()) v = v + draw(gen) * b;
  return lya::from_cochain_coords(v, cx.n(), cx.m());
}

}  // namespace fx
