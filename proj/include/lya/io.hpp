#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "deformation.hpp"
#include "post.hpp"

namespace lya::io {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Malformed input; the message names the file and the field.
inline error bad_input(const std::string& where, const std::string& what) { return error("BadInput", where + ": " + what); }

inline json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw bad_input(p.string(), "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw bad_input(p.string(), std::string("not valid JSON (") + e.what() + ")");
  }
}

inline void write_json(const fs::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw bad_input(p.string(), "cannot write file");
  out << j.dump(2) << '\n';
}

// Where a JSON node came from, for diagnostics and relative file-refs.
struct context {
  fs::path file;
  std::string field;
  context at(const std::string& f) const { return {file, field.empty() ? f : field + "." + f}; }
  context at(std::size_t i) const { return {file, field + "[" + std::to_string(i) + "]"}; }
  std::string where() const { return file.string() + (field.empty() ? "" : " field " + field); }
};

inline const json& member(const json& j, const char* key, const context& cx) {
  if (!j.is_object() || !j.contains(key)) throw bad_input(cx.where(), std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline Rational rational_from(const json& j, const context& cx) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception&) {
  }
  throw bad_input(cx.where(), "expected a rational string \"p\" or \"p/q\"");
}

inline json rational_to(const Rational& q) { return q.to_string(); }

inline std::size_t index_from(const json& j, std::size_t bound, const context& cx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw bad_input(cx.where(), "expected a non-negative index");
  auto i = j.get<std::size_t>();
  if (i >= bound) throw bad_input(cx.where(), "index " + std::to_string(i) + " out of range");
  return i;
}

inline Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const context& cx) {
  if (!j.is_array() || j.size() != rows)
    throw bad_input(cx.where(), "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& r = j[i];
    if (!r.is_array() || r.size() != cols)
      throw bad_input(cx.at(i).where(), "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from(r[c], cx.at(i).at(c));
  }
  return m;
}

// Shape read off the file; used where the dimensions are not known upfront.
inline Matrix matrix_from(const json& j, const context& cx) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw bad_input(cx.where(), "expected a non-empty matrix");
  return matrix_from(j, j.size(), j[0].size(), cx);
}

inline json matrix_to(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(rational_to(m(i, c)));
    a.push_back(std::move(r));
  }
  return a;
}

inline Vector vector_from(const json& j, std::size_t n, const context& cx) {
  if (!j.is_array() || j.size() != n) throw bad_input(cx.where(), "expected " + std::to_string(n) + " entries");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from(j[i], cx.at(i));
  return v;
}

inline json vector_to(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to(q));
  return a;
}

// Sparse [i, j, ..., out, "value"] lists.
template <std::size_t K>
void sparse_into(multilinear<K>& t, const json& j, std::size_t n, const context& cx, bool antisym) {
  if (!j.is_array()) throw bad_input(cx.where(), "expected a list of entries");
  for (std::size_t e = 0; e < j.size(); ++e) {
    context ce = cx.at(e);
    const json& row = j[e];
    if (!row.is_array() || row.size() != K + 2)
      throw bad_input(ce.where(), "expected " + std::to_string(K + 2) + " items per entry");
    std::array<std::size_t, K> idx{};
    for (std::size_t s = 0; s < K; ++s) idx[s] = index_from(row[s], n, ce.at(s));
    std::size_t o = index_from(row[K], n, ce.at(K));
    Rational v = rational_from(row[K + 1], ce.at(K + 1));
    if (antisym) {
      if (idx[0] == idx[1]) {
        if (!v.is_zero()) throw bad_input(ce.where(), "nonzero entry on a repeated antisymmetric pair");
        continue;
      }
      auto sw = idx;
      std::swap(sw[0], sw[1]);
      t.set(sw, o, -v);
    }
    t.set(idx, o, v);
  }
}

template <std::size_t K>
json sparse_to(const multilinear<K>& t, bool antisym) {
  json a = json::array();
  const std::size_t n = t.out_dim();
  std::array<std::size_t, K> idx{};
  std::size_t total = 1;
  for (std::size_t s = 0; s < K; ++s) total *= t.in_dims()[s];
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (std::size_t s = K; s-- > 0;) {
      idx[s] = r % t.in_dims()[s];
      r /= t.in_dims()[s];
    }
    if (antisym && idx[0] >= idx[1]) continue;
    for (std::size_t o = 0; o < n; ++o) {
      const Rational& v = t.at(idx, o);
      if (v.is_zero()) continue;
      json row = json::array();
      for (auto i : idx) row.push_back(i);
      row.push_back(o);
      row.push_back(rational_to(v));
      a.push_back(std::move(row));
    }
  }
  return a;
}

inline std::size_t dim_from(const json& j, const context& cx) {
  const json& d = member(j, "dim", cx);
  if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long>() >= 0))
    throw bad_input(cx.at("dim").where(), "expected a non-negative integer");
  return d.get<std::size_t>();
}

inline LYAlgebra algebra_from(const json& j, const context& cx) {
  if (!j.is_object()) throw bad_input(cx.where(), "expected an algebra object");
  std::size_t n = dim_from(j, cx);
  std::string name = j.value("name", std::string{});
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != n) throw bad_input(cx.at("basis").where(), "expected dim labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) throw bad_input(cx.at("basis").at(i).where(), "expected a string label");
      basis.push_back(b[i].get<std::string>());
    }
  }
  bilinear c = square_bilinear(n);
  trilinear d = square_trilinear(n);
  if (j.contains("binary")) sparse_into(c, j.at("binary"), n, cx.at("binary"), true);
  if (j.contains("ternary")) sparse_into(d, j.at("ternary"), n, cx.at("ternary"), true);
  LYAlgebra a(n, name, basis);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (!c.at({i, k}, l).is_zero()) a.set_binary(i, k, l, c.at({i, k}, l));
        for (std::size_t z = 0; z < n; ++z)
          if (!d.at({i, k, z}, l).is_zero()) a.set_ternary(i, k, z, l, d.at({i, k, z}, l));
      }
  return a;
}

inline json algebra_to(const LYAlgebra& a) {
  json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  j["binary"] = sparse_to(a.binary(), true);
  j["ternary"] = sparse_to(a.ternary(), true);
  return j;
}

// A file-ref is either a path (relative to the referring file) or an inline object.
template <class F>
auto resolve(const json& j, const context& cx, F&& parse) {
  if (j.is_string()) {
    fs::path p = fs::path(j.get<std::string>());
    if (p.is_relative()) p = cx.file.parent_path() / p;
    return parse(read_json(p), context{p, {}});
  }
  return parse(j, cx);
}

inline LYAlgebra algebra_ref(const json& j, const context& cx) { return resolve(j, cx, algebra_from); }

inline RepAction rep_from(const json& j, const context& cx) {
  LYAlgebra g = algebra_ref(member(j, "acting", cx), cx.at("acting"));
  LYAlgebra h = algebra_ref(member(j, "carrier", cx), cx.at("carrier"));
  const std::size_t ng = g.dim(), nh = h.dim();
  const json& jr = member(j, "rho", cx);
  const json& jm = member(j, "mu", cx);
  if (!jr.is_array() || jr.size() != ng) throw bad_input(cx.at("rho").where(), "expected one matrix per acting basis vector");
  if (!jm.is_array() || jm.size() != ng) throw bad_input(cx.at("mu").where(), "expected dim(acting) rows of matrices");
  std::vector<Matrix> rho, mu;
  for (std::size_t i = 0; i < ng; ++i) rho.push_back(matrix_from(jr[i], nh, nh, cx.at("rho").at(i)));
  for (std::size_t i = 0; i < ng; ++i) {
    if (!jm[i].is_array() || jm[i].size() != ng)
      throw bad_input(cx.at("mu").at(i).where(), "expected dim(acting) matrices");
    for (std::size_t k = 0; k < ng; ++k) mu.push_back(matrix_from(jm[i][k], nh, nh, cx.at("mu").at(i).at(k)));
  }
  return RepAction(std::move(g), std::move(h), std::move(rho), std::move(mu));
}

inline json rep_to(const RepAction& r) {
  json j;
  j["acting"] = algebra_to(r.acting());
  j["carrier"] = algebra_to(r.carrier());
  json rho = json::array(), mu = json::array();
  for (const auto& m : r.rho_all()) rho.push_back(matrix_to(m));
  for (std::size_t i = 0; i < r.acting_dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < r.acting_dim(); ++k) row.push_back(matrix_to(r.mu(i, k)));
    mu.push_back(std::move(row));
  }
  j["rho"] = std::move(rho);
  j["mu"] = std::move(mu);
  return j;
}

inline RRBOperator operator_from(const json& j, const context& cx) {
  RepAction a = resolve(member(j, "action", cx), cx.at("action"), rep_from);
  Matrix T = matrix_from(member(j, "T", cx), a.acting_dim(), a.carrier_dim(), cx.at("T"));
  return RRBOperator{std::move(a), std::move(T), false};
}

inline json operator_to(const RRBOperator& op) {
  json j;
  j["action"] = rep_to(op.action);
  j["T"] = matrix_to(op.T);
  return j;
}

inline PostLYAlgebra post_from(const json& j, const context& cx) {
  std::size_t n = dim_from(j, cx);
  bilinear dot = square_bilinear(n), star = square_bilinear(n);
  trilinear angle = square_trilinear(n), brace = square_trilinear(n);
  sparse_into(dot, member(j, "dot", cx), n, cx.at("dot"), true);
  sparse_into(star, member(j, "star", cx), n, cx.at("star"), false);
  sparse_into(angle, member(j, "angle", cx), n, cx.at("angle"), true);
  sparse_into(brace, member(j, "brace", cx), n, cx.at("brace"), false);
  return PostLYAlgebra(std::move(dot), std::move(star), std::move(angle), std::move(brace),
                       j.value("name", std::string{}));
}

inline json post_to(const PostLYAlgebra& A) {
  json j;
  j["name"] = A.name();
  j["dim"] = A.dim();
  j["dot"] = sparse_to(A.dot_tensor(), true);
  j["star"] = sparse_to(A.star_tensor(), false);
  j["angle"] = sparse_to(A.angle_tensor(), true);
  j["brace"] = sparse_to(A.brace_tensor(), false);
  return j;
}

// {"algebra": ref, "N": matrix}
struct NijenhuisPair {
  LYAlgebra algebra;
  Matrix N;
};

inline NijenhuisPair nijenhuis_from(const json& j, const context& cx) {
  LYAlgebra a = algebra_ref(member(j, "algebra", cx), cx.at("algebra"));
  Matrix N = matrix_from(member(j, "N", cx), a.dim(), a.dim(), cx.at("N"));
  return {std::move(a), std::move(N)};
}

inline json nijenhuis_to(const NijenhuisPair& p) {
  json j;
  j["algebra"] = algebra_to(p.algebra);
  j["N"] = matrix_to(p.N);
  return j;
}

// Homomorphism files: {"kind": "algebra"|"post", "from", "to", "map"} or
// {"kind": "rrb", "from", "to", "psi_g", "psi_h"}.
struct Homomorphism {
  std::string kind;
  std::vector<LYAlgebra> algebras;   // kind algebra
  std::vector<PostLYAlgebra> posts;  // kind post
  std::vector<RRBOperator> ops;      // kind rrb
  Matrix map;
  HomPair pair;
};

inline Homomorphism homomorphism_from(const json& j, const context& cx) {
  Homomorphism h;
  const json& k = member(j, "kind", cx);
  if (!k.is_string()) throw bad_input(cx.at("kind").where(), "expected a string");
  h.kind = k.get<std::string>();
  const json& from = member(j, "from", cx);
  const json& to = member(j, "to", cx);
  if (h.kind == "algebra") {
    h.algebras.push_back(algebra_ref(from, cx.at("from")));
    h.algebras.push_back(algebra_ref(to, cx.at("to")));
    h.map = matrix_from(member(j, "map", cx), h.algebras[1].dim(), h.algebras[0].dim(), cx.at("map"));
  } else if (h.kind == "post") {
    h.posts.push_back(resolve(from, cx.at("from"), post_from));
    h.posts.push_back(resolve(to, cx.at("to"), post_from));
    h.map = matrix_from(member(j, "map", cx), h.posts[1].dim(), h.posts[0].dim(), cx.at("map"));
  } else if (h.kind == "rrb") {
    h.ops.push_back(resolve(from, cx.at("from"), operator_from));
    h.ops.push_back(resolve(to, cx.at("to"), operator_from));
    std::size_t ng = h.ops[0].g_dim(), nh = h.ops[0].h_dim();
    h.pair.psi_g = matrix_from(member(j, "psi_g", cx), ng, ng, cx.at("psi_g"));
    h.pair.psi_h = matrix_from(member(j, "psi_h", cx), nh, nh, cx.at("psi_h"));
  } else {
    throw bad_input(cx.at("kind").where(), "unknown kind \"" + h.kind + "\"");
  }
  return h;
}

// Matrix files for deformation terms: a bare matrix or {"matrix": ...}.
inline Matrix term_from(const json& j, std::size_t rows, std::size_t cols, const context& cx) {
  if (j.is_object()) return matrix_from(member(j, "matrix", cx), rows, cols, cx.at("matrix"));
  return matrix_from(j, rows, cols, cx);
}

template <class F>
auto load(const fs::path& p, F&& parse) {
  return parse(read_json(p), context{p, {}});
}

inline LYAlgebra load_algebra(const fs::path& p) { return load(p, algebra_from); }
inline RepAction load_rep(const fs::path& p) { return load(p, rep_from); }
inline RRBOperator load_operator(const fs::path& p) { return load(p, operator_from); }
inline PostLYAlgebra load_post(const fs::path& p) { return load(p, post_from); }

}  // namespace lya::io
