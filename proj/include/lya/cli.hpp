#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"

namespace lya::cli {

using io::json;

struct options {
  bool as_json = false;
  std::string format = "pretty";
  std::uint64_t seed = 0;
  bool all_violations = false;
  std::size_t limit() const { return all_violations ? Report::unlimited : Report::default_limit; }
  bool json_out() const { return as_json || format == "json"; }
};

// Rationals drawn from a small fixed pool; enough to hit generic points.
inline Vector random_vector(std::mt19937_64& gen, std::size_t n) {
  static const Rational pool[] = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  std::uniform_int_distribution<int> pick(0, 5);
  Vector v(n);
  for (auto& x : v) x = pool[pick(gen)];
  return v;
}

inline json report_json(const Report& r, const json& data) {
  json j;
  j["subject"] = r.subject();
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["violation_count"] = r.total();
  json vs = json::array();
  for (const auto& v : r.violations()) {
    json x;
    x["equation"] = v.equation;
    x["witness"] = v.witness;
    x["residual"] = io::vector_to(v.residual);
    vs.push_back(std::move(x));
  }
  j["violations"] = std::move(vs);
  json eqs = json::array();
  for (const auto& [name, ok] : r.equations()) {
    json e;
    e["id"] = name;
    e["passed"] = ok;
    eqs.push_back(std::move(e));
  }
  j["equations"] = std::move(eqs);
  j["notes"] = r.notes();
  j["data"] = data;
  return j;
}

inline void print_pretty(std::ostream& out, const Report& r, const json& data) {
  out << r.subject() << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& [name, ok] : r.equations()) out << "  " << (ok ? "ok   " : "FAIL ") << name << '\n';
  for (const auto& v : r.violations()) {
    out << "  violation " << v.equation << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << ") residual " << io::vector_to(v.residual).dump() << '\n';
  }
  if (r.total() > r.violations().size())
    out << "  (" << r.total() - r.violations().size() << " more violations not shown)\n";
  for (const auto& n : r.notes()) out << "  note: " << n << '\n';
  if (data.is_object())
    for (const auto& [k, v] : data.items()) out << "  " << k << ": " << v.dump() << '\n';
}

inline int emit(std::ostream& out, const options& o, const Report& r, const json& data = json::object()) {
  if (o.json_out())
    out << report_json(r, data).dump(2) << '\n';
  else
    print_pretty(out, r, data);
  return r.passed() ? 0 : 1;
}

// Random-vector evaluation of the algebra axioms that only need brackets.
inline json spot_check_algebra(const LYAlgebra& a, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t n = a.dim(), samples = 4;
  bool zero = true;
  for (std::size_t s = 0; s < samples && n > 0; ++s) {
    Vector x = random_vector(gen, n), y = random_vector(gen, n), z = random_vector(gen, n),
           w = random_vector(gen, n);
    Vector mj = a.bracket2(a.bracket2(x, y), z) + a.bracket2(a.bracket2(y, z), x) + a.bracket2(a.bracket2(z, x), y) +
                a.bracket3(x, y, z) + a.bracket3(y, z, x) + a.bracket3(z, x, y);
    Vector td = a.bracket3(x, y, a.bracket2(z, w)) - a.bracket2(a.bracket3(x, y, z), w) -
                a.bracket2(z, a.bracket3(x, y, w));
    zero = zero && is_zero(mj) && is_zero(td);
  }
  json j;
  j["seed"] = seed;
  j["samples"] = samples;
  j["residuals_zero"] = zero;
  return j;
}

inline json spot_check_rrb(const RRBOperator& op, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t m = op.h_dim(), samples = 4;
  bool zero = true;
  for (std::size_t s = 0; s < samples && m > 0; ++s) {
    Vector u = random_vector(gen, m), v = random_vector(gen, m), w = random_vector(gen, m);
    Vector b = op.g().bracket2(op.T * u, op.T * v) - op.T * rrb_binary_inner(op, u, v);
    Vector t = op.g().bracket3(op.T * u, op.T * v, op.T * w) - op.T * rrb_ternary_inner(op, u, v, w);
    zero = zero && is_zero(b) && is_zero(t);
  }
  json j;
  j["seed"] = seed;
  j["samples"] = samples;
  j["residuals_zero"] = zero;
  return j;
}

inline json subspace_json(const Subspace& s) {
  json a = json::array();
  for (const auto& b : s.basis()) a.push_back(io::vector_to(b));
  return a;
}

// Loads an operator and certifies its action and the operator itself.
inline Report certify_operator(RRBOperator& op, std::size_t limit) {
  Report r("relative Rota-Baxter operator", limit);
  r.merge(check_action(op.action, limit), "action.");
  r.merge(check_rrb(op, limit));
  return r;
}

inline json obstruction_json(const Cochain& c) {
  const auto& L = c.layout;
  const pair_basis pb(L.m);
  json bin = json::array(), ter = json::array();
  for (std::size_t p = 0; p < pb.size(); ++p) {
    auto [u, v] = pb[p];
    for (std::size_t o = 0; o < L.n; ++o) {
      const Rational& x = c.coords[L.f_index(p, o)];
      if (!x.is_zero()) bin.push_back(json::array({u, v, o, io::rational_to(x)}));
    }
    for (std::size_t w = 0; w < L.m; ++w)
      for (std::size_t o = 0; o < L.n; ++o) {
        const Rational& x = c.coords[L.g_index(p, w, o)];
        if (!x.is_zero()) ter.push_back(json::array({u, v, w, o, io::rational_to(x)}));
      }
  }
  json j;
  j["binary"] = std::move(bin);
  j["ternary"] = std::move(ter);
  return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Lie-Yamaguti algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  options o;
  app.add_flag("--json", o.as_json, "machine-readable output");
  app.add_option("--format", o.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized spot checks");
  app.add_flag("--all-violations", o.all_violations, "do not cap the witness list");

  std::string file, output, t1, t2, xfile;
  std::vector<std::string> terms;
  std::size_t degree = 1;
  bool verbatim = false, witness = false, do_extend = false;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "verify a structure")->require_subcommand(1);
  auto* construct = app.add_subcommand("construct", "derive a structure")->require_subcommand(1);
  auto* cohom = app.add_subcommand("cohomology", "dimensions of the cohomology of an operator");
  auto* deform = app.add_subcommand("deform", "deformations of an operator")->require_subcommand(1);

  auto input = [&](CLI::App* s, const char* flags) { s->add_option(flags, file, "input file")->required(); };

  input(check->add_subcommand("algebra", "Lie-Yamaguti axioms"), "file,--in");
  check->get_subcommand("algebra")->callback([&] {
    action = [&] {
      LYAlgebra a = io::load_algebra(file);
      Report r = verify(a, o.limit());
      json d;
      d["dim"] = a.dim();
      d["center"] = subspace_json(center(a));
      d["spot_check"] = spot_check_algebra(a, o.seed);
      return emit(out, o, r, d);
    };
  });
  input(check->add_subcommand("rep", "representation axioms"), "file,--in");
  check->get_subcommand("rep")->callback([&] {
    action = [&] {
      RepAction rep = io::load_rep(file);
      Report r = check_representation(rep, o.limit());
      r.merge(check_lemma_identities(rep, o.limit()), "lemma.");
      return emit(out, o, r);
    };
  });
  input(check->add_subcommand("action", "action on a Lie-Yamaguti algebra"), "file,--in");
  check->get_subcommand("action")->callback([&] {
    action = [&] {
      RepAction rep = io::load_rep(file);
      Report r("action", o.limit());
      r.merge(check_representation(rep, o.limit()));
      r.merge(check_action_report(rep, o.limit()));
      return emit(out, o, r);
    };
  });
  input(check->add_subcommand("rrb", "relative Rota-Baxter operator"), "file,--op");
  check->get_subcommand("rrb")->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      json d;
      if (op.action.action_certified()) {
        LYAlgebra sd = semidirect_product(op.action);
        d["graph_subalgebra"] = graph_subalgebra_check(op, sd, 1).passed();
        d["nijenhuis_lift"] = check_nijenhuis(sd, lift_operator(op), 1).passed();
      }
      d["spot_check"] = spot_check_rrb(op, o.seed);
      return emit(out, o, r, d);
    };
  });
  auto* cpost = check->add_subcommand("post", "post-Lie-Yamaguti axioms");
  input(cpost, "file,--in");
  cpost->add_flag("--verbatim", verbatim, "use the axioms exactly as printed");
  cpost->callback([&] {
    action = [&] {
      PostLYAlgebra A = io::load_post(file);
      return emit(out, o, check_post_axioms(A, {verbatim, o.limit()}));
    };
  });
  input(check->add_subcommand("homomorphism", "homomorphism of algebras, post-algebras or operators"), "file,--in");
  check->get_subcommand("homomorphism")->callback([&] {
    action = [&] {
      io::Homomorphism h = io::load(file, io::homomorphism_from);
      if (h.kind == "algebra") return emit(out, o, check_homomorphism(h.algebras[0], h.algebras[1], h.map, o.limit()));
      if (h.kind == "post") return emit(out, o, check_post_homomorphism(h.posts[0], h.posts[1], h.map, o.limit()));
      return emit(out, o, check_rrb_homomorphism(h.ops[0], h.ops[1], h.pair, o.limit()));
    };
  });
  input(check->add_subcommand("nijenhuis", "Nijenhuis operator"), "file,--in");
  check->get_subcommand("nijenhuis")->callback([&] {
    action = [&] {
      io::NijenhuisPair p = io::load(file, io::nijenhuis_from);
      return emit(out, o, check_nijenhuis(p.algebra, p.N, o.limit()));
    };
  });

  // construct: run the precondition check, then write the result.
  auto finish = [&](const Report& r, const json& result) {
    json d;
    if (r.passed()) {
      if (output.empty()) {
        d["result"] = result;
      } else {
        io::write_json(output, result);
        d["output"] = output;
      }
    }
    return emit(out, o, r, d);
  };
  auto csub = [&](const char* name, const char* help, const char* flags) {
    auto* s = construct->add_subcommand(name, help);
    input(s, flags);
    s->add_option("-o,--output", output, "output file");
    return s;
  };
  csub("semidirect", "semidirect product of an action", "file,--rep")->callback([&] {
    action = [&] {
      RepAction rep = io::load_rep(file);
      Report r("action", o.limit());
      r.merge(check_representation(rep, o.limit()));
      r.merge(check_action(rep, o.limit()));
      return finish(r, r.passed() ? io::algebra_to(semidirect_product(rep)) : json());
    };
  });
  csub("descent", "descent algebra of an operator", "file,--op")->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      return finish(r, r.passed() ? io::algebra_to(descent_algebra(op)) : json());
    };
  });
  csub("subadjacent", "sub-adjacent algebra of a post-algebra", "file,--in")->callback([&] {
    action = [&] {
      PostLYAlgebra A = io::load_post(file);
      Report r = check_post_axioms(A, {false, o.limit()});
      return finish(r, r.passed() ? io::algebra_to(subadjacent(A)) : json());
    };
  });
  csub("post", "post-algebra induced by an operator", "file,--op")->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      return finish(r, r.passed() ? io::post_to(induced_post_from_rrb(op)) : json());
    };
  });
  csub("lift", "Nijenhuis lift on the semidirect product", "file,--op")->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      if (!r.passed()) return finish(r, json());
      return finish(r, io::nijenhuis_to({semidirect_product(op.action), lift_operator(op)}));
    };
  });

  cohom->add_option("--op,file", file, "operator file")->required();
  cohom->add_option("--degree", degree, "cochain degree")->check(CLI::Range(1, 3));
  cohom->add_flag("--witness", witness, "list cocycle representatives of a basis of H");
  cohom->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      json d;
      if (r.passed()) {
        TComplex cx(op);
        CohomologyDims c = cohomology_dims(cx, degree);
        d["degree"] = degree;
        d["dim_Z"] = c.Z;
        d["dim_B"] = c.B;
        d["dim_H"] = c.H;
        if (witness) {
          json w = json::array();
          for (const auto& v : cohomology_representatives(cx, degree)) w.push_back(io::vector_to(v));
          d["representatives"] = std::move(w);
        }
      }
      return emit(out, o, r, d);
    };
  });

  auto load_term = [](const std::string& path, const RRBOperator& op) {
    return io::term_from(io::read_json(path), op.g_dim(), op.h_dim(), io::context{path, {}});
  };
  auto* dlin = deform->add_subcommand("linear", "linear deformation T + tF");
  dlin->add_option("--op", file, "operator file")->required();
  dlin->add_option("--t1", t1, "deformation term")->required();
  dlin->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      if (!r.passed()) return emit(out, o, r);
      return emit(out, o, check_linear_deformation(op, load_term(t1, op), o.limit()));
    };
  });
  auto* deq = deform->add_subcommand("equiv", "equivalence of two linear deformations");
  deq->add_option("--op", file, "operator file")->required();
  deq->add_option("--t1", t1, "first deformation term")->required();
  deq->add_option("--t2", t2, "second deformation term")->required();
  deq->add_option("--x", xfile, "element of wedge^2 g on the pair basis (found by solving when omitted)");
  deq->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      if (!r.passed()) return emit(out, o, r);
      Matrix F1 = load_term(t1, op), F2 = load_term(t2, op);
      json d;
      Vector X;
      if (!xfile.empty()) {
        X = io::vector_from(io::read_json(xfile), pair_basis(op.g_dim()).size(), io::context{xfile, {}});
      } else {
        DifferenceResult diff = difference_class(op, F1, F2);
        d["cohomologous"] = diff.cohomologous;
        if (!diff.cohomologous) {
          d["certificate"] = io::vector_to(diff.certificate);
          Report no("equivalence of linear deformations", o.limit());
          no.fail("difference_is_coboundary", {}, {});
          return emit(out, o, no, d);
        }
        X = diff.X;
      }
      d["X"] = io::vector_to(X);
      return emit(out, o, check_equivalence(op, F1, F2, X, o.limit()), d);
    };
  });
  auto* dob = deform->add_subcommand("obstruct", "obstruction class of an order-n deformation");
  dob->add_option("--op", file, "operator file")->required();
  dob->add_option("--terms", terms, "deformation terms T_1 .. T_n")->required();
  dob->add_flag("--extend", do_extend, "solve for the next term");
  dob->callback([&] {
    action = [&] {
      RRBOperator op = io::load_operator(file);
      Report r = certify_operator(op, o.limit());
      if (!r.passed()) return emit(out, o, r);
      OrderNDeformation dfm{op, {}};
      for (const auto& t : terms) dfm.terms.push_back(load_term(t, op));
      Report ord = check_order_n(dfm, o.limit());
      if (!ord.passed()) return emit(out, o, ord);
      TComplex cx(op);
      Report res("obstruction class", o.limit());
      json d;
      d["order"] = dfm.order();
      ExtensionResult ext = extend(dfm, cx);
      d["obstruction"] = obstruction_json(ext.ob.cochain);
      d["cocycle"] = ext.ob.cocycle;
      res.mark("obstruction_cocycle", ext.ob.cocycle);
      if (!ext.ob.cocycle) res.fail("obstruction_cocycle", {}, {});
      d["extendable"] = ext.extendable();
      if (do_extend) {
        res.mark("extendable");
        if (ext.extendable()) {
          d["next"] = io::matrix_to(*ext.next);
        } else {
          d["certificate"] = io::vector_to(ext.certificate);
          res.fail("extendable", {}, {});
        }
      }
      return emit(out, o, res, d);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const error& e) {
    if (o.json_out()) {
      json j;
      j["verdict"] = "error";
      j["kind"] = e.kind();
      j["message"] = e.what();
      out << j.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lya::cli
