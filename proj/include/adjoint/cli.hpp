#pragma once

#include "adjoint/branching.hpp"
#include "adjoint/pdes.hpp"
#include "adjoint/quadrics.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <sstream>

namespace adjoint::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "adjoint-report/1";

struct Outcome {
  int exit_code = 0;
  std::string out, err;
};

struct Settings {
  std::string type, kind = "D", suite = "b3", format = "text", cache_dir;
  int degree = 1, n = 4, samples = 100, workers = 1;
  std::uint64_t seed = 42;
};

inline Json weight_json(const Weight& w) { return Json(w); }

inline std::string big(const BigInt& x) { return to_string(x); }

inline Json polynomial_json(const MinorPolynomial& p) {
  Json j;
  j["n"] = p.n;
  j["terms"] = p.poly.size();
  j["total_degree"] = p.poly.total_degree();
  if (p.pluecker_degree) j["pluecker_degree"] = *p.pluecker_degree;
  j["polynomial"] = p.to_text();
  return j;
}

inline Json cmd_grading(const Settings& s) {
  ContactGrading g(CartanType::parse(s.type));
  Json r;
  r["type"] = g.type().name();
  r["highest_root"] = weight_json(g.gamma_root());
  r["highest_root_weight"] = weight_json(g.gamma());
  std::vector<int> a;
  for (int x : g.a_nodes()) a.push_back(x + 1);
  r["grading_nodes"] = a;
  r["torus_rank"] = g.torus_rank();
  r["levi"] = g.levi_name();
  r["n"] = g.n();
  Json dims = Json::object();
  for (auto& [k, roots] : g.roots_by_degree()) dims[std::to_string(k)] = roots.size();
  r["root_counts_by_degree"] = dims;
  Json hw = Json::array();
  for (auto& w : g.g_minus1_highest_weights()) hw.push_back(weight_json(w));
  r["g_minus1_highest_weights"] = hw;
  if (g.type().family == Family::A) {
    auto [c1, c2] = type_A_torus_characters(g.n());
    r["torus_characters"] = {c1, c2};
  }
  if (g.type().family == Family::C) r["invariants"] = "none: the symplectic group acts transitively on the PDE bundle";
  else r["subadjoint_degree"] = big(subadjoint_degree(g.type()).value);
  return r;
}

inline RingDimensionOptions ring_options(const Settings& s) {
  RingDimensionOptions o;
  o.workers = s.workers;
  if (!s.cache_dir.empty()) o.cache_dir = s.cache_dir;
  return o;
}

// Dimension of R_d together with the method used.
inline std::pair<BigInt, std::string> invariant_count(const ContactGrading& g, int d, const Settings& s) {
  const bool bigraded = g.type().family == Family::A;
  if (d == 1 && !bigraded) return {count_invariant_pairs(g).trivial.at(g.n()), "kostant"};
  if (d == 2 && !bigraded && g.n() % 2 == 0) return {quadric_invariant_dimension(g), "quadric"};
  return {ring_dimension(g, d, ring_options(s)), "branching"};
}

inline Json cmd_table(const Settings& s) {
  Json rows = Json::array();
  for (auto name : {"A3", "A4", "B3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    ContactGrading g(CartanType::parse(name));
    int d = 1;
    std::pair<BigInt, std::string> c;
    for (;; ++d) {
      ensure(d <= 6, std::string("no invariant found up to degree 6 for ") + name);
      c = invariant_count(g, d, s);
      if (c.first > 0) break;
    }
    Json row;
    row["type"] = name;
    row["min_degree"] = d;
    row["count"] = big(c.first);
    row["method"] = c.second;
    row["subadjoint_degree"] = big(subadjoint_degree(g.type()).value);
    if (g.type() == CartanType{Family::B, 3}) row["note"] = "pinned regression fixture";
    if (g.type() == CartanType{Family::D, 4}) row["note"] = "confirms the conjectural single quadric";
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

inline Json cmd_quadric_dim(const Settings& s) {
  ContactGrading g(CartanType::parse(s.type));
  auto c = solve_quadric_system(g);
  Json r;
  r["type"] = g.type().name();
  r["n"] = g.n();
  r["dimension"] = big(c.d.at(g.n()));
  Json d = Json::object(), p = Json::object();
  for (auto& [i, v] : c.d) d[std::to_string(i)] = big(v);
  for (auto& [ij, v] : c.d_pair) p[std::to_string(ij.first) + "," + std::to_string(ij.second)] = big(v);
  r["d"] = d;
  r["d_pair"] = p;
  return r;
}

inline Json cmd_branch(const Settings& s) {
  ContactGrading g(CartanType::parse(s.type));
  auto b = build_branching_matrix(g);
  Json r;
  r["type"] = g.type().name();
  r["degree"] = s.degree;
  r["branching_matrix"] = b.matrix;
  r["dimension"] = big(ring_dimension(g, s.degree, ring_options(s)));
  return r;
}

inline Json cmd_wp(const Settings& s) {
  ContactGrading g(CartanType::parse(s.type));
  auto levels = generate_wp(g);
  Json r;
  r["type"] = g.type().name();
  size_t total = 0;
  std::vector<size_t> sizes;
  for (auto& l : levels) {
    sizes.push_back(l.size());
    total += l.size();
  }
  r["total"] = total;
  r["orbit_of_highest_root"] = big(g.root_system().orbit_size(g.gamma()));
  r["by_length"] = sizes;
  Json k = Json::array();
  for (int i = 1; i <= g.n(); ++i) {
    BigInt lhs = kostant_dimension(g, kostant_decomposition(g, i)), rhs = lagrangian_pluecker_dimension(g.n(), i);
    k.push_back({{"i", i}, {"sum", big(lhs)}, {"expected", big(rhs)}, {"holds", lhs == rhs}});
  }
  r["kostant"] = k;
  return r;
}

inline Json cmd_pde(const Settings& s) {
  Json r;
  r["kind"] = s.kind;
  if (s.kind == "A") {
    r["result"] = polynomial_json(pde_type_A(s.n));
  } else if (s.kind == "D") {
    r["result"] = polynomial_json(pde_type_D(s.n));
  } else if (s.kind == "D-invariant") {
    r["result"] = polynomial_json(pde_type_D_invariant(s.n));
  } else if (s.kind == "B3") {
    auto d = b3_data();
    Json q = Json::array();
    for (size_t i = 0; i < d.substituted.size(); ++i)
      q.push_back({{"name", "q" + std::to_string(i + 1)},
                   {"polynomial", d.substituted[i].to_text()},
                   {"matches_reference", d.substituted[i] == d.reference[i]}});
    Json gens = Json::array();
    for (auto& g : d.ideal_generators) gens.push_back(g.to_text());
    r["ideal_generators"] = gens;
    r["quadrics"] = q;
    r["result"] = polynomial_json(d.invariant);
  } else if (s.kind == "G2") {
    r["result"] = polynomial_json(chow_transform_g2());
  } else {
    throw PreconditionError("unknown PDE kind '" + s.kind + "' (A, D, D-invariant, B3, G2)");
  }
  return r;
}

inline Json cmd_chow(const Settings& s) {
  if (!s.type.empty())
    require(CartanType::parse(s.type) == CartanType{Family::G, 2}, "the Chow transform is implemented for G2 only");
  auto c = chow_transform_g2();
  auto reference = normalize(IntPolynomial::parse(g2_reference_cubic_text(), matrix_variables(2)));
  Json r;
  r["type"] = "G2";
  r["result"] = polynomial_json(c);
  r["matches_reference"] = c.poly == reference;
  r["stripped_branch_resultant"] = g2_stripped_branch_resultant().to_text();
  r["vanishes_on_planes_through_stripped_point"] = g2_cubic_on_stripped_point().is_zero_poly();
  return r;
}

inline std::vector<MatrixAction> default_actions(int n) {
  std::vector<MatrixAction> acts;
  Matrix<Rational> perm(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) perm[i][(i + 1) % n] = i % 2 ? -1 : 1;
  acts.push_back(MatrixAction::congruence("signed permutation", perm));
  Matrix<Rational> rot(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) rot[i][i] = 1;
  rot[0][0] = rot[1][1] = Rational(3, 5);
  rot[0][1] = Rational(4, 5);
  rot[1][0] = Rational(-4, 5);
  acts.push_back(MatrixAction::congruence("rotation 3/5,4/5", rot));
  acts.push_back(MatrixAction::fractional("inversion", 0, 1, -1, 0));
  acts.push_back(MatrixAction::fractional("translation", 1, 0, 1, 1));
  acts.push_back(MatrixAction::fractional("fractional (2,1;3,2)", 2, 1, 3, 2));
  return acts;
}

inline Json invariance_json(const std::string& label, const MinorPolynomial& p, const std::vector<MatrixAction>& acts,
                            const Settings& s) {
  Json out = Json::array();
  for (auto& r : verify_invariance(p, acts, std::max(3, s.samples), s.seed)) {
    Json j{{"polynomial", label}, {"action", r.action}, {"consistent", r.consistent}};
    if (r.k) j["k"] = *r.k;
    if (r.multiplier) j["multiplier"] = to_string(*r.multiplier);
    j["held_out"] = r.checked;
    out.push_back(j);
  }
  return out;
}

inline Json cmd_verify(const Settings& s) {
  Json r;
  r["suite"] = s.suite;
  r["samples"] = s.samples;
  r["seed"] = s.seed;
  if (s.suite == "b3") {
    auto rep = verify_b3_membership(s.samples, s.seed, s.workers);
    r["on_variety_zeros"] = rep.zeros;
    r["on_variety_failures"] = rep.failures;
    r["resampled"] = rep.resampled;
    r["off_variety_samples"] = rep.off_samples;
    r["off_variety_nonzero"] = rep.off_nonzero;
  } else if (s.suite == "invariance") {
    Json all = Json::array();
    for (auto& j : invariance_json("D4", pde_type_D(4), default_actions(4), s)) all.push_back(j);
    for (auto& j : invariance_json("D4-invariant", pde_type_D_invariant(4), default_actions(4), s)) all.push_back(j);
    Matrix<Rational> shear{{1, 2, 0}, {0, 1, 0}, {1, 1, 1}};
    std::vector<MatrixAction> a_acts{MatrixAction::congruence("shear", shear),
                                     MatrixAction::fractional("inversion", 0, 1, -1, 0),
                                     MatrixAction::fractional("scaling", 2, 0, 0, Rational(1, 2))};
    for (auto& j : invariance_json("A3", pde_type_A(3), a_acts, s)) all.push_back(j);
    r["results"] = all;
  } else if (s.suite == "qn") {
    Json all = Json::array();
    for (int n : {3, 4}) {
      int agree = 0, positive = 0;
      for (int i = 0; i < s.samples; ++i) {
        auto rng = derived_rng(s.seed, 100 + n, i);
        std::uniform_int_distribution<int> c(-9, 9);
        std::vector<std::array<Rational, 2>> xi(n);
        for (auto& x : xi) x = {Rational(c(rng)), Rational(c(rng))};
        Rational fast = evaluate_qn_diagonal(xi), slow = evaluate_qn(SymplecticFrame<Rational>::diagonal(xi));
        agree += fast == slow;
        positive += fast > 0;
      }
      all.push_back({{"n", n}, {"frames", s.samples}, {"fast_equals_general", agree}, {"positive", positive}});
    }
    r["results"] = all;
  } else {
    throw PreconditionError("unknown suite '" + s.suite + "' (b3, invariance, qn)");
  }
  return r;
}

inline void render_text(std::ostream& os, const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    os << indent << it.key() << ":";
    if (v.is_object()) {
      os << "\n";
      render_text(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "\n";
      for (auto& e : v) {
        os << indent << "  -\n";
        render_text(os, e, indent + "    ");
      }
    } else if (v.is_string()) {
      os << " " << v.get<std::string>() << "\n";
    } else {
      os << " " << v.dump() << "\n";
    }
  }
}

inline Outcome run(std::vector<std::string> args) {
  Outcome o;
  CLI::App app{"Invariant second order PDEs on adjoint contact manifolds"};
  app.require_subcommand(1);
  Settings s;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_workers = [&](CLI::App* c) { c->add_option("--workers", s.workers, "worker threads")->check(CLI::PositiveNumber); };

  std::map<std::string, std::function<Json(const Settings&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Json(const Settings&)> h) {
    auto* c = app.add_subcommand(name, help);
    add_format(c);
    handlers[name] = std::move(h);
    return c;
  };

  sub("grading", "contact grading data", cmd_grading)->add_option("--type", s.type)->required();
  auto* table = sub("table", "minimal degree table", cmd_table);
  add_workers(table);
  table->add_option("--cache-dir", s.cache_dir);
  sub("quadric-dim", "quadric invariant dimension", cmd_quadric_dim)->add_option("--type", s.type)->required();
  auto* branch = sub("branch", "invariant ring dimension by branching", cmd_branch);
  branch->add_option("--type", s.type)->required();
  branch->add_option("--degree", s.degree)->check(CLI::PositiveNumber);
  branch->add_option("--cache-dir", s.cache_dir);
  add_workers(branch);
  sub("wp", "minimal coset representatives", cmd_wp)->add_option("--type", s.type)->required();
  auto* pde = sub("pde", "explicit PDE polynomial", cmd_pde);
  pde->add_option("--kind", s.kind, "A, D, D-invariant, B3 or G2");
  pde->add_option("--n", s.n);
  sub("chow", "G2 Lagrangian Chow transform", cmd_chow)->add_option("--type", s.type);
  auto* verify = sub("verify", "sampling verifications", cmd_verify);
  verify->add_option("--suite", s.suite, "b3, invariance or qn");
  verify->add_option("--samples", s.samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", s.seed);
  add_workers(verify);

  std::ostringstream out, err;
  std::string command;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::Success& e) {
    out << app.help();
    return {0, out.str(), ""};
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return {1, "", err.str()};
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Json report;
    report["schema"] = kSchema;
    report["command"] = command;
    Json inputs = Json::object();
    if (!s.type.empty()) inputs["type"] = s.type;
    if (command == "branch") inputs["degree"] = s.degree;
    if (command == "pde") inputs["kind"] = s.kind, inputs["n"] = s.n;
    if (command == "verify") inputs["suite"] = s.suite, inputs["samples"] = s.samples, inputs["seed"] = s.seed;
    report["inputs"] = inputs;
    report["results"] = handlers.at(command)(s);
    if (s.format == "json") out << report.dump(2) << "\n";
    else render_text(out, report);
    o.exit_code = 0;
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << "\n";
    o.exit_code = 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    o.exit_code = 2;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "time " << secs << " s, workers " << s.workers << "\n";
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace adjoint::cli
