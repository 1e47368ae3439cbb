#pragma once

// Subcommand front end of the epsalg tool. `run` takes the arguments after the program
// name so tests can drive it without a process boundary.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "epsalg/epsalg.hpp"

namespace epsalg::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct AlgebraOptions {
  std::string alg;
  std::string family;
  unsigned n = 1;
  std::string spec;
  std::string factor;
  bool classical = false;
};

struct VerifyOptions {
  std::string suite;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t maxlen = 3;
};

inline void add_algebra_options(CLI::App* cmd, AlgebraOptions& o) {
  cmd->add_option("--alg", o.alg, "preset, e.g. boson:n=2, qplane:2, cex, ext:n=3,factor=eps_a");
  cmd->add_option("--family", o.family, "number operator family: fermion, pseudo-fermion, excl, excl-dual, boson, "
                                        "pseudo-boson (or a, a', b, b', c, c')");
  cmd->add_option("--n", o.n, "number of modes for --family")->check(CLI::Range(1, 64));
  cmd->add_option("--spec", o.spec, "algebra spec file (JSON)");
  cmd->add_option("--factor", o.factor, "commutation factor override, e.g. eps_c");
  cmd->add_flag("--classical", o.classical, "use the h = 0 limit");
}

inline Algebra select_algebra(const AlgebraOptions& o) {
  const int given = !o.alg.empty() + !o.family.empty() + !o.spec.empty();
  if (given != 1) throw InvalidArgument("select exactly one of --alg, --family, --spec");
  std::optional<Algebra> alg;
  if (!o.spec.empty()) {
    alg = load_spec_file(o.spec);
  } else if (!o.alg.empty()) {
    alg = parse_preset(o.alg);
  } else {
    const auto f = parse_family(o.family);
    if (!f) throw InvalidArgument("unknown family '" + o.family + "'");
    alg = build_noa(*f, o.n);
  }
  if (o.classical) alg = classical_limit(*alg);
  return *alg;
}

inline CommutationFactor select_factor(const AlgebraOptions& o, const Algebra& alg) {
  if (o.factor.empty()) return alg.factor();
  return parse_factor(o.factor, alg.factor().dim(), alg.factor().moduli());
}

/// Deformation expansion whose classical side is `alg` or its h = 0 limit.
inline DeformationExpansion expansion_for(const Algebra& alg) {
  if (alg.parameter() == HPoly::h()) return DeformationExpansion(alg);
  if (alg.noa() && alg.parameter().is_zero()) return DeformationExpansion(build_noa(alg.noa()->family, alg.noa()->n));
  throw InvalidArgument(alg.name() + " is neither presented with symbolic h nor a classical number operator algebra");
}

inline void emit(const Report& report, bool machine, std::ostream& out) {
  if (machine) {
    for (const Check& c : report.checks()) {
      nlohmann::json rec{{"suite", report.suite()}, {"case", c.case_id}, {"status", c.passed ? "pass" : "fail"},
                         {"payload", c.payload}};
      out << rec.dump() << "\n";
    }
    return;
  }
  for (const Check& c : report.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.case_id;
    if (!c.payload.empty()) out << "  " << c.payload;
    out << "\n";
  }
  const auto failed = report.failures().size();
  out << report.suite() << ": " << report.checks().size() << " checks, " << failed << " failed\n";
}

inline Report confluence_report(const Algebra& alg) {
  Report report("confluence");
  const auto ambs = alg.system().ambiguities();
  for (const auto& a : ambs) {
    const std::string kind = a.kind == Ambiguity::Kind::Overlap ? "overlap " : "inclusion ";
    report.add(kind + alg.alphabet().format(a.word), a.resolvable, a.resolvable ? "" : "residual " + alg.format(a.residual));
  }
  if (ambs.empty()) report.add("no ambiguities", true);
  return report;
}

inline Report factor_report(const Algebra& alg, const CommutationFactor& f) {
  std::vector<Grade> grades{alg.alphabet().zero_grade()};
  for (const auto& g : alg.alphabet().generators()) grades.push_back(g.grade);
  const std::size_t base = grades.size();
  for (std::size_t i = 1; i < base; ++i) {
    for (std::size_t j = i; j < base; ++j) grades.push_back(grades[i] + grades[j]);
  }
  return verify_factor_axioms(f, grades);
}

/// normalize([u, v]_eps) = 0 for all irreducible words u, v of length <= maxlen.
inline Report commutativity_report(const Algebra& alg, const CommutationFactor& f, std::size_t maxlen) {
  Report report("commutative");
  const auto basis = alg.system().enumerate_basis(maxlen);
  std::size_t pairs = 0;
  for (const Word& u : basis) {
    for (const Word& v : basis) {
      const Element c = epsilon_commutator(alg, f, Element::word(u), Element::word(v));
      ++pairs;
      if (!c.is_zero()) {
        report.add("[" + alg.alphabet().format(u) + "," + alg.alphabet().format(v) + "]", false, alg.format(c));
      }
    }
  }
  report.add("pairs of length <= " + std::to_string(maxlen), report.passed(), std::to_string(pairs) + " pairs");
  return report;
}

/// Deformation identity at orders 0..3 on random basis-word triples and the mu_0 table
/// against classical multiplication.
inline Report deformation_report(const DeformationExpansion& exp, std::size_t samples, std::uint64_t seed,
                                 std::size_t maxlen) {
  Report report("deformation");
  const Algebra& cl = exp.classical();
  report.add("bases identified", exp.bases_identified(maxlen + 1));
  Sampler sampler(cl, maxlen, seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Element x = Element::word(sampler.random_basis_word());
    const Element y = Element::word(sampler.random_basis_word());
    const Element z = Element::word(sampler.random_basis_word());
    for (std::size_t n = 0; n <= 3; ++n) {
      const Element r = exp.identity_residual(x, y, z, n);
      if (!r.is_zero()) {
        report.add("identity #" + std::to_string(s) + " order " + std::to_string(n), false,
                   cl.format(x) + ", " + cl.format(y) + ", " + cl.format(z) + ": " + cl.format(r));
      }
    }
  }
  report.add("identity orders 0..3", report.passed(), std::to_string(samples) + " triples");
  bool mu0 = true;
  const auto basis = cl.system().enumerate_basis(maxlen);
  for (const Word& u : basis) {
    for (const Word& v : basis) {
      const Element a = Element::word(u), b = Element::word(v);
      if (exp.mu(a, b, 0) != cl.normalize(a * b)) {
        mu0 = false;
        report.add("mu_0(" + cl.format(a) + "," + cl.format(b) + ")", false, cl.format(exp.mu(a, b, 0)));
      }
    }
  }
  report.add("mu_0 equals classical product", mu0, std::to_string(basis.size()) + " words");
  return report;
}

/// J, J^2 = id, sigma* for a cyclic permutation and phi_{1+i} from the 2h-algebra.
inline Report structure_report(const Algebra& alg) {
  const NoaLayout& L = require_noa(alg);
  Report report("structure");
  report.merge(verify_J_well_defined(alg));
  bool involutive = true;
  for (const Word& w : alg.system().enumerate_basis(3)) {
    const Element x = Element::word(w, HPoly(Scalar(1, 1, 1, 0)));
    if (apply_J(alg, apply_J(alg, x)) != x) involutive = false;
  }
  report.add("J^2 = id", involutive);
  std::vector<unsigned> perm(L.n);
  for (unsigned i = 0; i < L.n; ++i) perm[i] = (i + 1) % L.n;
  report.merge(verify_sigma(alg, perm));
  if (alg.symbolic()) {
    const Scalar lambda(1, 1, 0, 0);
    const RescalingMap phi(lambda, build_noa(L.family, L.n, HPoly(lambda * tau(lambda)) * alg.parameter()), alg);
    report.merge(phi.verify());
  }
  return report;
}

inline Report run_suite(const VerifyOptions& v, const AlgebraOptions& ao, const Algebra& alg) {
  const CommutationFactor f = select_factor(ao, alg);
  if (v.suite == "noa") return number_operator_suite(alg);
  if (v.suite == "structure") return structure_report(alg);
  if (v.suite == "confluence") return confluence_report(alg);
  if (v.suite == "factor") return factor_report(alg, f);
  if (v.suite == "commutative") return commutativity_report(alg, f, v.maxlen);
  if (v.suite == "lie") {
    Sampler sampler(alg, v.maxlen, v.seed);
    const Bracket comm = [&](const Element& x, const Element& y) { return epsilon_commutator(alg, f, x, y); };
    return verify_lie_axioms(alg, f, comm, sampler.triples(v.samples, alg.symbolic()));
  }
  const DeformationExpansion exp = expansion_for(alg);
  const CommutationFactor g = ao.factor.empty() ? exp.classical().factor() : f;
  if (v.suite == "poisson") {
    Sampler sampler(exp.classical(), v.maxlen, v.seed);
    return verify_poisson_axioms(exp, g, sampler.triples(v.samples));
  }
  if (v.suite == "oscillator") {
    OscillatorTable t = oscillator_table(exp, g);
    return t.report;
  }
  if (v.suite == "deformation") return deformation_report(exp, v.samples, v.seed, v.maxlen);
  throw InvalidArgument("unknown suite '" + v.suite + "'");
}

inline GradedMatrix read_matrix(const nlohmann::json& doc, const char* key, const std::vector<Grade>& rows,
                                const std::vector<Grade>& cols, const Grade& zero, const Algebra& alg) {
  const Evaluator eval(alg);
  const auto& m = doc.at(key);
  if (m.size() != rows.size()) throw SpecError(std::string(key) + " has the wrong number of rows");
  std::vector<Element> entries;
  for (const auto& row : m) {
    if (row.size() != cols.size()) throw SpecError(std::string(key) + " has the wrong number of columns");
    for (const auto& e : row) entries.push_back(alg.normalize(eval(e.get<std::string>())));
  }
  GradedMatrix out(rows, cols, zero, std::move(entries));
  if (!out.respects_grading(alg.alphabet())) throw GradeMismatch(std::string(key) + " does not respect the grading");
  return out;
}

inline int rank_command(const Algebra& alg, const std::string& path, std::ostream& out, bool machine) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open matrix file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  const Grade& zero = alg.alphabet().zero_grade();
  auto grades = [&](const char* key) {
    std::vector<Grade> g;
    for (const auto& t : doc.at(key)) g.push_back(Grade::parse(t.get<std::string>(), zero.moduli()));
    return g;
  };
  try {
    const auto old_basis = grades("old");
    const auto new_basis = grades("new");
    const GradedMatrix P = read_matrix(doc, "P", old_basis, new_basis, zero, alg);
    const GradedMatrix Q = read_matrix(doc, "Q", new_basis, old_basis, zero, alg);
    const std::string aug = doc.value("augmentation", std::string("epsilon"));
    Augmentation a = Augmentation::EpsilonRank;
    if (aug == "total") {
      a = Augmentation::TotalRank;
    } else if (aug == "super") {
      a = Augmentation::SuperRank;
    } else if (aug != "epsilon") {
      throw SpecError("augmentation must be total, super or epsilon");
    }
    const bool pair = invertible_pair(alg, P, Q);
    if (!machine) {
      out << "invertible pair: " << (pair ? "yes" : "no") << "\n";
      out << "old basis: " << rank_profile(alg.factor(), old_basis).str() << "\n";
      out << "new basis: " << rank_profile(alg.factor(), new_basis).str() << "\n";
    }
    const Report r = ibn_probe(alg, a, P, Q);
    emit(r, machine, out);
    return r.passed() ? kOk : kCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed matrix file: ") + e.what());
  }
}

inline void print_parse_error(const ParseError& e, const std::string& src, std::ostream& err) {
  err << "error: " << e.what() << "\n  " << src << "\n  " << std::string(std::min(e.offset(), src.size()), ' ')
      << "^\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in epsilon-graded algebras", "epsalg"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  AlgebraOptions ao;
  std::vector<std::string> exprs;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of expressions");
  add_algebra_options(normalize, ao);
  std::string strategy = "leftmost";
  std::uint64_t seed = 1;
  normalize->add_option("--strategy", strategy, "leftmost, rightmost or random")
      ->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
  normalize->add_option("--seed", seed, "seed for --strategy random");
  normalize->add_option("expr", exprs, "expressions")->required();

  auto* bracket = app.add_subcommand("bracket", "epsilon-commutator or epsilon-Poisson bracket of two elements");
  add_algebra_options(bracket, ao);
  std::string kind = "comm";
  bracket->add_option("--kind", kind, "comm or poisson")->check(CLI::IsMember({"comm", "poisson"}));
  bracket->add_option("expr", exprs, "x y")->required()->expected(2);

  auto* mu = app.add_subcommand("mu", "coefficient mu_k of h^k in the deformed product");
  add_algebra_options(mu, ao);
  std::size_t order = 0;
  mu->add_option("--order", order, "k")->required();
  mu->add_option("expr", exprs, "x y")->required()->expected(2);

  auto* confluence = app.add_subcommand("confluence", "list ambiguities and residuals");
  add_algebra_options(confluence, ao);
  bool all = false;
  confluence->add_flag("--all", all, "also list resolved ambiguities");

  auto* dim = app.add_subcommand("dim", "count irreducible words");
  add_algebra_options(dim, ao);
  std::size_t dim_maxlen = 12;
  dim->add_option("--maxlen", dim_maxlen, "longest word length explored");

  auto* rank = app.add_subcommand("rank", "rank profiles and IBN probe for a basis exchange");
  add_algebra_options(rank, ao);
  std::string matrix;
  rank->add_option("--matrix", matrix, "matrix file (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_algebra_options(verify, ao);
  VerifyOptions vo;
  verify->add_option("--suite", vo.suite, "noa, structure, lie, poisson, oscillator, deformation, confluence, "
                                          "factor, commutative")
      ->required()
      ->check(CLI::IsMember(
          {"noa", "structure", "lie", "poisson", "oscillator", "deformation", "confluence", "factor", "commutative"}));
  verify->add_option("--samples", vo.samples, "random samples");
  verify->add_option("--seed", vo.seed, "random seed");
  verify->add_option("--maxlen", vo.maxlen, "longest basis word sampled");

  auto* presets = app.add_subcommand("presets", "list algebra and factor presets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool machine = format == "machine";
  std::string current;
  try {
    if (presets->parsed()) {
      out << "algebras:\n";
      for (const auto& p : preset_names()) out << "  " << p << "\n";
      out << "options: h=<value> fixes h (h=0 is the classical limit)\n";
      out << "factors:\n  eps_a\n  eps_a'\n  eps_c\n  eps_c'\n  eps_q:<q>\n  counterexample\n  trivial\n";
      return kOk;
    }
    const Algebra alg = select_algebra(ao);

    if (normalize->parsed()) {
      std::optional<DeformationExpansion> exp;
      if (alg.parameter() == HPoly::h()) exp.emplace(alg);
      const CommutationFactor f = select_factor(ao, alg);
      const Evaluator eval(alg, exp ? &*exp : nullptr, &f);
      Strategy s;
      if (strategy == "rightmost") s = Strategy::rightmost();
      if (strategy == "random") s = Strategy::random(seed);
      for (const auto& e : exprs) {
        current = e;
        out << alg.format(alg.system().normalize(eval(e), s)) << "\n";
      }
      return kOk;
    }
    if (bracket->parsed()) {
      if (kind == "comm") {
        const CommutationFactor f = select_factor(ao, alg);
        const Evaluator eval(alg, nullptr, &f);
        current = exprs[0];
        const Element x = eval(exprs[0]);
        current = exprs[1];
        const Element y = eval(exprs[1]);
        out << alg.format(epsilon_commutator(alg, f, alg.normalize(x), alg.normalize(y))) << "\n";
        return kOk;
      }
      const DeformationExpansion exp = expansion_for(alg);
      const CommutationFactor f = ao.factor.empty() ? exp.classical().factor() : select_factor(ao, alg);
      const Evaluator eval(exp.classical());
      current = exprs[0];
      const Element x = eval(exprs[0]);
      current = exprs[1];
      const Element y = eval(exprs[1]);
      out << exp.classical().format(poisson_bracket(exp, f, x, y)) << "\n";
      return kOk;
    }
    if (mu->parsed()) {
      const DeformationExpansion exp = expansion_for(alg);
      const Algebra& cl = exp.classical();
      const Evaluator eval(cl);
      current = exprs[0];
      const Element x = cl.normalize(eval(exprs[0]));
      current = exprs[1];
      const Element y = cl.normalize(eval(exprs[1]));
      out << cl.format(exp.mu(x, y, order)) << "\n";
      return kOk;
    }
    if (confluence->parsed()) {
      const auto ambs = all ? alg.system().ambiguities() : alg.system().check_confluence();
      if (machine) {
        for (const auto& a : ambs) {
          nlohmann::json rec{{"suite", "confluence"},
                             {"case", alg.alphabet().format(a.word)},
                             {"status", a.resolvable ? "pass" : "fail"},
                             {"payload", alg.format(a.residual)}};
          out << rec.dump() << "\n";
        }
      } else {
        out << format_ambiguities(alg.alphabet(), ambs);
      }
      const auto bad = std::count_if(ambs.begin(), ambs.end(), [](const Ambiguity& a) { return !a.resolvable; });
      if (!machine) out << alg.system().ambiguities().size() << " ambiguities, " << bad << " unresolved\n";
      return bad == 0 ? kOk : kCheckFailed;
    }
    if (dim->parsed()) {
      const auto counts = alg.system().basis_counts(dim_maxlen);
      std::size_t total = 0;
      for (auto c : counts) total += c;
      if (counts.back() == 0) {
        out << total << "\n";
      } else {
        out << "infinite: " << total << " irreducible words of length <= " << dim_maxlen << "\n";
      }
      return kOk;
    }
    if (rank->parsed()) return rank_command(alg, matrix, out, machine);
    if (verify->parsed()) {
      const auto t0 = std::chrono::steady_clock::now();
      Report r = run_suite(vo, ao, alg);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(r, machine, out);
      return r.passed() ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    print_parse_error(e, current, err);
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace epsalg::cli
