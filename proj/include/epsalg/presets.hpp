#pragma once

// Concrete algebras: the six number-operator-algebra families, their classical limits,
// Manin's quantum plane, the epsilon-exterior algebra, and the invertible-generator
// algebra whose free modules have no invariant epsilon-rank.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/free_algebra.hpp"
#include "epsalg/grading.hpp"
#include "epsalg/rewrite.hpp"

namespace epsalg {

enum class Family { Fermion, PseudoFermion, Excl, ExclDual, Boson, PseudoBoson };

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> fams{Family::Fermion, Family::PseudoFermion, Family::Excl,
                                       Family::ExclDual, Family::Boson,   Family::PseudoBoson};
  return fams;
}

/// The four families whose classical limit is epsilon-commutative.
inline const std::vector<Family>& poisson_families() {
  static const std::vector<Family> fams{Family::Fermion, Family::PseudoFermion, Family::Boson,
                                       Family::PseudoBoson};
  return fams;
}

/// CLI preset name.
inline std::string family_name(Family f) {
  switch (f) {
    case Family::Fermion: return "fermion";
    case Family::PseudoFermion: return "pseudo-fermion";
    case Family::Excl: return "excl";
    case Family::ExclDual: return "excl-dual";
    case Family::Boson: return "boson";
    case Family::PseudoBoson: return "pseudo-boson";
  }
  return "?";
}

/// Accepts preset names and the letter tags a, a', b, b', c, c'.
inline std::optional<Family> parse_family(std::string_view s) {
  static const std::map<std::string, Family, std::less<>> names{
      {"fermion", Family::Fermion},     {"a", Family::Fermion},
      {"pseudo-fermion", Family::PseudoFermion}, {"a'", Family::PseudoFermion},
      {"excl", Family::Excl},           {"b", Family::Excl},
      {"excl-dual", Family::ExclDual},  {"b'", Family::ExclDual},
      {"boson", Family::Boson},         {"c", Family::Boson},
      {"pseudo-boson", Family::PseudoBoson}, {"c'", Family::PseudoBoson}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

/// Paired commutation factor of each family on Z^n.
inline CommutationFactor family_factor(Family f, std::size_t n) {
  switch (f) {
    case Family::Fermion: return factors::eps_a(n);
    case Family::PseudoFermion: return factors::eps_a_prime(n);
    case Family::Boson: return factors::eps_c(n);
    case Family::PseudoBoson:
    case Family::Excl:
    case Family::ExclDual: return factors::eps_c_prime(n);
  }
  throw InvalidArgument("invalid family");
}

/// Letter ids of the creation and annihilation generators of a NOA preset (0-based index).
struct NoaLayout {
  Family family = Family::Boson;
  unsigned n = 0;
  std::vector<Letter> creators;
  std::vector<Letter> annihilators;

  Letter cre(unsigned i) const { return creators.at(i); }
  Letter ann(unsigned i) const { return annihilators.at(i); }
};

/// A graded algebra presented by a reduction system, with its commutation factor and the
/// value of the parameter h used in its relations.
class Algebra {
 public:
  Algebra(std::string name, CommutationFactor factor, ReductionSystem system, HPoly parameter,
          std::optional<NoaLayout> noa = std::nullopt)
      : name_(std::move(name)),
        factor_(std::move(factor)),
        system_(std::move(system)),
        parameter_(std::move(parameter)),
        noa_(std::move(noa)) {
    if (factor_.dim() != alphabet().zero_grade().dim() || factor_.moduli() != alphabet().zero_grade().moduli()) {
      throw GradeMismatch("commutation factor '" + factor_.name() + "' does not match the grade group of " + name_);
    }
    std::vector<Grade> grades;
    for (const auto& g : alphabet().generators()) grades.push_back(g.grade);
    const Report axioms = verify_factor_axioms(factor_, grades);
    if (!axioms.passed()) {
      throw InvalidArgument("commutation factor '" + factor_.name() + "' violates its axioms on the generators of " +
                            name_ + ": " + axioms.failures().front().case_id);
    }
  }

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return system_.alphabet(); }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return system_.alphabet_ptr(); }
  const CommutationFactor& factor() const { return factor_; }
  const ReductionSystem& system() const { return system_; }
  /// The value substituted for h in the relations: h itself, a multiple of it, or a constant.
  const HPoly& parameter() const { return parameter_; }
  bool symbolic() const { return !parameter_.is_constant(); }
  const std::optional<NoaLayout>& noa() const { return noa_; }

  Element normalize(const Element& x) const { return system_.normalize(x); }
  Element generator(std::string_view label) const { return Element::word({alphabet().letter(label)}); }

  /// Defining relations lhs - rhs; they generate the ideal presented by the rules.
  std::vector<Element> relations() const {
    std::vector<Element> out;
    for (const auto& r : system_.rules()) out.push_back(Element::word(r.lhs) - r.rhs);
    return out;
  }

  std::string format(const Element& x) const { return epsalg::format(alphabet(), x); }

 private:
  std::string name_;
  CommutationFactor factor_;
  ReductionSystem system_;
  HPoly parameter_;
  std::optional<NoaLayout> noa_;
};

/// Throws InvalidArgument if the algebra's reduction system has an unresolved ambiguity.
inline void certify_confluence(const Algebra& alg) {
  const auto bad = alg.system().check_confluence();
  if (!bad.empty()) {
    throw InvalidArgument(alg.name() + " is not confluent: " + format_ambiguities(alg.alphabet(), bad));
  }
}

namespace detail {

class RuleBuilder {
 public:
  void add(Word lhs, Element rhs) { rules_.push_back({std::move(lhs), std::move(rhs)}); }
  std::vector<Rule> take() { return std::move(rules_); }

 private:
  std::vector<Rule> rules_;
};

inline Element w2(Letter x, Letter y, const HPoly& c = HPoly(1)) { return Element::word({x, y}, c); }

}  // namespace detail

/// Number operator algebra of the given family on n modes, relations written with `parameter`
/// in place of h. Normal forms put creators before annihilators (annihilators first for
/// excl-dual), each block in ascending index order.
inline Algebra build_noa(Family family, unsigned n, const HPoly& parameter = HPoly::h(), bool certify = true) {
  if (n < 1) throw InvalidArgument("number operator algebras need n >= 1");
  const bool dual = family == Family::ExclDual;

  std::vector<Generator> gens;
  NoaLayout layout{family, n, {}, {}};
  auto push_creators = [&] {
    for (unsigned i = 0; i < n; ++i) {
      layout.creators.push_back(static_cast<Letter>(gens.size()));
      gens.push_back({"ad", i + 1, Grade::unit(n, i)});
    }
  };
  auto push_annihilators = [&] {
    for (unsigned i = 0; i < n; ++i) {
      layout.annihilators.push_back(static_cast<Letter>(gens.size()));
      gens.push_back({"a", i + 1, -Grade::unit(n, i)});
    }
  };
  if (dual) {
    push_annihilators();
    push_creators();
  } else {
    push_creators();
    push_annihilators();
  }
  auto alphabet = std::make_shared<const Alphabet>(std::move(gens));
  const auto& A = layout.annihilators;
  const auto& C = layout.creators;
  using detail::w2;
  detail::RuleBuilder rb;
  const Element h = Element::scalar(parameter);

  switch (family) {
    case Family::Fermion:
    case Family::PseudoFermion:
    case Family::Boson:
    case Family::PseudoBoson: {
      const bool nilpotent = family == Family::Fermion || family == Family::PseudoFermion;
      // Sign of the exchange between distinct modes.
      const long sign = (family == Family::Fermion || family == Family::PseudoBoson) ? -1 : 1;
      for (unsigned i = 0; i < n; ++i) {
        if (nilpotent) {
          rb.add({A[i], A[i]}, Element());
          rb.add({C[i], C[i]}, Element());
        }
        for (unsigned j = i + 1; j < n; ++j) {
          rb.add({A[j], A[i]}, w2(A[i], A[j], sign));
          rb.add({C[j], C[i]}, w2(C[i], C[j], sign));
        }
        for (unsigned j = 0; j < n; ++j) {
          if (j != i) rb.add({A[i], C[j]}, w2(C[j], A[i], sign));
        }
        if (nilpotent) {
          rb.add({A[i], C[i]}, h - w2(C[i], A[i]));
        } else {
          rb.add({A[i], C[i]}, w2(C[i], A[i]) + h);
        }
      }
      break;
    }
    case Family::Excl:
    case Family::ExclDual: {
      // excl-dual is excl with the roles of a_i and ad_i exchanged.
      const auto& X = dual ? C : A;
      const auto& Y = dual ? A : C;
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          rb.add({X[i], X[j]}, Element());
          rb.add({Y[i], Y[j]}, Element());
          if (i != j) rb.add({X[i], Y[j]}, Element());
        }
        Element sum;
        for (unsigned k = 0; k < n; ++k) sum += w2(Y[k], X[k]);
        rb.add({X[i], Y[i]}, h - sum);
      }
      break;
    }
  }

  ReductionSystem sys(alphabet, rb.take());
  std::string name = family_name(family) + ":n=" + std::to_string(n);
  if (parameter != HPoly::h()) name += ",h=" + parameter.str();
  Algebra alg(std::move(name), family_factor(family, n), std::move(sys), parameter, layout);
  if (certify) certify_confluence(alg);
  return alg;
}

/// Same presentation with h replaced by the constant v.
inline Algebra fix_parameter(const Algebra& alg, const Scalar& v) {
  auto sys = alg.system().map_rhs([&](const Element& e) { return e.substitute_h(v); });
  std::string name = alg.name();
  if (alg.noa()) {
    name = family_name(alg.noa()->family) + ":n=" + std::to_string(alg.noa()->n) + ",h=" + v.str();
  } else {
    name += ",h=" + v.str();
  }
  return Algebra(std::move(name), alg.factor(), std::move(sys), HPoly(alg.parameter().substitute(v)), alg.noa());
}

/// The h = 0 algebra of a symbolic presentation.
inline Algebra classical_limit(const Algebra& alg) {
  if (!alg.symbolic()) throw InvalidArgument("classical limit needs a presentation with symbolic h");
  return fix_parameter(alg, Scalar(0));
}

/// M_q = K<x,y>/(xy - q yx) with rule xy -> q yx, basis y^k x^l, paired with eps_q.
/// Grades are x = (0,1), y = (1,0): with eps_q((k,l),(m,n)) = q^{lm-kn} this is the
/// assignment under which M_q is eps_q-commutative.
inline Algebra build_quantum_plane(const Scalar& q, bool certify = true) {
  if (q.is_zero()) throw InvalidArgument("quantum plane parameter q must be nonzero");
  auto alphabet = std::make_shared<const Alphabet>(std::vector<Generator>{
      {"y", std::nullopt, Grade({1, 0})},
      {"x", std::nullopt, Grade({0, 1})},
  });
  const Letter y = 0, x = 1;
  ReductionSystem sys(alphabet, {{{x, y}, Element::word({y, x}, HPoly(q))}});
  Algebra alg("qplane:" + q.str(), factors::eps_q(q), std::move(sys), HPoly());
  if (certify) certify_confluence(alg);
  return alg;
}

/// K{x, y, X = x^-1, Y = y^-1} with x, X anticommuting with y, Y, graded by (Z/2)^2.
inline Algebra build_counterexample(bool certify = true) {
  const std::vector<long> mod{2, 2};
  auto alphabet = std::make_shared<const Alphabet>(std::vector<Generator>{
      {"x", std::nullopt, Grade({1, 0}, mod)},
      {"X", std::nullopt, Grade({1, 0}, mod)},
      {"y", std::nullopt, Grade({0, 1}, mod)},
      {"Y", std::nullopt, Grade({0, 1}, mod)},
  });
  const Letter x = 0, X = 1, y = 2, Y = 3;
  using detail::w2;
  detail::RuleBuilder rb;
  rb.add({x, X}, Element::one());
  rb.add({X, x}, Element::one());
  rb.add({y, Y}, Element::one());
  rb.add({Y, y}, Element::one());
  for (Letter u : {x, X}) {
    for (Letter v : {y, Y}) rb.add({v, u}, w2(u, v, -1));
  }
  ReductionSystem sys(alphabet, rb.take());
  Algebra alg("cex", factors::counterexample(), std::move(sys), HPoly());
  if (certify) certify_confluence(alg);
  return alg;
}

/// Lambda_eps(V) on generators v1..vn: v_j v_i -> -eps(v_j, v_i) v_i v_j for i < j, and
/// v_i^2 -> 0 for even v_i. Squares of odd generators stay irreducible.
inline Algebra build_epsilon_exterior(const std::vector<Grade>& grades, const CommutationFactor& factor,
                                      bool certify = true) {
  if (grades.empty()) throw InvalidArgument("epsilon-exterior algebra needs at least one generator");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < grades.size(); ++i) {
    gens.push_back({"v", static_cast<unsigned>(i + 1), grades[i]});
  }
  auto alphabet = std::make_shared<const Alphabet>(std::move(gens));
  detail::RuleBuilder rb;
  for (std::size_t i = 0; i < grades.size(); ++i) {
    const auto vi = static_cast<Letter>(i);
    if (factor.parity(grades[i]) == Parity::Even) rb.add({vi, vi}, Element());
    for (std::size_t j = i + 1; j < grades.size(); ++j) {
      const auto vj = static_cast<Letter>(j);
      rb.add({vj, vi}, detail::w2(vi, vj, HPoly(-factor(grades[j], grades[i]))));
    }
  }
  ReductionSystem sys(alphabet, rb.take());
  Algebra alg("ext:n=" + std::to_string(grades.size()) + ",factor=" + factor.name(), factor, std::move(sys), HPoly());
  if (certify) certify_confluence(alg);
  return alg;
}

}  // namespace epsalg
