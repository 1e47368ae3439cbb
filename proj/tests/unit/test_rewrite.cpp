#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "epsalg/epsalg.hpp"

using namespace epsalg;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, letters - 1);
  Word w(len(rng));
  for (auto& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

/// The fermionic system with the sign of a1 ad1 -> h - ad1 a1 flipped.
ReductionSystem mutated_fermion() {
  const Algebra f = build_noa(Family::Fermion, 1);
  std::vector<Rule> rules = f.system().rules();
  const Letter ad = f.noa()->cre(0), a = f.noa()->ann(0);
  for (auto& r : rules) {
    if (r.lhs == Word{a, ad}) r.rhs = Element::word({ad, a}) + Element::scalar(HPoly::h());
  }
  return ReductionSystem(f.alphabet_ptr(), rules);
}

}  // namespace

TEST(Normalize, BosonExample) {
  const Algebra b = build_noa(Family::Boson, 1);
  const Element x = Element::word({b.alphabet().letter("a1"), b.alphabet().letter("ad1"), b.alphabet().letter("ad1")});
  EXPECT_EQ(b.format(b.normalize(x)), "ad1^2*a1 + 2*h*ad1");
}

TEST(Normalize, FermionAnticommutatorOfDistinctModes) {
  const Algebra f = build_noa(Family::Fermion, 2);
  const Evaluator eval(f);
  EXPECT_TRUE(f.normalize(eval("a1*ad2 + ad2*a1")).is_zero());
  EXPECT_EQ(f.format(f.normalize(eval("a1*ad1"))), "-ad1*a1 + h");
  EXPECT_TRUE(f.normalize(eval("a1^2")).is_zero());
}

TEST(Normalize, MatchesBruteForceOracle) {
  std::mt19937_64 rng(11);
  for (Family fam : all_families()) {
    const Algebra alg = build_noa(fam, 2);
    for (int s = 0; s < 40; ++s) {
      const Word w = random_word(rng, alg.alphabet().size(), 6);
      const Element x = Element::word(w, HPoly(Scalar(1, 1, 0, 0)));
      EXPECT_EQ(alg.normalize(x), oracle::brute_force_normalize(alg.system().rules(), x))
          << family_name(fam) << " " << alg.alphabet().format(w);
    }
  }
}

TEST(Normalize, StrategiesAgreeOnConfluentSystems) {
  std::mt19937_64 rng(5);
  for (Family fam : all_families()) {
    const Algebra alg = build_noa(fam, 3);
    for (int s = 0; s < 25; ++s) {
      const Element x = Element::word(random_word(rng, alg.alphabet().size(), 7));
      const Element left = alg.system().normalize(x, Strategy::leftmost());
      EXPECT_EQ(left, alg.system().normalize(x, Strategy::rightmost()));
      EXPECT_EQ(left, alg.system().normalize(x, Strategy::random(s)));
    }
  }
}

TEST(Normalize, ResultIsIrreducible) {
  std::mt19937_64 rng(3);
  const Algebra alg = build_noa(Family::PseudoBoson, 2);
  for (int s = 0; s < 30; ++s) {
    const Element y = alg.normalize(Element::word(random_word(rng, alg.alphabet().size(), 6)));
    for (const auto& [w, c] : y.terms()) EXPECT_TRUE(alg.system().is_irreducible(w));
  }
}

TEST(Normalize, StepBudget) {
  const Algebra b = build_noa(Family::Boson, 1);
  const ReductionSystem tight(b.alphabet_ptr(), b.system().rules(), 10);
  const Letter a = b.noa()->ann(0), ad = b.noa()->cre(0);
  EXPECT_THROW(tight.normalize(Element::word({a, a, a, ad, ad, ad})), StepBudgetExceeded);
}

TEST(ReductionSystem, RejectsBadRules) {
  const auto alphabet = std::make_shared<const Alphabet>(
      std::vector<Generator>{{"x", std::nullopt, Grade({1})}, {"y", std::nullopt, Grade({2})}});
  // Not homogeneous.
  EXPECT_THROW(ReductionSystem(alphabet, {{{0, 0}, Element::word({1}) + Element::word({0})}}), InvalidRule);
  // Right side not smaller.
  EXPECT_THROW(ReductionSystem(alphabet, {{{1}, Element::word({0, 0})}}), InvalidRule);
  // Duplicate left side.
  EXPECT_THROW(ReductionSystem(alphabet, {{{1, 0}, Element::word({0, 1})}, {{1, 0}, Element()}}), InvalidRule);
  // Empty left side.
  EXPECT_THROW(ReductionSystem(alphabet, {{{}, Element()}}), InvalidRule);
}

TEST(Basis, EnumerationMatchesNaiveFilter) {
  for (Family fam : all_families()) {
    const Algebra alg = build_noa(fam, 2);
    EXPECT_EQ(alg.system().enumerate_basis(4), oracle::naive_basis(alg.alphabet().size(), alg.system().rules(), 4))
        << family_name(fam);
  }
}

TEST(Basis, ExclusionDimensions) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (Family fam : {Family::Excl, Family::ExclDual}) {
      const auto counts = build_noa(fam, n).system().basis_counts(6);
      std::size_t total = 0;
      for (auto c : counts) total += c;
      EXPECT_EQ(total, (n + 1) * (n + 1));
      EXPECT_EQ(counts.back(), 0u);
    }
  }
}

TEST(Basis, ClassicalFermionIsExteriorOnFourGenerators) {
  const Algebra cl = classical_limit(build_noa(Family::Fermion, 2));
  EXPECT_EQ(cl.system().enumerate_basis(8).size(), 16u);
}

TEST(Confluence, PresetsAreConfluent) {
  for (Family fam : all_families()) {
    for (unsigned n = 1; n <= 3; ++n) EXPECT_TRUE(build_noa(fam, n, HPoly::h(), false).system().check_confluence().empty());
  }
  EXPECT_TRUE(build_quantum_plane(Scalar(2), false).system().check_confluence().empty());
  EXPECT_TRUE(build_counterexample(false).system().check_confluence().empty());
}

TEST(Confluence, SignMutationIsDetected) {
  const ReductionSystem sys = mutated_fermion();
  const auto bad = sys.check_confluence();
  ASSERT_FALSE(bad.empty());
  const Letter a = sys.alphabet().letter("a1");
  const Element two_h_a = Element::word({a}, HPoly(2) * HPoly::h());
  bool found = false;
  for (const auto& amb : bad) found = found || amb.residual == two_h_a || amb.residual == -two_h_a;
  EXPECT_TRUE(found) << format_ambiguities(sys.alphabet(), bad);
}

TEST(Confluence, AmbiguitiesAreEnumerated) {
  const Algebra f = build_noa(Family::Fermion, 1);
  const auto all = f.system().ambiguities();
  EXPECT_FALSE(all.empty());
  for (const auto& amb : all) EXPECT_TRUE(amb.resolvable);
}
