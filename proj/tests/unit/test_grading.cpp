#include <gtest/gtest.h>

#include "epsalg/epsalg.hpp"

using namespace epsalg;

namespace {

std::vector<Grade> small_grades(std::size_t n) {
  std::vector<Grade> out;
  for (long a = -1; a <= 1; ++a) {
    for (long b = -1; b <= 1; ++b) {
      std::vector<long> c(n, 0);
      c[0] = a;
      if (n > 1) c[1] = b;
      if (n > 2) c[2] = a - b;
      out.emplace_back(c);
    }
  }
  return out;
}

}  // namespace

TEST(Grade, ArithmeticAndText) {
  const Grade g({1, -2}), k({3, 1});
  EXPECT_EQ((g + k).str(), "(4,-1)");
  EXPECT_EQ((-g).str(), "(-1,2)");
  EXPECT_EQ(Grade::parse(" (4, -1) "), g + k);
  EXPECT_THROW(Grade::parse("4,1"), InvalidArgument);
}

TEST(Grade, ModuliReduce) {
  const Grade g({3, -1}, {2, 2});
  EXPECT_EQ(g.str(), "(1,1)");
  EXPECT_TRUE((g + g).is_zero());
}

TEST(Grade, ShapeMismatchThrows) { EXPECT_THROW(Grade({1}) + Grade({1, 0}), GradeMismatch); }

TEST(CommutationFactor, PresetsSatisfyAxioms) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& f : {factors::eps_a(n), factors::eps_a_prime(n), factors::eps_c(n), factors::eps_c_prime(n)}) {
      EXPECT_TRUE(verify_factor_axioms(f, small_grades(n)).passed()) << f.name();
    }
  }
  EXPECT_TRUE(verify_factor_axioms(factors::eps_q(Scalar(2)), small_grades(2)).passed());
  EXPECT_TRUE(verify_factor_axioms(factors::eps_q(Scalar(0, 1, 0, 0)), small_grades(2)).passed());
}

TEST(CommutationFactor, NonAntisymmetricFormViolatesInverseAxiom) {
  // 2^{g k} with a symmetric form gives eps(g,k) eps(k,g) = 4 for g = k = (1).
  const CommutationFactor bad("bad", Scalar(2), {{1}});
  const Report r = verify_factor_axioms(bad, {Grade({1}), Grade({0})});
  EXPECT_FALSE(r.passed());
}

TEST(CommutationFactor, ExamplesFromTheFamilies) {
  const Grade p1 = Grade::unit(2, 0), p2 = Grade::unit(2, 1);
  EXPECT_EQ(factors::eps_a(2)(p1, p2), Scalar(-1));
  EXPECT_EQ(factors::eps_a_prime(2)(p1, p2), Scalar(1));
  EXPECT_EQ(factors::eps_a_prime(2)(p1, p1), Scalar(-1));
  EXPECT_EQ(factors::eps_c_prime(2)(p1, p2), Scalar(-1));
  EXPECT_EQ(factors::eps_c_prime(2)(p1, p1), Scalar(1));
  EXPECT_EQ(factors::eps_c(2)(p1, p2), Scalar(1));
}

TEST(CommutationFactor, QuantumPlaneFactor) {
  const auto f = factors::eps_q(Scalar(3));
  // q^{lm - kn}
  EXPECT_EQ(f(Grade({0, 1}), Grade({1, 0})), Scalar(3));
  EXPECT_EQ(f(Grade({1, 0}), Grade({0, 1})), Scalar(Rational(1, 3)));
  EXPECT_EQ(f.symmetry(), FormSymmetry::Antisymmetric);
}

TEST(CommutationFactor, Parity) {
  const auto a = factors::eps_a(2);
  EXPECT_EQ(a.parity(Grade({1, 0})), Parity::Odd);
  EXPECT_EQ(a.parity(Grade({1, 1})), Parity::Even);
  EXPECT_EQ(a.parity(Grade({1, -2})), Parity::Odd);
  // eps_c'(g,g) = (-1)^(2 sum_{i<j} g_i g_j): everything is even.
  EXPECT_EQ(factors::eps_c_prime(3).parity(Grade({1, 1, 0})), Parity::Even);
  EXPECT_EQ(factors::eps_c_prime(3).parity(Grade({1, 0, 0})), Parity::Even);
  EXPECT_EQ(factors::eps_a_prime(3).parity(Grade({1, 1, 1})), Parity::Odd);
  EXPECT_EQ(factors::eps_a_prime(3).parity(Grade({1, -1, 0})), Parity::Even);
}

TEST(CommutationFactor, ParityIsAdditive) {
  for (const auto& f : {factors::eps_a(3), factors::eps_a_prime(3), factors::eps_c_prime(3)}) {
    for (const auto& g : small_grades(3)) {
      for (const auto& k : small_grades(3)) {
        const bool odd = (f.parity(g) == Parity::Odd) != (f.parity(k) == Parity::Odd);
        EXPECT_EQ(f.parity(g + k) == Parity::Odd, odd);
      }
    }
  }
}

TEST(CommutationFactor, CounterexampleFactor) {
  const auto f = factors::counterexample();
  const Grade x({1, 0}, {2, 2}), y({0, 1}, {2, 2});
  EXPECT_EQ(f(x, y), Scalar(-1));
  EXPECT_EQ(f(x, x), Scalar(1));
  EXPECT_TRUE(f.well_defined());
  EXPECT_TRUE(verify_factor_axioms(f, {x, y, x + y, Grade({0, 0}, {2, 2})}).passed());
}

TEST(CommutationFactor, IllDefinedOnTorsion) {
  const CommutationFactor f("q-on-Z2", Scalar(3), {{0, 1}, {-1, 0}}, {2, 2});
  EXPECT_FALSE(f.well_defined());
}
