#include <gtest/gtest.h>

#include "epsalg/epsalg.hpp"

using namespace epsalg;

namespace {

Scalar q(long a, long b, long c, long d) { return Scalar(Rational(a), Rational(b), Rational(c), Rational(d)); }

}  // namespace

TEST(Scalar, SqrtTwoSquaresToTwo) { EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2)); }

TEST(Scalar, ImaginaryUnitSquaresToMinusOne) { EXPECT_EQ(Scalar::imag() * Scalar::imag(), Scalar(-1)); }

TEST(Scalar, ProductOfBasisElements) {
  // (1 + i)(1 + sqrt2) = 1 + i + sqrt2 + i sqrt2
  EXPECT_EQ(q(1, 1, 0, 0) * q(1, 0, 1, 0), q(1, 1, 1, 1));
  // (i sqrt2)^2 = -2
  EXPECT_EQ(q(0, 0, 0, 1) * q(0, 0, 0, 1), Scalar(-2));
}

TEST(Scalar, InverseOfGeneralElement) {
  const Scalar x(Rational(1, 2), Rational(-3), Rational(2, 5), Rational(7));
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  EXPECT_EQ(x / x, Scalar(1));
}

TEST(Scalar, InverseOfOnePlusI) { EXPECT_EQ(q(1, 1, 0, 0).inverse(), Scalar(Rational(1, 2), Rational(-1, 2), 0, 0)); }

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(3) / Scalar(0), DivisionByZero);
}

TEST(Scalar, FieldAxiomsOnSamples) {
  const std::vector<Scalar> xs{q(1, 2, 3, 4), Scalar(Rational(-1, 3), 0, Rational(5, 2), 0), q(0, -1, 0, 1), Scalar(7)};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      EXPECT_EQ(a * b, b * a);
      for (const auto& c : xs) {
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(Scalar, TauConjugatesOnlyI) {
  EXPECT_EQ(tau(q(1, 2, 3, 4)), q(1, -2, 3, -4));
  EXPECT_EQ(tau(tau(q(1, 2, 3, 4))), q(1, 2, 3, 4));
  const Scalar a = q(1, 2, 0, 1), b = q(0, 1, 1, 3);
  EXPECT_EQ(tau(a * b), tau(a) * tau(b));
}

TEST(Scalar, Powers) {
  EXPECT_EQ(Scalar::imag().pow(4), Scalar(1));
  EXPECT_EQ(Scalar(-1).pow(-3), Scalar(-1));
  EXPECT_EQ(Scalar(2).pow(-2), Scalar(Rational(1, 4)));
}

TEST(Scalar, CanonicalText) {
  EXPECT_EQ(Scalar(0).str(), "0");
  EXPECT_EQ(Scalar(Rational(1, 2), -1, 3, Rational(1, 3)).str(), "1/2 - I + 3*r2 + 1/3*I*r2");
  EXPECT_EQ(q(0, 0, 0, -1).str(), "-I*r2");
  EXPECT_EQ(Scalar(Rational(-2, 3)).str(), "-2/3");
}

TEST(Scalar, TextRoundTrip) {
  const std::vector<Scalar> xs{Scalar(0), q(1, 2, 3, 4), Scalar(Rational(-1, 3), 0, Rational(5, 2), Rational(-7, 9)),
                               q(0, -1, 0, 0), q(0, 0, 1, 0)};
  for (const auto& x : xs) {
    EXPECT_EQ(parse_scalar(x.str()), x) << x.str();
    EXPECT_EQ(parse_scalar(x.str()).str(), x.str());
  }
}

TEST(HPoly, ArithmeticAndDegree) {
  const HPoly h = HPoly::h();
  const HPoly p = h * h + HPoly(2) * h + HPoly(1);
  EXPECT_EQ(p, (h + HPoly(1)) * (h + HPoly(1)));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(HPoly().degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.substitute(Scalar(2)), Scalar(9));
}

TEST(HPoly, Printing) {
  const HPoly h = HPoly::h();
  EXPECT_EQ((HPoly(Scalar::imag()) * h * h - h + HPoly(3)).str(), "I*h^2 - h + 3");
  EXPECT_EQ(HPoly().str(), "0");
  EXPECT_EQ(parse_hpoly("I*h^2 - h + 3"), HPoly(Scalar::imag()) * h * h - h + HPoly(3));
}

TEST(HPoly, TauActsOnCoefficients) {
  const HPoly p = HPoly(Scalar::imag()) * HPoly::h() + HPoly(Scalar(1, 1, 0, 0));
  EXPECT_EQ(tau(p), HPoly(-Scalar::imag()) * HPoly::h() + HPoly(Scalar(1, -1, 0, 0)));
}
