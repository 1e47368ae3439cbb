#pragma once

// Exact coefficients: the field K = Q(i, sqrt 2) (the 8th cyclotomic field) with the
// involution tau (complex conjugation), and polynomials over K in the formal central
// parameter h.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "epsalg/errors.hpp"

namespace epsalg {

using Rational = mpq_class;

namespace detail {

/// One signed term of a printed sum: rational magnitude times a `*`-joined factor string.
struct Monomial {
  Rational coeff;
  std::string factors;
};

inline std::string join_factors(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

inline std::string join_monomials(const std::vector<Monomial>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += t.factors;
    } else {
      out += magnitude.get_str() + "*" + t.factors;
    }
    first = false;
  }
  return out;
}

inline const std::array<const char*, 4>& unit_names() {
  static const std::array<const char*, 4> names{"", "I", "r2", "I*r2"};
  return names;
}

}  // namespace detail

/// Element c0 + c1*i + c2*sqrt2 + c3*i*sqrt2 of K, stored on that Q-basis.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_{Rational(v), Rational(0), Rational(0), Rational(0)} {}
  Scalar(const Rational& r) : c_{r, Rational(0), Rational(0), Rational(0)} {}
  Scalar(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Scalar imag() { return {0, 1, 0, 0}; }
  static Scalar sqrt2() { return {0, 0, 1, 0}; }

  const Rational& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  Scalar& operator+=(const Scalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a) {
    return {Rational(-a.c_[0]), Rational(-a.c_[1]), Rational(-a.c_[2]), Rational(-a.c_[3])};
  }

  // Write s = x + y*sqrt2 with x, y Gaussian rationals; then
  // (x1 + y1 r)(x2 + y2 r) = (x1 x2 + 2 y1 y2) + (x1 y2 + y1 x2) r.
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.c_[0] * b.c_[0]));
    const auto [xr, xi] = gauss_mul(a.c_[0], a.c_[1], b.c_[0], b.c_[1]);
    const auto [yr, yi] = gauss_mul(a.c_[2], a.c_[3], b.c_[2], b.c_[3]);
    const auto [ur, ui] = gauss_mul(a.c_[0], a.c_[1], b.c_[2], b.c_[3]);
    const auto [vr, vi] = gauss_mul(a.c_[2], a.c_[3], b.c_[0], b.c_[1]);
    return {Rational(xr + 2 * yr), Rational(xi + 2 * yi), Rational(ur + vr), Rational(ui + vi)};
  }

  /// Multiplicative inverse; throws DivisionByZero on 0.
  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (is_rational()) return Scalar(Rational(1 / c_[0]));
    // s^-1 = (x - y r) / (x^2 - 2 y^2), and the Gaussian norm clears the last denominator.
    const auto [x2r, x2i] = gauss_mul(c_[0], c_[1], c_[0], c_[1]);
    const auto [y2r, y2i] = gauss_mul(c_[2], c_[3], c_[2], c_[3]);
    const Rational nr = x2r - 2 * y2r;
    const Rational ni = x2i - 2 * y2i;
    const Rational norm = nr * nr + ni * ni;
    const Scalar inv_n(Rational(nr / norm), Rational(-ni / norm), Rational(0), Rational(0));
    return Scalar(c_[0], c_[1], Rational(-c_[2]), Rational(-c_[3])) * inv_n;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  /// Integer power; negative exponents invert first.
  Scalar pow(long e) const {
    if (is_rational() && (c_[0] == 1 || c_[0] == -1)) {
      return (c_[0] == -1 && (e % 2 != 0)) ? Scalar(-1) : Scalar(1);
    }
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar result(1);
    while (k != 0) {
      if (k & 1UL) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Terms of this scalar, each multiplied by `suffix`, in basis order 1, I, r2, I*r2.
  void append_monomials(std::vector<detail::Monomial>& out, const std::string& suffix) const {
    for (std::size_t k = 0; k < 4; ++k) {
      if (c_[k] != 0) out.push_back({c_[k], detail::join_factors(detail::unit_names()[k], suffix)});
    }
  }

  /// Canonical text, e.g. `3/2 + r2`, `1 - I`, `-1/2*I*r2`.
  std::string str() const {
    std::vector<detail::Monomial> terms;
    append_monomials(terms, "");
    return detail::join_monomials(terms);
  }

 private:
  static std::pair<Rational, Rational> gauss_mul(const Rational& a, const Rational& b,
                                                 const Rational& c, const Rational& d) {
    return {Rational(a * c - b * d), Rational(a * d + b * c)};
  }

  std::array<Rational, 4> c_{};
};

/// The involution of K: i -> -i, sqrt2 -> sqrt2.
inline Scalar tau(const Scalar& s) {
  return {s[0], Rational(-s[1]), s[2], Rational(-s[3])};
}

/// Polynomial in the central parameter h with coefficients in K. No trailing zeros are stored.
class HPoly {
 public:
  HPoly() = default;
  HPoly(long v) : HPoly(Scalar(v)) {}
  HPoly(const Scalar& s) {
    if (!s.is_zero()) c_.push_back(s);
  }

  static HPoly h() { return monomial(Scalar(1), 1); }
  static HPoly monomial(const Scalar& s, std::size_t power) {
    HPoly p;
    if (s.is_zero()) return p;
    p.c_.assign(power + 1, Scalar());
    p.c_[power] = s;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const Scalar& coeff(std::size_t k) const {
    static const Scalar zero;
    return k < c_.size() ? c_[k] : zero;
  }
  Scalar constant_term() const { return coeff(0); }

  HPoly& operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  HPoly& operator*=(const HPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator-(HPoly a) {
    for (auto& s : a.c_) s = -s;
    return a;
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  /// Evaluation homomorphism at h = v.
  Scalar substitute(const Scalar& v) const {
    Scalar r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
    return r;
  }

  friend HPoly tau(HPoly p) {
    for (auto& s : p.c_) s = epsalg::tau(s);
    return p;
  }

  /// Terms in descending powers of h, each multiplied by `suffix`.
  void append_monomials(std::vector<detail::Monomial>& out, const std::string& suffix) const {
    for (std::size_t k = c_.size(); k-- > 0;) {
      std::string hpart;
      if (k == 1) hpart = "h";
      if (k > 1) hpart = "h^" + std::to_string(k);
      c_[k].append_monomials(out, detail::join_factors(hpart, suffix));
    }
  }

  std::string str() const {
    std::vector<detail::Monomial> terms;
    append_monomials(terms, "");
    return detail::join_monomials(terms);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

inline Scalar substitute_h(const HPoly& p, const Scalar& v) { return p.substitute(v); }

}  // namespace epsalg
