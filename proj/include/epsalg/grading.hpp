#pragma once

// Grade groups Z^n x (Z/m)^k, commutation factors of exponential form base^{B(g,k)},
// and the parity map they induce.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/report.hpp"
#include "epsalg/scalar.hpp"

namespace epsalg {

/// Finitely supported integer tuple; a coordinate with modulus m > 0 is kept in [0, m).
class Grade {
 public:
  Grade() = default;
  explicit Grade(std::vector<long> coords, std::vector<long> moduli = {})
      : coords_(std::move(coords)), moduli_(std::move(moduli)) {
    if (moduli_.empty()) moduli_.assign(coords_.size(), 0);
    if (moduli_.size() != coords_.size()) throw GradeMismatch("grade moduli do not match coordinates");
    reduce();
  }

  static Grade zero(std::size_t dim, std::vector<long> moduli = {}) {
    return Grade(std::vector<long>(dim, 0), std::move(moduli));
  }
  /// The unit vector p_i (0-based i).
  static Grade unit(std::size_t dim, std::size_t i, std::vector<long> moduli = {}) {
    std::vector<long> c(dim, 0);
    c.at(i) = 1;
    return Grade(std::move(c), std::move(moduli));
  }

  std::size_t dim() const { return coords_.size(); }
  long operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<long>& coords() const { return coords_; }
  const std::vector<long>& moduli() const { return moduli_; }
  bool is_zero() const {
    for (long c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }

  Grade& operator+=(const Grade& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    reduce();
    return *this;
  }
  Grade& operator-=(const Grade& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    reduce();
    return *this;
  }
  friend Grade operator+(Grade a, const Grade& b) { return a += b; }
  friend Grade operator-(Grade a, const Grade& b) { return a -= b; }
  friend Grade operator-(const Grade& a) { return zero(a.dim(), a.moduli_) - a; }

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.coords_ == b.coords_ && a.moduli_ == b.moduli_;
  }
  friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
  friend bool operator<(const Grade& a, const Grade& b) {
    if (a.coords_ != b.coords_) return a.coords_ < b.coords_;
    return a.moduli_ < b.moduli_;
  }

  /// `(k1,k2,...)`
  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
    os << ')';
    return os.str();
  }

  /// Parses `(k1,...,kn)`; whitespace is ignored.
  static Grade parse(std::string_view text, std::vector<long> moduli = {}) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') s += ch;
    }
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
      throw InvalidArgument("malformed grade '" + std::string(text) + "'");
    }
    std::vector<long> coords;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          coords.push_back(std::stol(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw InvalidArgument("malformed grade '" + std::string(text) + "'");
        }
      }
    }
    return Grade(std::move(coords), std::move(moduli));
  }

 private:
  void check_compatible(const Grade& o) const {
    if (coords_.size() != o.coords_.size() || moduli_ != o.moduli_) {
      throw GradeMismatch("incompatible grades " + str() + " and " + o.str());
    }
  }
  void reduce() {
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      const long m = moduli_[k];
      if (m > 0) coords_[k] = ((coords_[k] % m) + m) % m;
    }
  }

  std::vector<long> coords_;
  std::vector<long> moduli_;
};

enum class Parity { Even, Odd };
enum class FormSymmetry { Symmetric, Antisymmetric, Both, None };

/// eps(g, k) = base^{B(g, k)} for an integer bilinear form B on the grade coordinates.
class CommutationFactor {
 public:
  CommutationFactor() = default;
  CommutationFactor(std::string name, Scalar base, std::vector<std::vector<long>> form,
                    std::vector<long> moduli = {})
      : name_(std::move(name)), base_(std::move(base)), form_(std::move(form)), moduli_(std::move(moduli)) {
    if (base_.is_zero()) throw InvalidArgument("commutation factor base must be nonzero");
    for (const auto& row : form_) {
      if (row.size() != form_.size()) throw InvalidArgument("commutation factor form must be square");
    }
    if (moduli_.empty()) moduli_.assign(form_.size(), 0);
    if (moduli_.size() != form_.size()) throw InvalidArgument("factor moduli do not match form size");
  }

  const std::string& name() const { return name_; }
  const Scalar& base() const { return base_; }
  const std::vector<std::vector<long>>& form() const { return form_; }
  const std::vector<long>& moduli() const { return moduli_; }
  std::size_t dim() const { return form_.size(); }

  long exponent(const Grade& g, const Grade& k) const {
    if (g.dim() != dim() || k.dim() != dim()) {
      throw GradeMismatch("grade dimension does not match commutation factor '" + name_ + "'");
    }
    long e = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (g[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) e += g[i] * form_[i][j] * k[j];
    }
    return e;
  }

  Scalar operator()(const Grade& g, const Grade& k) const { return base_.pow(exponent(g, k)); }

  /// Throws InvalidArgument when eps(g, g) is not +-1, which no commutation factor allows.
  Parity parity(const Grade& g) const {
    const Scalar e = (*this)(g, g);
    if (e == Scalar(1)) return Parity::Even;
    if (e == Scalar(-1)) return Parity::Odd;
    throw InvalidArgument("eps(g,g) = " + e.str() + " is not +-1 for g = " + g.str());
  }

  FormSymmetry symmetry() const {
    bool sym = true;
    bool anti = true;
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        if (form_[i][j] != form_[j][i]) sym = false;
        if (form_[i][j] != -form_[j][i]) anti = false;
      }
    }
    if (sym && anti) return FormSymmetry::Both;
    if (sym) return FormSymmetry::Symmetric;
    if (anti) return FormSymmetry::Antisymmetric;
    return FormSymmetry::None;
  }

  /// base^{m B_jk} = 1 and base^{m B_kj} = 1 for every coordinate j of modulus m.
  bool well_defined() const {
    for (std::size_t j = 0; j < dim(); ++j) {
      const long m = moduli_[j];
      if (m == 0) continue;
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!base_.pow(m * form_[j][k]).is_one() || !base_.pow(m * form_[k][j]).is_one()) return false;
      }
    }
    return true;
  }

 private:
  std::string name_;
  Scalar base_{1};
  std::vector<std::vector<long>> form_;
  std::vector<long> moduli_;
};

inline Scalar epsilon_eval(const CommutationFactor& f, const Grade& g, const Grade& k) { return f(g, k); }
inline Parity parity(const CommutationFactor& f, const Grade& g) { return f.parity(g); }

namespace factors {

inline std::vector<std::vector<long>> square(std::size_t n, long fill = 0) {
  return std::vector<std::vector<long>>(n, std::vector<long>(n, fill));
}

/// d_a(p,q) = (sum p)(sum q)
inline CommutationFactor eps_a(std::size_t n) { return {"eps_a", Scalar(-1), square(n, 1)}; }

/// d_a'(p,q) = sum p(i) q(i)
inline CommutationFactor eps_a_prime(std::size_t n) {
  auto b = square(n);
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return {"eps_a'", Scalar(-1), std::move(b)};
}

/// d_c = 0
inline CommutationFactor eps_c(std::size_t n) { return {"eps_c", Scalar(-1), square(n)}; }

/// d_c'(p,q) = sum_{i != j} p(i) q(j)
inline CommutationFactor eps_c_prime(std::size_t n) {
  auto b = square(n, 1);
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 0;
  return {"eps_c'", Scalar(-1), std::move(b)};
}

/// eps_q((k,l),(m,n)) = q^{lm - kn} on Z^2.
inline CommutationFactor eps_q(const Scalar& q) {
  return {"eps_q:" + q.str(), q, {{0, -1}, {1, 0}}};
}

/// eps((k,l),(m,n)) = (-1)^{kn + lm} on (Z/2)^2.
inline CommutationFactor counterexample() {
  return {"counterexample", Scalar(-1), {{0, 1}, {1, 0}}, {2, 2}};
}

inline CommutationFactor trivial(std::size_t n, std::vector<long> moduli = {}) {
  return {"trivial", Scalar(1), square(n), std::move(moduli)};
}

}  // namespace factors

/// Checks the commutation-factor axioms on all pairs of `samples` and on triples drawn from
/// the first `triple_limit` samples. One failed check per violated instance, one passing
/// summary check per axiom that held everywhere.
inline Report verify_factor_axioms(const CommutationFactor& f, const std::vector<Grade>& samples,
                                   std::size_t triple_limit = 16) {
  Report report("factor");
  std::size_t bad_inverse = 0, bad_first = 0, bad_second = 0, bad_parity = 0;

  if (!f.well_defined()) {
    report.add("well-defined", false, "base^(m*B) != 1 for a coordinate of modulus m");
  }

  auto parity_of = [&](const Grade& g) -> int {
    const Scalar e = f(g, g);
    if (e == Scalar(1)) return 0;
    if (e == Scalar(-1)) return 1;
    return -1;
  };

  for (const auto& g : samples) {
    for (const auto& k : samples) {
      if (!(f(g, k) * f(k, g)).is_one()) {
        ++bad_inverse;
        report.add("axiom1 " + g.str() + " " + k.str(), false,
                   "eps(g,k)eps(k,g) = " + (f(g, k) * f(k, g)).str());
      }
      const int pg = parity_of(g), pk = parity_of(k), ps = parity_of(g + k);
      if (pg < 0 || pk < 0 || ps < 0 || ps != (pg + pk) % 2) {
        ++bad_parity;
        report.add("parity " + g.str() + " " + k.str(), false,
                   pg < 0 || pk < 0 || ps < 0 ? "eps(g,g) not +-1" : "parity not additive");
      }
    }
  }
  const std::size_t t = std::min(triple_limit, samples.size());
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      for (std::size_t c = 0; c < t; ++c) {
        const Grade &g = samples[a], &g2 = samples[b], &k = samples[c];
        if (f(g + g2, k) != f(g, k) * f(g2, k)) {
          ++bad_first;
          report.add("axiom2 " + g.str() + " " + g2.str() + " " + k.str(), false, "eps(g+g',k) != eps(g,k)eps(g',k)");
        }
        if (f(k, g + g2) != f(k, g) * f(k, g2)) {
          ++bad_second;
          report.add("bilinear2 " + k.str() + " " + g.str() + " " + g2.str(), false,
                     "eps(k,g+g') != eps(k,g)eps(k,g')");
        }
      }
    }
  }
  if (bad_inverse == 0) report.add("axiom1", true, std::to_string(samples.size() * samples.size()) + " pairs");
  if (bad_first == 0) report.add("axiom2", true, std::to_string(t * t * t) + " triples");
  if (bad_second == 0) report.add("bilinear2", true, std::to_string(t * t * t) + " triples");
  if (bad_parity == 0) report.add("parity-additive", true, std::to_string(samples.size() * samples.size()) + " pairs");
  return report;
}

}  // namespace epsalg
