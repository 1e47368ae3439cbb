#pragma once

// Words and finite linear combinations in a free algebra K[h]<X> over a graded alphabet.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/grading.hpp"
#include "epsalg/scalar.hpp"

namespace epsalg {

/// Index of a generator in its Alphabet. Smaller ids precede larger ones in every word order.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Degree-lexicographic order: shorter words first, then lexicographic by letter id.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

struct Generator {
  std::string name;
  std::optional<unsigned> index;
  Grade grade;

  /// Printed and parsed form: `a1`, `ad2`, `x`.
  std::string label() const { return index ? name + std::to_string(*index) : name; }
};

/// Ordered generator set. The listed order is the generator precedence used by word orders.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw InvalidArgument("alphabet must contain at least one generator");
    if (gens_.size() > 0xFFFF) throw InvalidArgument("too many generators");
    zero_ = Grade::zero(gens_.front().grade.dim(), gens_.front().grade.moduli());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const auto& g = gens_[k];
      if (g.grade.dim() != zero_.dim() || g.grade.moduli() != zero_.moduli()) {
        throw GradeMismatch("generator " + g.label() + " has a grade of a different shape");
      }
      if (!by_label_.emplace(g.label(), static_cast<Letter>(k)).second) {
        throw InvalidArgument("duplicate generator label '" + g.label() + "'");
      }
    }
  }

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](Letter l) const { return gens_.at(l); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Grade& zero_grade() const { return zero_; }

  std::optional<Letter> find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }
  Letter letter(std::string_view label) const {
    auto l = find(label);
    if (!l) throw InvalidArgument("unknown generator '" + std::string(label) + "'");
    return *l;
  }

  Grade grade(const Word& w) const {
    Grade g = zero_;
    for (Letter l : w) g += gens_.at(l).grade;
    return g;
  }

  /// Juxtaposition with `*`; runs of one letter collapse to powers (`ad1^2*a1`). Empty word -> "".
  std::string format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += "*";
      out += gens_.at(w[i]).label();
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, Letter> by_label_;
  Grade zero_;
};

/// Finite K[h]-linear combination of words. No zero coefficient is ever stored.
class Element {
 public:
  using Terms = std::map<Word, HPoly, DegLexLess>;

  Element() = default;

  static Element scalar(const HPoly& c) { return word({}, c); }
  static Element one() { return scalar(HPoly(1)); }
  static Element word(Word w, const HPoly& c = HPoly(1)) {
    Element e;
    e.add_term(w, c);
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const HPoly& coefficient(const Word& w) const {
    static const HPoly zero;
    auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
  }

  void add_term(const Word& w, const HPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
  }

  friend Element operator*(const HPoly& s, const Element& x) {
    Element r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
    return r;
  }

  /// Bilinear extension of concatenation.
  friend Element operator*(const Element& x, const Element& y) {
    Element r;
    for (const auto& [u, a] : x.terms_) {
      for (const auto& [v, b] : y.terms_) r.add_term(concat(u, v), a * b);
    }
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Coefficient of h^n, as an element with constant coefficients.
  Element h_coefficient(std::size_t n) const {
    Element r;
    for (const auto& [w, c] : terms_) r.add_term(w, HPoly(c.coeff(n)));
    return r;
  }

  Element substitute_h(const Scalar& v) const {
    Element r;
    for (const auto& [w, c] : terms_) r.add_term(w, HPoly(c.substitute(v)));
    return r;
  }

  long max_h_degree() const {
    long d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
    return d;
  }

  bool has_constant_coefficients() const { return max_h_degree() <= 0; }

 private:
  Terms terms_;
};

inline Element multiply(const Element& x, const Element& y) { return x * y; }

/// Common grade of all words of `x`; the zero grade for x = 0; nullopt when inhomogeneous.
inline std::optional<Grade> grade_of(const Alphabet& alphabet, const Element& x) {
  std::optional<Grade> g;
  for (const auto& [w, c] : x.terms()) {
    Grade gw = alphabet.grade(w);
    if (g && *g != gw) return std::nullopt;
    g = std::move(gw);
  }
  return g ? g : std::optional<Grade>(alphabet.zero_grade());
}

inline std::map<Grade, Element> homogeneous_components(const Alphabet& alphabet, const Element& x) {
  std::map<Grade, Element> out;
  for (const auto& [w, c] : x.terms()) out[alphabet.grade(w)].add_term(w, c);
  return out;
}

/// Canonical text: terms in descending word order, then descending powers of h.
inline std::string format(const Alphabet& alphabet, const Element& x) {
  std::vector<detail::Monomial> monomials;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    it->second.append_monomials(monomials, alphabet.format(it->first));
  }
  return detail::join_monomials(monomials);
}

}  // namespace epsalg
