#pragma once

// Seeded random homogeneous elements in the irreducible-word basis of an algebra.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "epsalg/poisson.hpp"
#include "epsalg/presets.hpp"

namespace epsalg {

class Sampler {
 public:
  Sampler(const Algebra& alg, std::size_t max_len, std::uint64_t seed) : alphabet_(alg.alphabet_ptr()), rng_(seed) {
    basis_ = alg.system().enumerate_basis(max_len);
    for (const Word& w : basis_) by_grade_[alg.alphabet().grade(w)].push_back(w);
  }

  const std::vector<Word>& basis() const { return basis_; }

  Word random_basis_word() { return basis_[pick(basis_.size())]; }

  /// Up to three basis words sharing one grade, with small coefficients in K (and powers
  /// of h when `allow_h`).
  Element random_homogeneous(bool allow_h = false) {
    const Word seed_word = random_basis_word();
    const auto& same = by_grade_.at(alphabet_->grade(seed_word));
    Element out = Element::word(seed_word, coefficient(allow_h));
    const std::size_t extra = pick(3);
    for (std::size_t k = 0; k < extra; ++k) out += Element::word(same[pick(same.size())], coefficient(allow_h));
    return out.is_zero() ? Element::word(seed_word) : out;
  }

  HomogeneousTriple random_triple(bool allow_h = false) {
    HomogeneousTriple t;
    t.x = random_homogeneous(allow_h);
    t.y = random_homogeneous(allow_h);
    t.z = random_homogeneous(allow_h);
    return t;
  }

  std::vector<HomogeneousTriple> triples(std::size_t count, bool allow_h = false) {
    std::vector<HomogeneousTriple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_triple(allow_h));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  HPoly coefficient(bool allow_h) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    if (r == 0) r = 1;
    Scalar s(r);
    switch (pick(4)) {
      case 1: s = s * Scalar::imag(); break;
      case 2: s = s * Scalar::sqrt2(); break;
      default: break;
    }
    HPoly c(s);
    if (allow_h && pick(3) == 0) c = c * HPoly::monomial(Scalar(1), 1 + pick(2));
    return c;
  }

  std::shared_ptr<const Alphabet> alphabet_;
  std::mt19937_64 rng_;
  std::vector<Word> basis_;
  std::map<Grade, std::vector<Word>> by_grade_;
};

}  // namespace epsalg
