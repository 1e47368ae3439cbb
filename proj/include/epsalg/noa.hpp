#pragma once

// Structure maps of number operator algebras: h-scaled number operators, the
// anti-involution J, the permutation action sigma*, and the rescalings phi_lambda.

#include <numeric>
#include <string>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/presets.hpp"
#include "epsalg/report.hpp"

namespace epsalg {

inline const NoaLayout& require_noa(const Algebra& alg) {
  if (!alg.noa()) throw InvalidArgument(alg.name() + " is not a number operator algebra");
  return *alg.noa();
}

/// h N_i: ad_i a_i, or -a_i ad_i for excl-dual (0-based i). In excl-dual, ad_i a_i fails
/// [hN_i, ad_j] = 0 for i != j and a_i ad_i has the opposite sign.
inline Element scaled_number_operator(const Algebra& alg, unsigned i) {
  const NoaLayout& L = require_noa(alg);
  if (L.family == Family::ExclDual) return Element::word({L.ann(i), L.cre(i)}, HPoly(-1));
  return Element::word({L.cre(i), L.ann(i)});
}

/// Checks [hN_i, ad_j] = delta_ij h ad_j and [hN_i, a_j] = -delta_ij h a_j (plain commutator,
/// 1-based i, j) by normalizing the differences.
inline Report number_operator_check(const Algebra& alg, unsigned i, unsigned j) {
  const NoaLayout& L = require_noa(alg);
  if (i < 1 || j < 1 || i > L.n || j > L.n) throw InvalidArgument("mode index out of range");
  Report report("noa");
  const Element hn = scaled_number_operator(alg, i - 1);
  const Element h = Element::scalar(alg.parameter());
  const Element cre = Element::word({L.cre(j - 1)});
  const Element ann = Element::word({L.ann(j - 1)});
  const HPoly delta(i == j ? 1 : 0);
  const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";

  const Element r1 = alg.normalize(hn * cre - cre * hn - delta * (h * cre));
  report.add("[N_i,ad_j] " + tag, r1.is_zero(), r1.is_zero() ? "" : "residual " + alg.format(r1));
  const Element r2 = alg.normalize(hn * ann - ann * hn + delta * (h * ann));
  report.add("[N_i,a_j] " + tag, r2.is_zero(), r2.is_zero() ? "" : "residual " + alg.format(r2));
  return report;
}

inline Report number_operator_suite(const Algebra& alg) {
  const NoaLayout& L = require_noa(alg);
  Report report("noa");
  for (unsigned i = 1; i <= L.n; ++i) {
    for (unsigned j = 1; j <= L.n; ++j) report.merge(number_operator_check(alg, i, j));
  }
  return report;
}

/// Letter image of J: a_i <-> ad_i.
inline std::vector<Letter> j_letter_map(const NoaLayout& L) {
  std::vector<Letter> map(L.creators.size() + L.annihilators.size());
  for (unsigned i = 0; i < L.n; ++i) {
    map[L.cre(i)] = L.ann(i);
    map[L.ann(i)] = L.cre(i);
  }
  return map;
}

/// Anti-linear anti-homomorphism: reverses words, swaps a_i and ad_i, applies tau to coefficients.
inline Element apply_J(const Algebra& alg, const Element& x) {
  const auto map = j_letter_map(require_noa(alg));
  Element out;
  for (const auto& [w, c] : x.terms()) {
    Word img(w.rbegin(), w.rend());
    for (auto& l : img) l = map[l];
    out.add_term(img, tau(c));
  }
  return out;
}

/// J sends every defining relation into the ideal.
inline Report verify_J_well_defined(const Algebra& alg) {
  Report report("J");
  for (const Element& r : alg.relations()) {
    const Element img = alg.normalize(apply_J(alg, r));
    report.add("J(" + alg.format(r) + ")", img.is_zero(), img.is_zero() ? "" : "residual " + alg.format(img));
  }
  return report;
}

/// sigma* for a permutation given as 0-based images perm[i] = sigma(i).
inline Element apply_sigma(const Algebra& alg, const std::vector<unsigned>& perm, const Element& x) {
  const NoaLayout& L = require_noa(alg);
  if (perm.size() != L.n) throw InvalidArgument("permutation size does not match the number of modes");
  std::vector<bool> seen(L.n, false);
  for (unsigned p : perm) {
    if (p >= L.n || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  std::vector<Letter> map(alg.alphabet().size());
  for (unsigned i = 0; i < L.n; ++i) {
    map[L.cre(i)] = L.cre(perm[i]);
    map[L.ann(i)] = L.ann(perm[i]);
  }
  Element out;
  for (const auto& [w, c] : x.terms()) {
    Word img = w;
    for (auto& l : img) l = map[l];
    out.add_term(img, c);
  }
  return out;
}

/// sigma* maps every defining relation into the ideal.
inline Report verify_sigma(const Algebra& alg, const std::vector<unsigned>& perm) {
  Report report("sigma");
  for (const Element& r : alg.relations()) {
    const Element img = alg.normalize(apply_sigma(alg, perm, r));
    report.add("sigma(" + alg.format(r) + ")", img.is_zero(), img.is_zero() ? "" : "residual " + alg.format(img));
  }
  return report;
}

/// phi_lambda: a_i -> lambda a_i', ad_i -> tau(lambda) ad_i' between two algebras of one
/// family. It sends relations to relations exactly when the source parameter equals
/// lambda tau(lambda) times the target parameter.
class RescalingMap {
 public:
  RescalingMap(Scalar lambda, const Algebra& source, const Algebra& target)
      : lambda_(std::move(lambda)), source_(source), target_(target) {
    const NoaLayout& s = require_noa(source);
    const NoaLayout& t = require_noa(target);
    if (s.family != t.family || s.n != t.n) throw InvalidArgument("rescaling needs two algebras of one family");
    if (lambda_.is_zero()) throw InvalidArgument("rescaling factor must be nonzero");
    const HPoly norm(lambda_ * tau(lambda_));
    if (source.parameter() != norm * target.parameter()) {
      throw InvalidArgument("rescaling by " + lambda_.str() + " needs source parameter " +
                            (norm * target.parameter()).str() + ", got " + source.parameter().str());
    }
  }

  const Scalar& lambda() const { return lambda_; }

  Element apply(const Element& x) const {
    const NoaLayout& s = *source_.noa();
    const NoaLayout& t = *target_.noa();
    std::vector<Letter> map(source_.alphabet().size());
    std::vector<Scalar> factor(source_.alphabet().size());
    for (unsigned i = 0; i < s.n; ++i) {
      map[s.ann(i)] = t.ann(i);
      factor[s.ann(i)] = lambda_;
      map[s.cre(i)] = t.cre(i);
      factor[s.cre(i)] = tau(lambda_);
    }
    Element out;
    for (const auto& [w, c] : x.terms()) {
      Word img = w;
      Scalar f(1);
      for (auto& l : img) {
        f *= factor[l];
        l = map[l];
      }
      out.add_term(img, HPoly(f) * c);
    }
    return out;
  }

  Report verify() const {
    Report report("phi");
    for (const Element& r : source_.relations()) {
      const Element img = target_.normalize(apply(r));
      report.add("phi(" + source_.format(r) + ")", img.is_zero(),
                 img.is_zero() ? "" : "residual " + target_.format(img));
    }
    return report;
  }

 private:
  Scalar lambda_;
  Algebra source_;
  Algebra target_;
};

inline Element apply_phi(const RescalingMap& map, const Element& x) { return map.apply(x); }

}  // namespace epsalg
