#pragma once

// Independent reference computations used by the tests. None of them calls the rewrite
// engine, the deformation expansion or the bracket code.

#include <map>
#include <vector>

#include "epsalg/epsalg.hpp"

namespace oracle {

using epsalg::Element;
using epsalg::HPoly;
using epsalg::Rule;
using epsalg::Scalar;
using epsalg::Word;

/// Rewrites the first occurrence found by scanning rules in order and positions left to
/// right, restarting after every step, until no left side occurs anywhere.
inline Element brute_force_normalize(const std::vector<Rule>& rules, const Element& x, std::size_t max_steps = 200000) {
  std::map<Word, HPoly> terms;
  for (const auto& [w, c] : x.terms()) terms[w] = c;
  for (std::size_t step = 0; step < max_steps; ++step) {
    bool rewrote = false;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      const Word w = it->first;
      const HPoly c = it->second;
      for (const Rule& r : rules) {
        if (r.lhs.size() > w.size()) continue;
        for (std::size_t p = 0; p + r.lhs.size() <= w.size(); ++p) {
          if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(p))) continue;
          terms.erase(w);
          const Word pre(w.begin(), w.begin() + static_cast<long>(p));
          const Word post(w.begin() + static_cast<long>(p + r.lhs.size()), w.end());
          for (const auto& [v, d] : r.rhs.terms()) {
            Word img = pre;
            img.insert(img.end(), v.begin(), v.end());
            img.insert(img.end(), post.begin(), post.end());
            HPoly& slot = terms[img];
            slot += c * d;
            if (slot.is_zero()) terms.erase(img);
          }
          rewrote = true;
          break;
        }
        if (rewrote) break;
      }
      if (rewrote) break;
    }
    if (!rewrote) {
      Element out;
      for (const auto& [w, c] : terms) out.add_term(w, c);
      return out;
    }
  }
  throw std::runtime_error("brute-force normalization did not terminate");
}

/// All words of length <= max_len over `letters` letters containing no rule left side.
inline std::vector<Word> naive_basis(std::size_t letters, const std::vector<Rule>& rules, std::size_t max_len) {
  std::vector<Word> all{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t l = 0; l < letters; ++l) {
        Word e = w;
        e.push_back(static_cast<epsalg::Letter>(l));
        next.push_back(e);
      }
    }
    layer = next;
    all.insert(all.end(), next.begin(), next.end());
  }
  std::vector<Word> out;
  for (const Word& w : all) {
    bool ok = true;
    for (const Rule& r : rules) {
      if (std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end()) != w.end()) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Commutative polynomials in K[h] over 2n variables (creators 0..n-1, annihilators n..2n-1),
/// used both for the bosonic Fock representation and for classical brackets.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, HPoly>;

inline void poly_add(Poly& p, const Exponents& e, const HPoly& c) {
  HPoly& slot = p[e];
  slot += c;
  if (slot.is_zero()) p.erase(e);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      poly_add(out, e, ca * cb);
    }
  }
  return out;
}

inline Poly poly_derivative(const Poly& p, std::size_t var) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    poly_add(out, d, HPoly(e[var]) * c);
  }
  return out;
}

/// Bosonic Fock-space action on K[h][x_1..x_n]: ad_i = x_i, a_i = h d/dx_i. Faithful on the
/// normally ordered basis, so two elements are equal iff they act equally on enough monomials.
inline Poly fock_apply_word(const epsalg::NoaLayout& L, const Word& w, Poly state) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    for (unsigned i = 0; i < L.n; ++i) {
      if (*it == L.cre(i)) {
        Poly next;
        for (const auto& [e, c] : state) {
          Exponents f = e;
          ++f[i];
          poly_add(next, f, c);
        }
        state = next;
      } else if (*it == L.ann(i)) {
        Poly next;
        for (const auto& [e, c] : poly_derivative(state, i)) poly_add(next, e, HPoly::h() * c);
        state = next;
      }
    }
  }
  return state;
}

inline Poly fock_apply(const epsalg::NoaLayout& L, const Element& x, const Poly& state) {
  Poly out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [e, d] : fock_apply_word(L, w, state)) poly_add(out, e, c * d);
  }
  return out;
}

/// Normal ordering of a_i^k ad_i^l in the boson algebra:
/// sum_j C(k,j) C(l,j) j! h^j ad_i^{l-j} a_i^{k-j}.
inline Element wick_single_mode(const epsalg::NoaLayout& L, unsigned i, int k, int l) {
  Element out;
  long binom_k = 1, binom_l = 1, fact = 1;
  for (int j = 0; j <= std::min(k, l); ++j) {
    if (j > 0) {
      binom_k = binom_k * (k - j + 1) / j;
      binom_l = binom_l * (l - j + 1) / j;
      fact *= j;
    }
    Word w(static_cast<std::size_t>(l - j), L.cre(i));
    w.insert(w.end(), static_cast<std::size_t>(k - j), L.ann(i));
    out.add_term(w, HPoly::monomial(Scalar(binom_k * binom_l * fact), static_cast<std::size_t>(j)));
  }
  return out;
}

/// Commutative polynomial of a classical boson element (variables ordered creators, annihilators).
inline Poly to_poly(const epsalg::NoaLayout& L, const Element& x) {
  Poly out;
  for (const auto& [w, c] : x.terms()) {
    Exponents e(2 * L.n, 0);
    for (auto l : w) {
      for (unsigned i = 0; i < L.n; ++i) {
        if (l == L.cre(i)) ++e[i];
        if (l == L.ann(i)) ++e[L.n + i];
      }
    }
    poly_add(out, e, c);
  }
  return out;
}

/// {f,g} = sum_i df/da_i dg/dad_i - df/dad_i dg/da_i on the classical boson algebra.
inline Poly classical_boson_bracket(const epsalg::NoaLayout& L, const Poly& f, const Poly& g) {
  Poly out;
  for (unsigned i = 0; i < L.n; ++i) {
    for (const auto& [e, c] : poly_mul(poly_derivative(f, L.n + i), poly_derivative(g, i))) poly_add(out, e, c);
    for (const auto& [e, c] : poly_mul(poly_derivative(f, i), poly_derivative(g, L.n + i))) poly_add(out, e, -c);
  }
  return out;
}

/// Normal form of a word of distinct-or-repeated generators in the classical exterior algebra:
/// 0 on a repeat, otherwise the sign of the sorting permutation times the sorted word.
inline Element exterior_normal_form(const Word& w) {
  Word sorted = w;
  long sign = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j) {
      if (sorted[j] == sorted[j + 1]) return Element();
      if (sorted[j] > sorted[j + 1]) {
        std::swap(sorted[j], sorted[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
    if (sorted[j] == sorted[j + 1]) return Element();
  }
  return Element::word(sorted, HPoly(sign));
}

}  // namespace oracle
