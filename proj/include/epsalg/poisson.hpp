#pragma once

// Epsilon-commutators, epsilon-centre membership, the epsilon-Poisson bracket of a classical
// limit, verifiers for the epsilon-Lie and epsilon-Poisson axioms, and the oscillator table.

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "epsalg/deformation.hpp"
#include "epsalg/presets.hpp"
#include "epsalg/report.hpp"

namespace epsalg {

/// [x,y]_eps = xy - eps(x,y) yx on homogeneous components, extended bilinearly, normalized.
inline Element epsilon_commutator(const Algebra& alg, const CommutationFactor& f, const Element& x,
                                  const Element& y) {
  Element raw;
  const auto xs = homogeneous_components(alg.alphabet(), x);
  const auto ys = homogeneous_components(alg.alphabet(), y);
  for (const auto& [g, xg] : xs) {
    for (const auto& [k, yk] : ys) raw += xg * yk - HPoly(f(g, k)) * (yk * xg);
  }
  return alg.normalize(raw);
}

inline Element epsilon_commutator(const Algebra& alg, const Element& x, const Element& y) {
  return epsilon_commutator(alg, alg.factor(), x, y);
}

/// [x, g]_eps = 0 for every generator g.
inline bool in_epsilon_center(const Algebra& alg, const CommutationFactor& f, const Element& x) {
  for (std::size_t l = 0; l < alg.alphabet().size(); ++l) {
    const Element g = Element::word({static_cast<Letter>(l)});
    if (!epsilon_commutator(alg, f, x, g).is_zero()) return false;
  }
  return true;
}

inline bool in_epsilon_center(const Algebra& alg, const Element& x) { return in_epsilon_center(alg, alg.factor(), x); }

/// {x,y}_eps = mu_1(x,y) - eps(x,y) mu_1(y,x) on homogeneous components; x, y are
/// classical elements (normalized in B^0 before use).
inline Element poisson_bracket(const DeformationExpansion& exp, const CommutationFactor& f, const Element& x,
                               const Element& y) {
  const Algebra& cl = exp.classical();
  const auto xs = homogeneous_components(cl.alphabet(), cl.normalize(x));
  const auto ys = homogeneous_components(cl.alphabet(), cl.normalize(y));
  Element out;
  for (const auto& [g, xg] : xs) {
    for (const auto& [k, yk] : ys) {
      out += exp.mu(xg, yk, 1) - HPoly(f(g, k)) * exp.mu(yk, xg, 1);
    }
  }
  return out;
}

inline Element poisson_bracket(const DeformationExpansion& exp, const Element& x, const Element& y) {
  return poisson_bracket(exp, exp.classical().factor(), x, y);
}

using Bracket = std::function<Element(const Element&, const Element&)>;

struct HomogeneousTriple {
  Element x, y, z;
};

namespace detail {

inline Grade require_grade(const Alphabet& a, const Element& x) {
  auto g = grade_of(a, x);
  if (!g) throw InvalidArgument("axiom samples must be homogeneous");
  return *g;
}

}  // namespace detail

/// eps-antisymmetry and eps-Jacobi of `bracket` on each triple; both identities are
/// normalized in `alg` before comparing with zero.
inline Report verify_lie_axioms(const Algebra& alg, const CommutationFactor& f, const Bracket& bracket,
                                const std::vector<HomogeneousTriple>& samples, std::string suite = "lie") {
  Report report(std::move(suite));
  const Alphabet& a = alg.alphabet();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& [x, y, z] = samples[s];
    const Grade gx = detail::require_grade(a, x), gy = detail::require_grade(a, y), gz = detail::require_grade(a, z);
    const std::string id = "#" + std::to_string(s);

    const Element anti = alg.normalize(bracket(x, y) + HPoly(f(gx, gy)) * bracket(y, x));
    report.add("antisymmetry " + id, anti.is_zero(),
               anti.is_zero() ? "" : "x=" + alg.format(x) + " y=" + alg.format(y) + " residual " + alg.format(anti));

    const Element jac = alg.normalize(HPoly(f(gz, gx)) * bracket(x, bracket(y, z)) +
                                      HPoly(f(gy, gz)) * bracket(z, bracket(x, y)) +
                                      HPoly(f(gx, gy)) * bracket(y, bracket(z, x)));
    report.add("jacobi " + id, jac.is_zero(),
               jac.is_zero() ? ""
                             : "x=" + alg.format(x) + " y=" + alg.format(y) + " z=" + alg.format(z) + " residual " +
                                   alg.format(jac));
  }
  return report;
}

/// eps-Lie axioms plus the eps-Leibniz rule {x,yz} = {x,y}z + eps(x,y) y{x,z}, products in B^0.
inline Report verify_poisson_axioms(const DeformationExpansion& exp, const CommutationFactor& f,
                                    const std::vector<HomogeneousTriple>& samples) {
  const Algebra& cl = exp.classical();
  const Bracket pb = [&](const Element& u, const Element& v) { return poisson_bracket(exp, f, u, v); };
  Report report = verify_lie_axioms(cl, f, pb, samples, "poisson");
  const Alphabet& a = cl.alphabet();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& [x, y, z] = samples[s];
    const Grade gx = detail::require_grade(a, x), gy = detail::require_grade(a, y);
    const Element yz = cl.normalize(y * z);
    const Element lhs = pb(x, yz);
    const Element rhs = cl.normalize(pb(x, y) * z + HPoly(f(gx, gy)) * (y * pb(x, z)));
    const Element diff = cl.normalize(lhs - rhs);
    report.add("leibniz #" + std::to_string(s), diff.is_zero(),
               diff.is_zero() ? ""
                              : "x=" + cl.format(x) + " y=" + cl.format(y) + " z=" + cl.format(z) + " residual " +
                                    cl.format(diff));
  }
  return report;
}

/// Oscillator observables p_i = (a_i + ad_i)/sqrt2, q_i = (ad_i - a_i)/(i sqrt2), H_i = ad_i a_i.
struct OscillatorSet {
  std::vector<Element> p, q, H;
};

inline OscillatorSet oscillators(const Algebra& alg) {
  const NoaLayout& L = alg.noa() ? *alg.noa() : throw InvalidArgument(alg.name() + " has no oscillator modes");
  OscillatorSet out;
  const HPoly inv_r2(Scalar(0, 0, Rational(1, 2), 0));               // 1/sqrt2
  const HPoly inv_ir2(Scalar(0, 0, 0, Rational(-1, 2)));             // 1/(i sqrt2) = -i sqrt2 / 2
  for (unsigned i = 0; i < L.n; ++i) {
    const Element a = Element::word({L.ann(i)});
    const Element ad = Element::word({L.cre(i)});
    out.p.push_back(inv_r2 * (a + ad));
    out.q.push_back(inv_ir2 * (ad - a));
    out.H.push_back(Element::word({L.cre(i), L.ann(i)}));
  }
  return out;
}

struct OscillatorTable {
  Report report{"oscillator"};
  /// {p_i, q_i} = c, {H_i, p_i} = c' q_i when those hold with a single scalar; empty otherwise.
  std::optional<Scalar> c;
  std::optional<Scalar> c_prime;
};

namespace detail {

/// The scalar s with x = s * y, if any.
inline std::optional<Scalar> proportionality(const Element& x, const Element& y) {
  if (y.is_zero()) return std::nullopt;
  const auto& [w, cy] = *y.terms().begin();
  if (!cy.is_constant()) return std::nullopt;
  const HPoly& cx = x.coefficient(w);
  if (!cx.is_constant()) return std::nullopt;
  const Scalar s = cx.constant_term() / cy.constant_term();
  if (HPoly(s) * y != x) return std::nullopt;
  return s;
}

inline bool is_unit_constant(const Scalar& s) {
  return s == Scalar(1) || s == Scalar(-1) || s == Scalar::imag() || s == -Scalar::imag();
}

}  // namespace detail

/// Computes {p_i,p_j}, {q_i,q_j}, {p_i,q_j}, {H_i,p_j}, {H_i,q_j} exactly and checks them
/// against 0, c delta_ij, c' delta_ij q_j, -c' delta_ij p_j with c, c' in {+-1, +-i}.
inline OscillatorTable oscillator_table(const DeformationExpansion& exp, const CommutationFactor& f) {
  const Algebra& cl = exp.classical();
  const OscillatorSet os = oscillators(cl);
  const std::size_t n = os.p.size();
  OscillatorTable t;
  auto pb = [&](const Element& u, const Element& v) { return poisson_bracket(exp, f, u, v); };
  auto ij = [](std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };

  t.c = detail::proportionality(pb(os.p[0], os.q[0]), Element::one());
  t.c_prime = detail::proportionality(pb(os.H[0], os.p[0]), os.q[0]);
  const std::string cs = t.c ? t.c->str() : "none";
  const std::string cps = t.c_prime ? t.c_prime->str() : "none";
  t.report.add("constant c", t.c && detail::is_unit_constant(*t.c), "c = " + cs);
  t.report.add("constant c'", t.c_prime && detail::is_unit_constant(*t.c_prime), "c' = " + cps);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element pp = pb(os.p[i], os.p[j]);
      t.report.add("{p,p} " + ij(i, j), pp.is_zero(), cl.format(pp));
      const Element qq = pb(os.q[i], os.q[j]);
      t.report.add("{q,q} " + ij(i, j), qq.is_zero(), cl.format(qq));

      const HPoly delta(i == j ? 1 : 0);
      const Element pq = pb(os.p[i], os.q[j]);
      const bool pq_ok = t.c && pq == (delta * HPoly(*t.c)) * Element::one();
      t.report.add("{p,q} " + ij(i, j), pq_ok, cl.format(pq));

      const Element hp = pb(os.H[i], os.p[j]);
      const bool hp_ok = t.c_prime && hp == (delta * HPoly(*t.c_prime)) * os.q[j];
      t.report.add("{H,p} " + ij(i, j), hp_ok, cl.format(hp));

      const Element hq = pb(os.H[i], os.q[j]);
      const bool hq_ok = t.c_prime && hq == (-(delta * HPoly(*t.c_prime))) * os.p[j];
      t.report.add("{H,q} " + ij(i, j), hq_ok, cl.format(hq));
    }
  }
  return t;
}

}  // namespace epsalg
