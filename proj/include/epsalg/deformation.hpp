#pragma once

// The quantum algebra B^h read as a formal deformation of its classical limit B^0:
// the product of two basis words, normalized in B^h, is a polynomial sum_n mu_n(x,y) h^n.

#include <string>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/presets.hpp"

namespace epsalg {

class DeformationExpansion {
 public:
  /// `quantum` must use h itself as its parameter. Both algebras share their left sides,
  /// hence their irreducible words, which identifies the two underlying spaces.
  explicit DeformationExpansion(Algebra quantum)
      : quantum_(std::move(quantum)), classical_(classical_limit(quantum_)) {
    if (quantum_.parameter() != HPoly::h()) {
      throw InvalidArgument("deformation expansion needs the presentation with parameter h");
    }
  }

  const Algebra& quantum() const { return quantum_; }
  const Algebra& classical() const { return classical_; }

  /// Compares the irreducible words of B^h and B^0 up to `max_len`.
  bool bases_identified(std::size_t max_len) const {
    return quantum_.system().enumerate_basis(max_len) == classical_.system().enumerate_basis(max_len);
  }

  /// Coefficients mu_0 .. mu_d of the normalized quantum product; x, y in the basis.
  std::vector<Element> mu_all(const Element& x, const Element& y) const {
    check_basis_element(x);
    check_basis_element(y);
    const Element prod = quantum_.normalize(x * y);
    std::vector<Element> out;
    for (long n = 0; n <= prod.max_h_degree(); ++n) out.push_back(prod.h_coefficient(static_cast<std::size_t>(n)));
    return out;
  }

  Element mu(const Element& x, const Element& y, std::size_t n) const {
    check_basis_element(x);
    check_basis_element(y);
    return quantum_.normalize(x * y).h_coefficient(n);
  }

  /// sum_{p+q=n} mu_p(mu_q(x,y), z) - mu_p(x, mu_q(y,z)); zero for an associative deformation.
  Element identity_residual(const Element& x, const Element& y, const Element& z, std::size_t n) const {
    const auto left = mu_all(x, y);
    const auto right = mu_all(y, z);
    Element residual;
    for (std::size_t q = 0; q <= n; ++q) {
      const std::size_t p = n - q;
      if (q < left.size()) residual += mu(left[q], z, p);
      if (q < right.size()) residual -= mu(x, right[q], p);
    }
    return residual;
  }

 private:
  void check_basis_element(const Element& x) const {
    for (const auto& [w, c] : x.terms()) {
      if (!c.is_constant()) {
        throw InvalidArgument("deformation coefficients act on h-free elements, got " + quantum_.format(x));
      }
      if (!quantum_.system().is_irreducible(w)) {
        throw InvalidArgument("element is not written in the irreducible-word basis: " + quantum_.format(x));
      }
    }
  }

  Algebra quantum_;
  Algebra classical_;
};

inline Element mu_n(const DeformationExpansion& exp, const Element& x, const Element& y, std::size_t n) {
  return exp.mu(x, y, n);
}

inline Element check_deformation_identity(const DeformationExpansion& exp, const Element& x, const Element& y,
                                          const Element& z, std::size_t n) {
  return exp.identity_residual(x, y, z, n);
}

inline Algebra fix_parameter(const DeformationExpansion& exp, const Scalar& v) {
  return fix_parameter(exp.quantum(), v);
}

}  // namespace epsalg
