#pragma once
// Polynomial 1-forms A dx + B dy and their weighted initial parts.

#include <string>

#include "jc/bipoly.hpp"

namespace jc {

struct OneForm {
  BiPoly A, B;

  bool is_zero() const { return A.is_zero() && B.is_zero(); }
  // Lowest degree of the coefficients (nu_0); -1 for the zero form.
  int order() const;
  // Remove the common monomial factor x^a y^b of A and B.
  OneForm saturated(Exp* removed = nullptr) const;
  // Pull back by (u, v) -> (u^n, v): A(u^n, v) n u^(n-1) du + B(u^n, v) dv.
  OneForm ramify(unsigned n) const;
  // Pull back by y -> y + eps(x).
  OneForm shift_y(const UPoly& eps) const;
  std::string str() const;
};

OneForm exterior_derivative(const BiPoly& f);
// J with omega ^ eta = J dx ^ dy.
BiPoly wedge(const OneForm& omega, const OneForm& eta);

// Initial part for the weight x -> 1, y -> p: an A-term x^a y^b has weight
// (a + 1) + p b and a B-term has weight a + p (b + 1).
struct InitialForm {
  OneForm form;
  mpq_class nu;
};
InitialForm initial_form(const OneForm& omega, const mpq_class& p);

}  // namespace jc
