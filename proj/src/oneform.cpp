#include "jc/oneform.hpp"

#include <algorithm>

namespace jc {

int OneForm::order() const {
  int a = A.order(), b = B.order();
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

OneForm OneForm::saturated(Exp* removed) const {
  if (is_zero()) throw MathError("zero 1-form");
  Exp ca = A.monomial_content(), cb = B.monomial_content();
  Exp c;
  if (A.is_zero())
    c = cb;
  else if (B.is_zero())
    c = ca;
  else
    c = {std::min(ca.first, cb.first), std::min(ca.second, cb.second)};
  if (removed) *removed = c;
  return {A.divide_monomial(c.first, c.second), B.divide_monomial(c.first, c.second)};
}

OneForm OneForm::ramify(unsigned n) const {
  BiPoly a = A.ramify(n);
  if (n > 1) a = a * BiPoly::term(Scalar(static_cast<long>(n)), n - 1, 0);
  return {a, B.ramify(n)};
}

OneForm OneForm::shift_y(const UPoly& eps) const {
  // d(y + eps) = dy + eps'(x) dx
  BiPoly b = B.shift_y(eps);
  BiPoly a = A.shift_y(eps);
  UPoly de = eps.derivative();
  BiPoly dep;
  for (int i = 0; i <= de.degree(); ++i) dep.add_term(i, 0, de.coeff(i));
  return {a + b * dep, b};
}

std::string OneForm::str() const { return "(" + A.str() + ") dx + (" + B.str() + ") dy"; }

OneForm exterior_derivative(const BiPoly& f) { return {f.dx(), f.dy()}; }

BiPoly wedge(const OneForm& w, const OneForm& e) { return w.A * e.B - w.B * e.A; }

InitialForm initial_form(const OneForm& w, const mpq_class& p) {
  if (w.is_zero()) throw MathError("initial form of the zero 1-form");
  bool first = true;
  mpq_class best;
  auto visit = [&](const BiPoly& P, int da, int db) {
    for (auto& [e, c] : P.terms()) {
      mpq_class v = (e.first + da) + p * (e.second + db);
      if (first || v < best) best = v;
      first = false;
    }
  };
  visit(w.A, 1, 0);
  visit(w.B, 0, 1);
  InitialForm r;
  r.nu = best;
  for (auto& [e, c] : w.A.terms())
    if ((e.first + 1) + p * e.second == best) r.form.A.add_term(e.first, e.second, c);
  for (auto& [e, c] : w.B.terms())
    if (e.first + p * (e.second + 1) == best) r.form.B.add_term(e.first, e.second, c);
  return r;
}

}  // namespace jc
