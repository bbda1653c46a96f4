#pragma once
// Sparse bivariate polynomials in (x, y) over Scalar.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jc/scalar.hpp"
#include "jc/upoly.hpp"

namespace jc {

using Exp = std::pair<int, int>;  // (i, j) for x^i y^j

class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Scalar& s);  // NOLINT
  static BiPoly x();
  static BiPoly y();
  static BiPoly term(const Scalar& c, int i, int j);
  // y - eps(x)
  static BiPoly graph(const UPoly& eps);

  bool is_zero() const { return t_.empty(); }
  const std::map<Exp, Scalar>& terms() const { return t_; }
  Scalar coeff(int i, int j) const;
  void add_term(int i, int j, const Scalar& c);
  int deg_x() const;
  int deg_y() const;
  // Lowest total degree; -1 for the zero polynomial.
  int order() const;
  Scalar at_origin() const { return coeff(0, 0); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const Scalar& s);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  BiPoly pow(unsigned e) const;

  BiPoly dx() const;
  BiPoly dy() const;
  // P(x, y + eps(x))
  BiPoly shift_y(const UPoly& eps) const;
  // P(x^n, y)
  BiPoly ramify(unsigned n) const;
  // P(x, 0) as a polynomial in x, and P(1, y) as a polynomial in y.
  UPoly at_y0() const;
  UPoly at_x1() const;
  // Weighted order and initial part for weight(x) = 1, weight(y) = w.
  mpq_class weighted_order(const mpq_class& w) const;
  BiPoly weighted_initial(const mpq_class& w, mpq_class* order = nullptr) const;
  // Divide by x^a y^b exactly (throws if not divisible).
  BiPoly divide_monomial(int a, int b) const;
  // Largest x^a y^b dividing every term.
  Exp monomial_content() const;
  std::string str() const;

 private:
  std::map<Exp, Scalar> t_;
};

// Vertices of the compact edges of the Newton polygon of a support set,
// ordered by decreasing x-exponent (increasing y-exponent).
std::vector<Exp> newton_polygon(const std::vector<Exp>& support);

}  // namespace jc
