#pragma once
// Branches given by Puiseux parametrizations and their invariants.

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jc/bipoly.hpp"

namespace jc {

constexpr long kInfinite = LONG_MAX;

// Truncated parametrization t -> (x(t), y(t)); both series known mod t^T.
struct Param {
  std::vector<Scalar> xs, ys;
  long T = 0;
  bool exact = false;  // series are polynomials and complete
  static Param line_x0();  // (0, t)
};

// Order in t of P(x(t), y(t)). Returns kInfinite when every certified
// coefficient vanishes (or the composition is identically zero for an exact
// parametrization). Throws MathError("truncation too short") when the
// result is not certified and need_beyond exceeds the truncation.
long evaluate_along(const BiPoly& P, const Param& g, long need_beyond = -1);
// Coefficients of P(x(t), y(t)) below t^T.
std::vector<Scalar> compose_series(const BiPoly& P, const Param& g);

// y = sum c_j x^(j/n), parametrized as x = t^n, y = sum c_j t^j.
class Branch {
 public:
  Branch() = default;
  // terms: (exponent j, coefficient); truncation T = 0 means exact.
  Branch(unsigned n, std::vector<std::pair<int, Scalar>> terms, int T = 0,
         std::string label = {});
  static Branch smooth(const std::vector<Scalar>& coeffs_from_x1, std::string label = {});

  unsigned n() const { return n_; }
  bool exact() const { return T_ == 0; }
  int truncation() const { return T_; }
  const std::vector<std::pair<int, Scalar>>& terms() const { return terms_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  // Coefficient of t^j; throws if j is beyond the truncation.
  Scalar coeff(int j) const;
  bool known(int j) const { return T_ == 0 || j < T_; }
  // Largest exponent that must be inspected for exact series.
  int last_exponent() const;
  bool tangent_to_x0() const;
  unsigned field() const;  // conductor of the coefficient field
  Param param(long min_T = 0) const;
  std::string str() const;

 private:
  unsigned n_ = 1;
  std::vector<std::pair<int, Scalar>> terms_;
  int T_ = 0;
  std::string label_;
};

struct CharacteristicData {
  std::vector<int> beta;               // beta_0 = n, beta_1, ..., beta_g
  std::vector<int> e;                  // e_k = gcd(beta_0..beta_k)
  std::vector<std::pair<int, int>> puiseux_pairs;  // (m_k, n_k)
  std::vector<long> semigroup;         // bar beta_0..bar beta_g
  int g() const { return static_cast<int>(beta.size()) - 1; }
  // n_1 * ... * n_k (1 for k <= 0)
  long n_prod(int k) const;
};

CharacteristicData characteristic_data(const Branch& b);
// Order of coincidence (maximal contact exponent over conjugate pairs).
mpq_class coincidence(const Branch& a, const Branch& b);
// (a, b)_0 by evaluating the implicit equation of b along a, cross-checked
// against Merle's formula; mismatch raises InternalError.
long intersection_multiplicity(const Branch& a, const Branch& b);
long merle_intersection(const Branch& a, const Branch& b);
// Weierstrass polynomial prod_k (y - y_k(x)) over the conjugates.
// Requires an exact branch.
BiPoly implicit_equation(const Branch& b);
// Conjugate k: coefficients c_j zeta_n^(jk).
Branch conjugate(const Branch& b, unsigned k);

}  // namespace jc
