#pragma once
// Dense univariate polynomials and rational functions over Scalar.

#include <string>
#include <utility>
#include <vector>

#include "jc/scalar.hpp"

namespace jc {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  UPoly(const Scalar& s) : c_{s} { trim(); }  // NOLINT
  static UPoly monomial(const Scalar& c, int deg);
  // (y - r)
  static UPoly linear_root(const Scalar& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar lead() const { return c_.empty() ? Scalar(0) : c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Scalar& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws MathError on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& y) const;
  // p(y + s)
  UPoly shift(const Scalar& s) const;
  UPoly pow(unsigned e) const;
  // Order of vanishing at r.
  int root_multiplicity(const Scalar& r) const;
  // Remove the factor (y - r)^k entirely.
  UPoly strip_root(const Scalar& r, int* k = nullptr) const;
  std::string str(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);
// Square-free decomposition: pairs (factor, multiplicity), factors monic,
// pairwise coprime, product equal to the monic part of p.
std::vector<std::pair<UPoly, int>> square_free(const UPoly& p);
// True if a and b differ by a nonzero constant factor.
bool proportional(const UPoly& a, const UPoly& b);

// Reduced quotient num/den with monic denominator.
class URational {
 public:
  URational(UPoly num, UPoly den);
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  // Residue at y = r of num/den.
  Scalar residue_at(const Scalar& r) const;

 private:
  UPoly num_, den_;
};

}  // namespace jc
