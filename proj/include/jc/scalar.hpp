#pragma once
// Exact scalars: rationals, or elements of a cyclotomic field Q(zeta_n).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace jc {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A hypothesis of the theory fails for the given input (common separatrix,
// dicritical divisor, foliations that coincide, ...).
struct AssumptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value in Q(zeta_n) stored in the power basis 1, z, ..., z^(phi(n)-1)
// reduced modulo the n-th cyclotomic polynomial. Conductor 1 means a plain
// rational held in q_. Results that happen to be rational collapse to
// conductor 1, so equality never depends on the embedding chosen.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT
  Scalar(const mpq_class& v) : q_(v) { q_.canonicalize(); }  // NOLINT
  static Scalar frac(long num, long den);
  static Scalar zeta(unsigned n, long k = 1);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  const mpq_class& rational() const;
  unsigned conductor() const { return n_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar pow(long e) const;
  // Same value expressed with conductor m (n must divide m).
  Scalar lifted(unsigned m) const;
  std::string str() const;
  // Total order used only to break ties deterministically among values of
  // one field; rationals sort numerically.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  void normalize();
  unsigned n_ = 1;
  mpq_class q_;
  std::vector<mpq_class> c_;
};

unsigned euler_phi(unsigned n);
// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<mpq_class>& cyclotomic_poly(unsigned n);
// Smallest common field containing both conductors.
unsigned cyclotomic_join(unsigned a, unsigned b);
long ipow(long b, unsigned e);
// a / b in canonical form.
mpq_class ratio(long a, long b);

}  // namespace jc
