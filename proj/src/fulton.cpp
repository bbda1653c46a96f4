#include "jc/fulton.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace jc {

namespace {

int ord(const UPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) return i;
  return -1;
}

int total_degree(const BiPoly& p) {
  int d = -1;
  for (auto& [e, c] : p.terms()) d = std::max(d, e.first + e.second);
  return d;
}

// Drops the terms of total degree >= D and, for rational coefficients,
// divides by the content so that the coefficients stay small.
BiPoly truncated(const BiPoly& p, int D) {
  BiPoly r;
  bool rational = true;
  mpz_class num = 0, den = 1;
  for (auto& [e, c] : p.terms()) {
    if (e.first + e.second >= D) continue;
    r.add_term(e.first, e.second, c);
    if (!c.is_rational()) {
      rational = false;
      continue;
    }
    const mpq_class& q = c.rational();
    num = gcd(num, q.get_num());
    den = lcm(den, q.get_den());
  }
  if (rational && num != 0) r = r * Scalar(mpq_class(den, num));
  return r;
}

// Local form of Fulton's algorithm modulo m^D. With F(x,0) = x^r u(x) and
// G(x,0) = x^s w(x), r <= s, u(0) w(0) != 0, the polynomial
// u G - x^(s-r) w F vanishes on y = 0, and multiplying G by the unit u
// keeps the intersection number. Every step adds r >= 1 to the total.
// Returns nothing when a polynomial vanishes modulo m^D.
std::optional<long> fulton_mod(const BiPoly& F0, const BiPoly& G0, int D) {
  long total = 0;
  BiPoly F = truncated(F0, D), G = truncated(G0, D);
  for (;;) {
    if (F.is_zero() || G.is_zero()) return std::nullopt;
    if (!F.at_origin().is_zero() || !G.at_origin().is_zero()) return total;
    UPoly f0 = F.at_y0(), g0 = G.at_y0();
    if (f0.is_zero() && g0.is_zero()) return std::nullopt;
    if (f0.is_zero() || (!g0.is_zero() && ord(g0) < ord(f0))) std::swap(F, G), std::swap(f0, g0);
    int r = ord(f0);
    if (!g0.is_zero()) {
      int s = ord(g0);
      BiPoly u, w;
      for (int i = r; i <= f0.degree(); ++i) u.add_term(i - r, 0, f0.coeff(i));
      for (int i = s; i <= g0.degree(); ++i) w.add_term(i - s + (s - r), 0, g0.coeff(i));
      G = truncated(u * G - w * F, D);
      if (!G.at_y0().is_zero()) throw InternalError("local Fulton step left a y^0 part");
    }
    // G = y * G1: I(F, G) = I(F, y) + I(F, G1)
    total += r;
    if (total >= D) return total;
    G = G.divide_monomial(0, 1);
  }
}

}  // namespace

long local_intersection(const BiPoly& F0, const BiPoly& G0) {
  // If I(F, G) = I is finite then m^I lies in the local ideal (F, G), so
  // replacing a generator by one congruent modulo m^(I+1) keeps the ideal.
  // Hence a result r < D computed modulo m^D is exact; every intermediate
  // pair has intersection at most r. Past the Bezout bound the
  // intersection is infinite.
  if (F0.is_zero() || G0.is_zero())
    throw MathError("dicritical-like degeneracy: common factor, intersection is infinite");
  long bezout = static_cast<long>(std::max(total_degree(F0), 1)) * std::max(total_degree(G0), 1);
  for (long D = 16;; D *= 2) {
    std::optional<long> r = fulton_mod(F0, G0, static_cast<int>(D));
    if (r && *r < D) return *r;
    if (D > bezout)
      throw MathError("dicritical-like degeneracy: common factor, intersection is infinite");
  }
}

}  // namespace jc
