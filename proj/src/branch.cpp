#include "jc/branch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace jc {

namespace {

// Multiply truncated series mod t^T.
std::vector<Scalar> smul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, long T) {
  std::vector<Scalar> r(T, Scalar(0));
  for (long i = 0; i < static_cast<long>(a.size()) && i < T; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j < static_cast<long>(b.size()) && i + j < T; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

int last_nonzero(const std::vector<Scalar>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (!v[i].is_zero()) return i;
  return -1;
}

// Monomial c t^k if the series has a single nonzero term.
bool is_monomial(const std::vector<Scalar>& v, long* k) {
  int cnt = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      ++cnt;
      *k = static_cast<long>(i);
    }
  return cnt == 1;
}

}  // namespace

Param Param::line_x0() {
  Param p;
  p.xs = {};
  p.ys = {Scalar(0), Scalar(1)};
  p.T = 2;
  p.exact = true;
  return p;
}

std::vector<Scalar> compose_series(const BiPoly& P, const Param& g) {
  long T = g.T;
  std::vector<Scalar> out(T, Scalar(0));
  if (P.is_zero() || T == 0) return out;
  int dx = P.deg_x(), dy = P.deg_y();
  std::vector<std::vector<Scalar>> ypow(dy + 1);
  ypow[0] = std::vector<Scalar>{Scalar(1)};
  for (int j = 1; j <= dy; ++j) ypow[j] = smul(ypow[j - 1], g.ys, T);
  long xk = 0;
  bool xmono = is_monomial(g.xs, &xk) && g.xs[xk].is_one();
  std::vector<std::vector<Scalar>> xpow;
  if (!xmono) {
    xpow.resize(dx + 1);
    xpow[0] = std::vector<Scalar>{Scalar(1)};
    for (int i = 1; i <= dx; ++i) xpow[i] = smul(xpow[i - 1], g.xs, T);
  }
  bool xzero = last_nonzero(g.xs) < 0;
  for (auto& [e, c] : P.terms()) {
    const auto& yp = ypow[e.second];
    if (xmono) {
      long s = xk * e.first;
      for (long k = 0; k < static_cast<long>(yp.size()) && k + s < T; ++k)
        if (!yp[k].is_zero()) out[k + s] += c * yp[k];
    } else if (xzero) {
      if (e.first > 0) continue;
      for (long k = 0; k < static_cast<long>(yp.size()) && k < T; ++k) out[k] += c * yp[k];
    } else {
      auto prod = smul(xpow[e.first], yp, T);
      for (long k = 0; k < T; ++k) out[k] += c * prod[k];
    }
  }
  return out;
}

long evaluate_along(const BiPoly& P, const Param& g0, long need_beyond) {
  Param g = g0;
  if (g.exact) {
    long dxs = std::max(last_nonzero(g.xs), 0), dys = std::max(last_nonzero(g.ys), 0);
    long bound = 0;
    for (auto& [e, c] : P.terms()) bound = std::max(bound, e.first * dxs + e.second * dys);
    g.T = bound + 1;
  }
  auto s = compose_series(P, g);
  for (long k = 0; k < g.T; ++k)
    if (!s[k].is_zero()) return k;
  if (!g.exact && need_beyond > g.T)
    throw MathError("truncation too short: order not certified below t^" + std::to_string(g.T));
  return kInfinite;
}

Branch::Branch(unsigned n, std::vector<std::pair<int, Scalar>> terms, int T, std::string label)
    : n_(n), T_(T), label_(std::move(label)) {
  if (n == 0) throw InputError("branch multiplicity must be positive");
  std::map<int, Scalar> m;
  for (auto& [j, c] : terms) {
    if (j < 1) throw InputError("branch exponents must be positive (branch through the origin)");
    if (T > 0 && j >= T) throw InputError("branch term beyond its truncation");
    m[j] += c;
  }
  for (auto& [j, c] : m)
    if (!c.is_zero()) terms_.emplace_back(j, c);
  unsigned g = n_;
  for (auto& [j, c] : terms_) g = std::gcd(g, static_cast<unsigned>(j));
  if (g > 1) {
    if (T_ > 0)
      throw InputError("truncation too short to determine the characteristic exponents");
    n_ /= g;
    for (auto& [j, c] : terms_) j /= static_cast<int>(g);
  }
}

Branch Branch::smooth(const std::vector<Scalar>& coeffs, std::string label) {
  std::vector<std::pair<int, Scalar>> t;
  for (size_t i = 0; i < coeffs.size(); ++i) t.emplace_back(static_cast<int>(i) + 1, coeffs[i]);
  return Branch(1, std::move(t), 0, std::move(label));
}

Scalar Branch::coeff(int j) const {
  if (!known(j))
    throw MathError("truncation too short: coefficient t^" + std::to_string(j) + " of branch " +
                    label_ + " is not known");
  for (auto& [k, c] : terms_)
    if (k == j) return c;
  return Scalar(0);
}

int Branch::last_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

bool Branch::tangent_to_x0() const {
  return !terms_.empty() && terms_.front().first < static_cast<int>(n_);
}

unsigned Branch::field() const {
  unsigned f = 1;
  for (auto& [j, c] : terms_) f = cyclotomic_join(f, c.conductor());
  return f;
}

Param Branch::param(long min_T) const {
  Param p;
  long T = exact() ? std::max<long>(last_exponent() + 1, min_T) : T_;
  p.T = T;
  p.exact = exact();
  p.xs.assign(n_ + 1, Scalar(0));
  p.xs[n_] = Scalar(1);
  p.ys.assign(std::max<long>(T, 1), Scalar(0));
  for (auto& [j, c] : terms_)
    if (j < T) p.ys[j] = c;
  return p;
}

std::string Branch::str() const {
  std::ostringstream os;
  os << "x = t^" << n_ << ", y = ";
  if (terms_.empty()) os << "0";
  bool first = true;
  for (auto& [j, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*t^" << j;
  }
  if (T_ > 0) os << " + O(t^" << T_ << ")";
  return os.str();
}

long CharacteristicData::n_prod(int k) const {
  long r = 1;
  for (int i = 1; i <= k && i < static_cast<int>(beta.size()); ++i) r *= e[i - 1] / e[i];
  return r;
}

CharacteristicData characteristic_data(const Branch& b) {
  CharacteristicData d;
  int e = static_cast<int>(b.n());
  d.beta.push_back(e);
  d.e.push_back(e);
  for (auto& [j, c] : b.terms()) {
    if (e == 1) break;
    if (j % e) {
      int ne = std::gcd(e, j);
      d.puiseux_pairs.emplace_back(j / ne, e / ne);
      d.beta.push_back(j);
      d.e.push_back(ne);
      e = ne;
    }
  }
  if (e != 1) throw MathError("truncation too short to determine the characteristic exponents");
  d.semigroup.push_back(d.beta[0]);
  if (d.beta.size() > 1) d.semigroup.push_back(d.beta[1]);
  for (size_t q = 1; q + 1 < d.beta.size(); ++q) {
    long nq = d.e[q - 1] / d.e[q];
    d.semigroup.push_back(nq * d.semigroup[q] + d.beta[q + 1] - d.beta[q]);
  }
  return d;
}

Branch conjugate(const Branch& b, unsigned k) {
  std::vector<std::pair<int, Scalar>> t;
  for (auto& [j, c] : b.terms()) t.emplace_back(j, c * Scalar::zeta(b.n(), static_cast<long>(j) * k));
  return Branch(b.n(), std::move(t), b.truncation(), b.label());
}

namespace {

// Smallest exponent (in units of 1/L) where two series differ, or -1 when they
// agree on everything certified. limit < 0 means both are exact.
long first_difference(const std::map<long, Scalar>& a, const std::map<long, Scalar>& b, long limit) {
  std::vector<long> keys;
  for (auto& [k, c] : a) keys.push_back(k);
  for (auto& [k, c] : b) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (long k : keys) {
    if (limit >= 0 && k >= limit) return -1;
    auto ia = a.find(k), ib = b.find(k);
    Scalar ca = ia == a.end() ? Scalar(0) : ia->second;
    Scalar cb = ib == b.end() ? Scalar(0) : ib->second;
    if (ca != cb) return k;
  }
  return -1;
}

std::map<long, Scalar> in_units(const Branch& b, unsigned L, unsigned k) {
  std::map<long, Scalar> m;
  long f = L / b.n();
  for (auto& [j, c] : b.terms()) m[j * f] = k ? c * Scalar::zeta(b.n(), static_cast<long>(j) * k) : c;
  return m;
}

}  // namespace

mpq_class coincidence(const Branch& a, const Branch& b) {
  unsigned L = std::lcm(a.n(), b.n());
  long limit = -1;
  if (!a.exact()) limit = static_cast<long>(a.truncation()) * (L / a.n());
  if (!b.exact()) {
    long lb = static_cast<long>(b.truncation()) * (L / b.n());
    limit = limit < 0 ? lb : std::min(limit, lb);
  }
  auto sa = in_units(a, L, 0);
  long best = -1;
  for (unsigned k = 0; k < b.n(); ++k) {
    long d = first_difference(sa, in_units(b, L, k), limit);
    if (d < 0) {
      if (limit < 0) throw MathError("branches " + a.label() + " and " + b.label() + " coincide");
      throw MathError("truncation too short to separate branches " + a.label() + " and " + b.label());
    }
    best = std::max(best, d);
  }
  return ratio(best, L);
}

BiPoly implicit_equation(const Branch& b) {
  if (!b.exact()) throw MathError("implicit equation needs an exact branch");
  unsigned n = b.n();
  BiPoly prod(Scalar(1));
  for (unsigned k = 0; k < n; ++k) {
    // Variable x stands for s = x^(1/n) during the product.
    BiPoly f = BiPoly::y();
    for (auto& [j, c] : b.terms()) f.add_term(j, 0, -(c * Scalar::zeta(n, static_cast<long>(j) * k)));
    prod = prod * f;
  }
  BiPoly r;
  for (auto& [e, c] : prod.terms()) {
    if (e.first % static_cast<int>(n)) throw InternalError("implicit equation has fractional exponent");
    r.add_term(e.first / static_cast<int>(n), e.second, c);
  }
  return r;
}

long merle_intersection(const Branch& a, const Branch& b) {
  CharacteristicData d = characteristic_data(a);
  mpq_class alpha = coincidence(a, b) * static_cast<long>(a.n());
  int q = 0;
  while (q + 1 < static_cast<int>(d.beta.size()) && alpha >= d.beta[q + 1]) ++q;
  mpq_class v = ratio(d.semigroup[q], d.n_prod(q - 1)) +
                (alpha - d.beta[q]) / mpq_class(d.n_prod(q));
  v *= static_cast<long>(b.n());
  v.canonicalize();
  if (v.get_den() != 1) throw InternalError("Merle formula produced a non-integer");
  return v.get_num().get_si();
}

long intersection_multiplicity(const Branch& a, const Branch& b) {
  long direct;
  if (b.exact()) {
    direct = evaluate_along(implicit_equation(b), a.param(), kInfinite);
  } else {
    // Sum of contact orders in t = x^(1/n_a) over the conjugates of b.
    unsigned L = std::lcm(a.n(), b.n());
    long limit = b.truncation() * static_cast<long>(L / b.n());
    if (!a.exact()) limit = std::min(limit, a.truncation() * static_cast<long>(L / a.n()));
    auto sa = in_units(a, L, 0);
    long sum = 0;
    for (unsigned k = 0; k < b.n(); ++k) {
      long dd = first_difference(sa, in_units(b, L, k), limit);
      if (dd < 0) throw MathError("truncation too short to separate branches");
      sum += dd;
    }
    // Each conjugate of a sees the same multiset; divide to t-units of a.
    mpq_class v(sum * static_cast<long>(a.n()), L);
    v.canonicalize();
    direct = v.get_num().get_si();
  }
  if (direct == kInfinite) throw MathError("branches coincide");
  long merle = merle_intersection(a, b);
  if (merle != direct)
    throw InternalError("intersection multiplicity mismatch: direct " + std::to_string(direct) +
                        " vs Merle " + std::to_string(merle));
  return direct;
}

}  // namespace jc
