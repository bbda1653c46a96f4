#include "jc/upoly.hpp"

#include <sstream>

namespace jc {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Scalar& c, int deg) {
  std::vector<Scalar> v(deg + 1, Scalar(0));
  v[deg] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Scalar& r) { return UPoly({-r, Scalar(1)}); }

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[i];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const Scalar& s) {
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  std::vector<Scalar> a = c_;
  int dd = d.degree();
  std::vector<Scalar> q;
  if (degree() >= dd) q.assign(degree() - dd + 1, Scalar(0));
  Scalar linv = d.lead().inv();
  for (int i = degree(); i >= dd; --i) {
    if (a[i].is_zero()) continue;
    Scalar f = a[i] * linv;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) a[i - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(a))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> r(c_.size() - 1, Scalar(0));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UPoly(std::move(r));
}

Scalar UPoly::eval(const Scalar& y) const {
  Scalar r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * y + c_[i];
  return r;
}

UPoly UPoly::shift(const Scalar& s) const {
  // Horner in the polynomial ring.
  UPoly r;
  UPoly lin({s, Scalar(1)});
  for (size_t i = c_.size(); i-- > 0;) r = r * lin + UPoly(c_[i]);
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(Scalar(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int UPoly::root_multiplicity(const Scalar& r) const {
  int k = 0;
  strip_root(r, &k);
  return k;
}

UPoly UPoly::strip_root(const Scalar& r, int* k) const {
  if (is_zero()) throw MathError("root multiplicity of the zero polynomial");
  UPoly p = *this;
  int m = 0;
  while (p.eval(r).is_zero()) {
    // Synthetic division by (y - r).
    std::vector<Scalar> q(p.c_.size() - 1, Scalar(0));
    Scalar acc(0);
    for (size_t i = p.c_.size(); i-- > 1;) {
      acc = acc * r + p.c_[i];
      q[i - 1] = acc;
    }
    p = UPoly(std::move(q));
    ++m;
  }
  if (k) *k = m;
  return p;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].str();
    bool compound = !c_[i].is_rational();
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << (compound ? "(" + c + ")" : c);
      continue;
    }
    if (!c_[i].is_one()) os << (compound ? "(" + c + ")" : c) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> square_free(const UPoly& p) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f.divmod(a).first;
  UPoly c = fp.divmod(a).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool proportional(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return a.monic() == b.monic();
}

URational::URational(UPoly num, UPoly den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  UPoly g = gcd(num, den);
  num_ = num.divmod(g).first;
  den_ = den.divmod(g).first;
  Scalar l = den_.lead();
  num_ = num_ * l.inv();
  den_ = den_.monic();
}

Scalar URational::residue_at(const Scalar& r) const {
  int k = 0;
  UPoly d = den_.strip_root(r, &k);
  if (k == 0) return Scalar(0);
  UPoly N = num_.shift(r), D = d.shift(r);
  // Series N/D up to t^(k-1).
  std::vector<Scalar> s(k, Scalar(0));
  Scalar d0inv = D.coeff(0).inv();
  for (int i = 0; i < k; ++i) {
    Scalar acc = N.coeff(i);
    for (int j = 0; j < i; ++j) acc -= s[j] * D.coeff(i - j);
    s[i] = acc * d0inv;
  }
  return s[k - 1];
}

}  // namespace jc
