#include "jc/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace jc {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Remainder and quotient of a by the nonzero polynomial b.
QPoly qdivmod(QPoly a, const QPoly& b, QPoly* quot) {
  trim(a);
  size_t db = b.size() - 1;
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - db, 0);
  while (a.size() >= b.size()) {
    mpq_class f = a.back() / b.back();
    size_t s = a.size() - b.size();
    q[s] = f;
    for (size_t j = 0; j < b.size(); ++j) a[s + j] -= f * b[j];
    trim(a);
  }
  if (quot) {
    trim(q);
    *quot = q;
  }
  return a;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly compute_cyclotomic(unsigned n) {
  QPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    QPoly q;
    qdivmod(num, cyclotomic_poly(d), &q);
    num = q;
  }
  return num;
}

// Reduce a polynomial in zeta_n (exponents taken mod n) to the power basis.
std::vector<mpq_class> reduce_mod(QPoly p, unsigned n) {
  const QPoly& phi = cyclotomic_poly(n);
  QPoly folded(n, 0);
  for (size_t i = 0; i < p.size(); ++i) folded[i % n] += p[i];
  trim(folded);
  QPoly r = qdivmod(folded, phi, nullptr);
  r.resize(euler_phi(n), 0);
  return r;
}

}  // namespace

long ipow(long b, unsigned e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

unsigned euler_phi(unsigned n) {
  unsigned r = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<mpq_class>& cyclotomic_poly(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  QPoly p;
  if (n == 1)
    p = {-1, 1};
  else
    p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

unsigned cyclotomic_join(unsigned a, unsigned b) { return std::lcm(a, b); }

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw MathError("division by zero");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::zeta(unsigned n, long k) {
  if (n == 0) throw MathError("zeta of order 0");
  long e = ((k % static_cast<long>(n)) + n) % n;
  if (n <= 2 || e == 0) return Scalar(e == 0 ? 1 : -1);
  Scalar s;
  s.n_ = n;
  QPoly p(e + 1, 0);
  p[e] = 1;
  s.c_ = reduce_mod(p, n);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (n_ == 1) return;
  bool rational = true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) rational = false;
  if (rational) {
    q_ = c_.empty() ? mpq_class(0) : c_[0];
    c_.clear();
    n_ = 1;
  }
}

bool Scalar::is_zero() const { return n_ == 1 && q_ == 0; }
bool Scalar::is_one() const { return n_ == 1 && q_ == 1; }

const mpq_class& Scalar::rational() const {
  if (n_ != 1) throw MathError("scalar is not rational: " + str());
  return q_;
}

Scalar Scalar::lifted(unsigned m) const {
  if (m % n_) throw InternalError("bad cyclotomic lift");
  Scalar s;
  s.n_ = m;
  if (m == 1) {
    s.q_ = q_;
    return s;
  }
  if (n_ == 1) {
    s.c_.assign(euler_phi(m), 0);
    s.c_[0] = q_;
    return s;
  }
  unsigned step = m / n_;
  QPoly p(step * (c_.size() - 1) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  s.c_ = reduce_mod(p, m);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (n_ == 1 && o.n_ == 1) {
    q_ += o.q_;
    return *this;
  }
  unsigned m = cyclotomic_join(n_, o.n_);
  Scalar a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return *this = std::move(a);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (n_ == 1 && o.n_ == 1) {
    q_ *= o.q_;
    return *this;
  }
  if (o.n_ == 1 || n_ == 1) {
    const mpq_class f = n_ == 1 ? q_ : o.q_;
    Scalar r = n_ == 1 ? o : *this;
    for (auto& c : r.c_) c *= f;
    r.normalize();
    return *this = std::move(r);
  }
  unsigned m = cyclotomic_join(n_, o.n_);
  Scalar a = lifted(m), b = o.lifted(m);
  Scalar r;
  r.n_ = m;
  r.c_ = reduce_mod(qmul(a.c_, b.c_), m);
  r.normalize();
  return *this = std::move(r);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw MathError("division by zero");
  if (n_ == 1) return Scalar(mpq_class(1) / q_);
  // Extended Euclid: s*a + t*phi = 1.
  QPoly a = c_;
  trim(a);
  QPoly b = cyclotomic_poly(n_);
  QPoly s0{1}, s1{};
  while (!b.empty()) {
    QPoly q;
    QPoly r = qdivmod(a, b, &q);
    QPoly s2 = qsub(s0, qmul(q, s1));
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
  }
  if (a.size() != 1) throw InternalError("cyclotomic inverse failed");
  for (auto& c : s0) c /= a[0];
  Scalar r;
  r.n_ = n_;
  r.c_ = reduce_mod(s0, n_);
  r.normalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.n_ == 1 && b.n_ == 1) return a.q_ == b.q_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // collapsed values are rational
  if (a.n_ == b.n_) return a.c_ == b.c_;
  unsigned m = cyclotomic_join(a.n_, b.n_);
  return a.lifted(m).c_ == b.lifted(m).c_;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  if (n_ == 1) return q_.get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string z = "z" + std::to_string(n_);
    if (i == 0)
      os << c.get_str();
    else {
      if (c != 1) os << c.get_str() << "*";
      os << z;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.n_ == 1 && b.n_ == 1) return a.q_ < b.q_;
  if (a.n_ == 1) return true;
  if (b.n_ == 1) return false;
  unsigned m = cyclotomic_join(a.n_, b.n_);
  auto ca = a.lifted(m).c_, cb = b.lifted(m).c_;
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

mpq_class ratio(long a, long b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace jc
