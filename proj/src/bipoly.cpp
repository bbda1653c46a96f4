#include "jc/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace jc {

BiPoly::BiPoly(const Scalar& s) {
  if (!s.is_zero()) t_[{0, 0}] = s;
}

BiPoly BiPoly::x() { return term(Scalar(1), 1, 0); }
BiPoly BiPoly::y() { return term(Scalar(1), 0, 1); }

BiPoly BiPoly::term(const Scalar& c, int i, int j) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::graph(const UPoly& eps) {
  BiPoly p = y();
  for (int i = 0; i <= eps.degree(); ++i) p.add_term(i, 0, -eps.coeff(i));
  return p;
}

Scalar BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Scalar(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  if (i < 0 || j < 0) throw InternalError("negative exponent in polynomial");
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int BiPoly::deg_x() const {
  int d = -1;
  for (auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

int BiPoly::order() const {
  if (t_.empty()) return -1;
  int d = INT_MAX;
  for (auto& [e, c] : t_) d = std::min(d, e.first + e.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (auto& [e, c] : o.t_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly operator*(const BiPoly& a, const Scalar& s) {
  if (s.is_zero()) return {};
  BiPoly r = a;
  for (auto& [e, c] : r.t_) c *= s;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Scalar(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (auto& [e, c] : t_)
    if (e.first > 0) r.add_term(e.first - 1, e.second, c * Scalar(e.first));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (auto& [e, c] : t_)
    if (e.second > 0) r.add_term(e.first, e.second - 1, c * Scalar(e.second));
  return r;
}

BiPoly BiPoly::shift_y(const UPoly& eps) const {
  if (eps.is_zero() || t_.empty()) return *this;
  int d = deg_y();
  std::vector<BiPoly> rows(d + 1);
  for (auto& [e, c] : t_) rows[e.second].add_term(e.first, 0, c);
  BiPoly lin = y();
  for (int i = 0; i <= eps.degree(); ++i) lin.add_term(i, 0, eps.coeff(i));
  BiPoly r = rows[d];
  for (int j = d - 1; j >= 0; --j) r = r * lin + rows[j];
  return r;
}

BiPoly BiPoly::ramify(unsigned n) const {
  BiPoly r;
  for (auto& [e, c] : t_) r.t_[{e.first * static_cast<int>(n), e.second}] = c;
  return r;
}

UPoly BiPoly::at_y0() const {
  std::vector<Scalar> v(std::max(deg_x() + 1, 0), Scalar(0));
  for (auto& [e, c] : t_)
    if (e.second == 0) v[e.first] += c;
  return UPoly(std::move(v));
}

UPoly BiPoly::at_x1() const {
  std::vector<Scalar> v(std::max(deg_y() + 1, 0), Scalar(0));
  for (auto& [e, c] : t_) v[e.second] += c;
  return UPoly(std::move(v));
}

mpq_class BiPoly::weighted_order(const mpq_class& w) const {
  if (t_.empty()) throw MathError("weighted order of the zero polynomial");
  bool first = true;
  mpq_class best;
  for (auto& [e, c] : t_) {
    mpq_class v = e.first + w * e.second;
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

BiPoly BiPoly::weighted_initial(const mpq_class& w, mpq_class* order) const {
  mpq_class best = weighted_order(w);
  BiPoly r;
  for (auto& [e, c] : t_)
    if (e.first + w * e.second == best) r.t_[e] = c;
  if (order) *order = best;
  return r;
}

BiPoly BiPoly::divide_monomial(int a, int b) const {
  BiPoly r;
  for (auto& [e, c] : t_) {
    if (e.first < a || e.second < b) throw InternalError("monomial division is not exact");
    r.t_[{e.first - a, e.second - b}] = c;
  }
  return r;
}

Exp BiPoly::monomial_content() const {
  if (t_.empty()) return {0, 0};
  int a = INT_MAX, b = INT_MAX;
  for (auto& [e, c] : t_) {
    a = std::min(a, e.first);
    b = std::min(b, e.second);
  }
  return {a, b};
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  // Graded order: lower total degree first, then by decreasing y power.
  std::vector<std::pair<Exp, Scalar>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : v) {
    std::string cs = c.str();
    bool compound = !c.is_rational();
    bool neg = c.is_rational() && c.rational() < 0;
    if (neg) cs = (-c).str();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string mono;
    if (e.first) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second) {
      if (!mono.empty()) mono += "*";
      mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    if (compound) cs = "(" + cs + ")";
    if (mono.empty())
      os << cs;
    else if (cs == "1")
      os << mono;
    else
      os << cs << "*" << mono;
  }
  return os.str();
}

std::vector<Exp> newton_polygon(const std::vector<Exp>& support) {
  if (support.empty()) throw MathError("Newton polygon of an empty support");
  std::map<int, int> lowest;  // x-exponent -> smallest y-exponent
  for (auto& [i, j] : support) {
    auto it = lowest.find(i);
    if (it == lowest.end() || j < it->second) lowest[i] = j;
  }
  // Keep only points that strictly lower the running minimum in y.
  std::vector<Exp> pts;
  for (auto& [i, j] : lowest)
    if (pts.empty() || j < pts.back().second) pts.emplace_back(i, j);
  // Lower convex hull (monotone chain), dropping collinear points.
  std::vector<Exp> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull.back();
      long cross = static_cast<long>(b.first - a.first) * (p.second - a.second) -
                   static_cast<long>(b.second - a.second) * (p.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::reverse(hull.begin(), hull.end());
  return hull;
}

}  // namespace jc
