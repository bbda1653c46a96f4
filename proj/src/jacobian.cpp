#include "jc/jacobian.hpp"

#include <algorithm>
#include <set>

namespace jc {

BiPoly jacobian_form(const OneForm& omega, const OneForm& eta) {
  BiPoly J = wedge(omega, eta);
  if (J.is_zero()) throw AssumptionError("the two foliations coincide (J = 0)");
  return J;
}

void CheckLog::add(std::string name, std::string citation, std::string where, bool ok,
                   std::string detail, CheckKind kind) {
  v_.push_back(Check{std::move(name), std::move(citation), std::move(where), ok, std::move(detail),
                     kind});
}

long CheckLog::failures(CheckKind k) const {
  return std::count_if(v_.begin(), v_.end(), [&](const Check& c) { return c.kind == k && !c.ok; });
}

int CheckLog::status() const {
  if (failures(CheckKind::Internal)) return 5;
  if (failures(CheckKind::Assumption)) return 3;
  if (failures(CheckKind::Theorem)) return downgraded_ ? 3 : 4;
  return 0;
}

std::string MeromorphicME::str(const std::string& var) const {
  if (num.is_zero()) return "0";
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

MeromorphicME me_function(const std::vector<Scalar>& c, const std::vector<Scalar>& delta) {
  if (c.size() != delta.size()) throw InternalError("points and Delta values differ in number");
  MeromorphicME M;
  M.den = UPoly(Scalar(1));
  for (size_t l = 0; l < c.size(); ++l) {
    UPoly full(delta[l]), red(delta[l]);
    for (size_t j = 0; j < c.size(); ++j) {
      if (j == l) continue;
      full = full * UPoly::linear_root(c[j]);
      if (!delta[j].is_zero()) red = red * UPoly::linear_root(c[j]);
    }
    M.num_full = M.num_full + full;
    if (!delta[l].is_zero()) {
      M.num = M.num + red;
      M.den = M.den * UPoly::linear_root(c[l]);
    }
  }
  if (M.num.is_zero()) {
    M.den = UPoly(Scalar(1));
    return M;
  }
  M.t = M.num.degree();
  if (M.t > 0) M.bundles = square_free(M.num);
  return M;
}

long Packet::c() const {
  long s = 0;
  for (auto& q : collinear) s += q.predicted;
  return s;
}

long predicted_multiplicity(const DivisorReport& E, int point) {
  if (E.collinear) throw MathError("collinear divisor: no prediction available");
  const PointReport& P = E.points.at(point);
  return P.mC + P.mD + P.tau;
}

std::vector<int> cover_of(const Analysis& a, int E, int point) {
  const PrefixTree& t = a.graph.tree;
  const TreePoint& P = t.div(E).points.at(point);
  std::set<int> cover;
  for (int s : P.members) {
    int cur = t.next_bifurcation(E, point);
    while (cur >= 0 && a.div(cur).collinear) {
      int q = t.div(cur).point_of(s);
      if (q < 0) throw InternalError("branch left the geodesic while building a cover");
      if (t.div(cur).points[q].child < 0) {
        cur = -1;
        break;
      }
      cur = t.next_bifurcation(cur, q);
    }
    if (cur < 0)
      throw MathError("branch " + t.branches()[s].label +
                      " meets no non-collinear bifurcation divisor after E" + std::to_string(E + 1));
    cover.insert(cur);
  }
  return {cover.begin(), cover.end()};
}

long collinear_packet(const Analysis& a, int E, int point, const std::vector<int>& cover) {
  long v = a.div(E).points.at(point).t;
  for (int l : cover) v += a.div(l).nN - a.div(l).M.t;
  return v;
}

}  // namespace jc
