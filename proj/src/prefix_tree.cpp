#include <algorithm>
#include <numeric>
#include <sstream>

#include "jc/dual_graph.hpp"

namespace jc {

Scalar SmoothBranch::coeff(int j) const {
  if (!known(j))
    throw MathError("truncation too short: coefficient u^" + std::to_string(j) + " of " + label +
                    " is not known");
  return j < static_cast<int>(c.size()) ? c[j] : Scalar(0);
}

Branch SmoothBranch::as_branch() const {
  std::vector<std::pair<int, Scalar>> t;
  for (int j = 1; j < static_cast<int>(c.size()); ++j)
    if (!c[j].is_zero()) t.emplace_back(j, c[j]);
  return Branch(1, std::move(t), T, label);
}

UPoly TreeDivisor::eps() const {
  std::vector<Scalar> v(prefix.size() + 1, Scalar(0));
  for (size_t i = 0; i < prefix.size(); ++i) v[i + 1] = prefix[i];
  return UPoly(std::move(v));
}

int TreeDivisor::point_of(int branch) const {
  for (size_t i = 0; i < points.size(); ++i)
    for (int m : points[i].members)
      if (m == branch) return static_cast<int>(i);
  return -1;
}

PrefixTree::PrefixTree(std::vector<SmoothBranch> branches) : br_(std::move(branches)) {
  if (br_.empty()) throw InputError("no branches to resolve");
  TreeDivisor root;
  root.id = 0;
  root.p = 1;
  for (size_t i = 0; i < br_.size(); ++i) root.members.push_back(static_cast<int>(i));
  divs_.push_back(root);
  for (size_t k = 0; k < divs_.size(); ++k) {
    int p = divs_[k].p;
    std::vector<int> members = divs_[k].members;
    std::vector<TreePoint> pts;
    for (int s : members) {
      Scalar c = br_[s].coeff(p);
      auto it = std::find_if(pts.begin(), pts.end(), [&](const TreePoint& q) { return q.c == c; });
      if (it == pts.end()) {
        pts.push_back(TreePoint{c, {s}, -1});
      } else {
        it->members.push_back(s);
      }
    }
    for (size_t q = 0; q < pts.size(); ++q) {
      if (pts[q].members.size() < 2) continue;
      bool all_done = true;
      for (int s : pts[q].members)
        if (!(br_[s].T == 0 && p >= br_[s].last())) all_done = false;
      if (all_done)
        throw InputError("branches " + br_[pts[q].members[0]].label + " and " +
                         br_[pts[q].members[1]].label + " coincide (common branch)");
      TreeDivisor d;
      d.id = static_cast<int>(divs_.size());
      d.parent = static_cast<int>(k);
      d.parent_point = static_cast<int>(q);
      d.p = p + 1;
      d.prefix = divs_[k].prefix;
      d.prefix.push_back(pts[q].c);
      d.members = pts[q].members;
      pts[q].child = d.id;
      divs_.push_back(std::move(d));
    }
    divs_[k].points = std::move(pts);
  }
}

int PrefixTree::shared_depth(int E, int s) const {
  const TreeDivisor& d = divs_.at(E);
  for (int j = 1; j < d.p; ++j)
    if (br_[s].coeff(j) != d.prefix[j - 1]) return j;
  return d.p;
}

int PrefixTree::next_bifurcation(int E, int P, std::vector<int>* chain) const {
  int cur = divs_.at(E).points.at(P).child;
  while (cur >= 0 && divs_[cur].b() == 1) {
    if (chain) chain->push_back(cur);
    cur = divs_[cur].points[0].child;
  }
  return cur;
}

std::vector<int> PrefixTree::bifurcation_divisors() const {
  std::vector<int> r;
  for (auto& d : divs_)
    if (d.bifurcation()) r.push_back(d.id);
  return r;
}

std::string PrefixTree::dot() const {
  std::ostringstream os;
  os << "graph ramified {\n";
  for (auto& d : divs_) {
    os << "  T" << d.id << " [label=\"E" << d.id + 1 << " p=" << d.p << " b=" << d.b() << "\"];\n";
    if (d.parent >= 0) os << "  T" << d.parent << " -- T" << d.id << ";\n";
    for (auto& pt : d.points)
      if (pt.child < 0)
        for (int s : pt.members) {
          os << "  A" << s << " [shape=plaintext,label=\"" << br_[s].label << "\"];\n";
          os << "  T" << d.id << " -- A" << s << " [label=\"" << pt.c.str() << "\"];\n";
        }
  }
  os << "}\n";
  return os.str();
}

Ramified ramify(const std::vector<Branch>& curves, const std::vector<Side>& sides, unsigned n) {
  Ramified r;
  for (auto& b : curves) r.n = std::lcm(r.n, b.n());
  if (n != 0) {
    if (n % r.n != 0)
      throw InputError("ramification order " + std::to_string(n) + " is not a multiple of " +
                       std::to_string(r.n));
    r.n = n;
  }
  for (size_t i = 0; i < curves.size(); ++i) {
    const Branch& b = curves[i];
    unsigned f = r.n / b.n();
    int last = b.last_exponent() * static_cast<int>(f);
    for (unsigned k = 0; k < b.n(); ++k) {
      SmoothBranch s;
      s.curve = static_cast<int>(i);
      s.conj = k;
      s.side = sides.at(i);
      s.T = b.exact() ? 0 : b.truncation() * static_cast<int>(f);
      s.c.assign(last + 1, Scalar(0));
      for (auto& [j, c] : b.terms())
        s.c[j * f] = c * Scalar::zeta(b.n(), static_cast<long>(j) * k);
      s.label = b.label() + (b.n() > 1 ? "#" + std::to_string(k) : "");
      r.sigma.push_back(std::move(s));
    }
  }
  return r;
}

}  // namespace jc
