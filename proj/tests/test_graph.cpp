#include <algorithm>

#include "doctest.h"
#include "random_models.hpp"
#include "test_util.hpp"

using namespace jc;
using namespace jc::testing;

namespace {
std::vector<Branch> ce_me_curves() {
  ProblemSpec p = load_fixture("ce_me.json");
  std::vector<Branch> all = p.F->branches;
  all.insert(all.end(), p.G->branches.begin(), p.G->branches.end());
  return all;
}
std::vector<Side> sides_for(size_t nc, size_t nd) {
  std::vector<Side> s(nc, Side::C);
  s.insert(s.end(), nd, Side::D);
  return s;
}
}  // namespace

TEST_CASE("prefix tree of the CE-ME configuration") {
  DualGraph g = build_dual_graph(ce_me_curves(), sides_for(4, 3));
  const PrefixTree& t = g.tree;
  REQUIRE(t.divisors().size() >= 3);
  const TreeDivisor& e1 = t.div(0);
  CHECK(e1.p == 1);
  CHECK(e1.b() == 3);
  auto c1 = coords(e1);
  std::sort(c1.begin(), c1.end(), [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
  CHECK(c1 == scalars({-1, 0, 1}));
  const TreeDivisor& e2 = t.div(1);
  CHECK(e2.p == 2);
  CHECK(e2.parent == 0);
  CHECK(coords(e2) == scalars({-1, 1, -2}));
  CHECK(e2.eps().is_zero());
  CHECK(t.bifurcation_divisors() == std::vector<int>{0, 1, 2, 3});
  CHECK(t.div(2).p == 3);
  CHECK(t.div(3).p == 3);
  CHECK(ramification_violations(g).empty());
}

TEST_CASE("adapted coordinates follow the shared prefix") {
  DualGraph g = build_dual_graph({smooth({1, 0, 1}), smooth({1, 2})}, sides_for(1, 1));
  const PrefixTree& t = g.tree;
  REQUIRE(t.divisors().size() == 2);
  CHECK(t.div(0).b() == 1);
  CHECK_FALSE(t.div(0).bifurcation());
  CHECK(t.div(1).p == 2);
  CHECK(t.div(1).eps() == Z());
  CHECK(t.next_bifurcation(0, 0) == 1);
  CHECK(t.shared_depth(1, 0) == 2);
}

TEST_CASE("transversal lines give one bifurcation divisor") {
  DualGraph g = build_dual_graph({smooth({1}), smooth({-1})}, sides_for(1, 1));
  REQUIRE(g.divs.size() == 1);
  CHECK(g.divs[0].v == 1);
  CHECK(g.divs[0].b == 2);
  CHECK(g.divs[0].bifurcation());
}

TEST_CASE("cusp and parabola bifurcate at valuation 3/2") {
  DualGraph g = build_dual_graph({cusp(), smooth({0, 1})}, sides_for(1, 1));
  CHECK(g.ram.n == 2);
  CHECK(g.ram.sigma.size() == 3);
  auto it = std::find_if(g.divs.begin(), g.divs.end(), [](const GraphDivisor& E) { return E.v == mpq_class(3, 2); });
  REQUIRE(it != g.divs.end());
  CHECK(it->bifurcation());
  CHECK(it->puiseux);
  CHECK(it->n_E == 2);
  CHECK(ramification_violations(g).empty());
}

TEST_CASE("ramification of a cusp") {
  Ramified r = ramify({cusp()}, {Side::C});
  CHECK(r.n == 2);
  REQUIRE(r.sigma.size() == 2);
  CHECK(r.sigma[0].coeff(3) == -r.sigma[1].coeff(3));
  CHECK_THROWS_AS(ramify({cusp()}, {Side::C}, 3), InputError);
  CHECK(ramify({cusp()}, {Side::C}, 4).n == 4);
}

TEST_CASE("two Puiseux pairs ramified by four") {
  Branch b(4, {{6, Scalar(1)}, {7, Scalar(1)}});
  DualGraph g = build_dual_graph({b}, {Side::C});
  CHECK(g.ram.n == 4);
  CHECK(g.ram.sigma.size() == 4);
  std::vector<mpq_class> vs;
  for (auto& E : g.divs)
    if (E.puiseux) vs.push_back(E.v);
  CHECK(vs == std::vector<mpq_class>{mpq_class(3, 2), mpq_class(7, 4)});
  CHECK(ramification_violations(g).empty());
}

TEST_CASE("valence of associated divisors at a Puiseux divisor") {
  // f with exponents (4; 6, 7) and its semiroot-type companion y^2 - x^3.
  Branch f(4, {{6, Scalar(1)}, {7, Scalar(1)}});
  DualGraph g = build_dual_graph({f, cusp()}, sides_for(1, 1));
  auto it = std::find_if(g.divs.begin(), g.divs.end(), [](const GraphDivisor& E) { return E.v == mpq_class(7, 4); });
  REQUIRE(it != g.divs.end());
  for (int l : it->associated) CHECK(g.tree.div(l).b() == (it->b - 1) * it->n_E + (it->dead_arc ? 0 : 1));
  CHECK(ramification_violations(g).empty());
}

TEST_CASE("graph output is deterministic") {
  DualGraph a = build_dual_graph(ce_me_curves(), sides_for(4, 3));
  DualGraph b = build_dual_graph(ce_me_curves(), sides_for(4, 3));
  CHECK(a.dot() == b.dot());
  CHECK(a.tree.dot() == b.tree.dot());
  CHECK(a.dot().find("graph G {") != std::string::npos);
}
