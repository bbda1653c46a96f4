#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace jc;
using namespace jc::testing;

namespace {
const Check* find_check(const CheckLog& log, const std::string& name) {
  for (auto& c : log.all())
    if (c.name == name) return &c;
  return nullptr;
}
bool all_named_pass(const CheckLog& log, const std::string& name) {
  bool any = false;
  for (auto& c : log.all())
    if (c.name == name) {
      any = true;
      if (!c.ok) return false;
    }
  return any;
}
}  // namespace

TEST_CASE("jacobian form") {
  OneForm dx{BiPoly(Scalar(1)), BiPoly()}, dy{BiPoly(), BiPoly(Scalar(1))};
  CHECK(jacobian_form(dy, dx) == BiPoly(Scalar(-1)));
  CHECK_THROWS_AS(jacobian_form(dy, dy), AssumptionError);
  ProblemSpec p = load_fixture("x_cono_tg.json");
  CHECK(jacobian_form(p.F->build().omega, p.G->build().omega) == *p.expect.J);
}

TEST_CASE("x-cono-tg: jacobian, first divisor and M function") {
  Analysis a = analyze_fixture("x_cono_tg.json");
  ProblemSpec p = load_fixture("x_cono_tg.json");
  CHECK(a.J == *p.expect.J);
  CHECK(a.nu_F == 2);
  CHECK(a.nu_G == 2);
  CHECK(a.m0J == 4);
  const DivisorReport& e1 = a.div(0);
  CHECK(e1.bifurcation);
  CHECK_FALSE(e1.collinear);
  CHECK(e1.delta_sum.is_zero());
  // M = -(z - 6) / (z (z - 1)(z - 2)(z - 3))
  UPoly den = Z() * (Z() - Scalar(1)) * (Z() - Scalar(2)) * (Z() - Scalar(3));
  CHECK(e1.M.num * den.lead() == (Scalar(6) - Z()) * e1.M.den.lead());
  CHECK(e1.M.den.monic() == den);
  CHECK(e1.M.t == 1);
  CHECK(e1.t_star == 1);
  CHECK_FALSE(a.xt.condition_holds);
  CHECK(a.xt.x_divides_initial);
  CHECK(a.dec.residual == 1);
  CHECK(a.log.status() == 0);
}

TEST_CASE("CE-ME: Delta table and M function on E2") {
  Analysis a = analyze_fixture("ce_me.json");
  const DivisorReport& e2 = a.div(1);
  CHECK(e2.p == 2);
  REQUIRE(e2.points.size() == 3);
  CHECK(coords(a.graph.tree.div(1)) == scalars({-1, 1, -2}));
  CHECK(deltas(e2) == scalars({mpq_class(-2, 11), 0, mpq_class(3, 11)}));
  CHECK(e2.points[0].IF == Scalar::frac(-1, 11));
  CHECK(e2.points[0].IG == Scalar::frac(-3, 11));
  CHECK(e2.points[2].IF == Scalar::frac(-3, 11));
  // M = (z - 1) / (11 (z + 2)(z + 1))
  UPoly den = (Z() + Scalar(2)) * (Z() + Scalar(1));
  CHECK(e2.M.den.monic() == den);
  CHECK(e2.M.num * den.lead() * Scalar(11) == (Z() - Scalar(1)) * e2.M.den.lead());
  CHECK_FALSE(e2.collinear);
  CHECK(e2.points[0].predicted == 1);
  CHECK(e2.points[0].measured == 1);
  CHECK(a.xt.condition_holds);
  CHECK(all_named_pass(a.log, "divisor-identity"));
  CHECK(a.log.status() == 0);
}

TEST_CASE("M function from a Delta table") {
  MeromorphicME m = me_function({Scalar(0), Scalar(1)}, {Scalar(1), Scalar(-1)});
  CHECK(m.den.monic() == Z() * (Z() - Scalar(1)));
  CHECK(m.num.degree() == 0);
  CHECK(m.t == 0);
  MeromorphicME z = me_function({Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)});
  CHECK(z.zero());
  MeromorphicME d = me_function({Scalar(1), Scalar(2), Scalar(3)}, {Scalar(1), Scalar(-2), Scalar(1)});
  CHECK(d.t == 0);  // 1/(z-1) - 2/(z-2) + 1/(z-3) = 2/((z-1)(z-2)(z-3))
  CHECK(d.num.degree() == 0);
}

TEST_CASE("equal logarithmic data makes the first divisor collinear") {
  FoliationModel F = logarithmic_model({smooth({1}), smooth({-1})}, {Scalar(1), Scalar(2)}, "F");
  FoliationModel G = logarithmic_model({smooth({1, 1}), smooth({-1, 1})}, {Scalar(1), Scalar(2)}, "G");
  Analysis a = analyze(F, G);
  CHECK(a.div(0).collinear);
  for (auto& P : a.div(0).points) CHECK(P.delta.is_zero());
  CHECK(a.log.status() == 0);
}

TEST_CASE("predicted multiplicity is refused on collinear divisors") {
  FoliationModel F = logarithmic_model({smooth({1}), smooth({-1})}, {Scalar(1), Scalar(2)}, "F");
  FoliationModel G = logarithmic_model({smooth({1, 1}), smooth({-1, 1})}, {Scalar(1), Scalar(2)}, "G");
  Analysis a = analyze(F, G);
  CHECK_THROWS_AS(predicted_multiplicity(a.div(0), 0), MathError);
  std::vector<int> cover = cover_of(a, 0, 0);
  REQUIRE_FALSE(cover.empty());
  for (int E : cover) CHECK(a.non_collinear(E));
}

TEST_CASE("separatrix intersections with a generic line") {
  FoliationModel F = hamiltonian_model(Y().pow(2) - X().pow(3), {cusp()}, "F");
  FoliationModel G = hamiltonian_model(Y() - X() * Scalar(2), {smooth({2})}, "G");
  Analysis a = analyze(F, G);
  auto it = std::find_if(a.inter.seps.begin(), a.inter.seps.end(),
                         [](const SeparatrixIntersection& s) { return s.side == Side::C; });
  REQUIRE(it != a.inter.seps.end());
  CHECK(it->JS == 3);
  CHECK(it->mu == 2);
  CHECK(it->tau == 1);
  REQUIRE(a.inter.mu_F);
  CHECK(*a.inter.mu_F == 2);
  CHECK(all_named_pass(a.log, "separatrix-intersection"));
  CHECK(a.log.status() == 0);
}

TEST_CASE("x-tangency for transversal hamiltonian lines") {
  Analysis a = analyze(hamiltonian_model(Y() - X(), {smooth({1})}, "F"),
                       hamiltonian_model(Y() + X(), {smooth({-1})}, "G"));
  CHECK(a.xt.condition_holds);
  CHECK(a.J.order() == 0);
}

TEST_CASE("identical foliations are rejected") {
  FoliationModel F = hamiltonian_model(Y() - X(), {smooth({1})}, "F");
  CHECK_THROWS(analyze(F, F));
}

TEST_CASE("multiplicity lower bound") {
  for (const char* name : {"ce_me.json", "x_cono_tg.json", "kp_d1_f2.json"}) {
    Analysis a = analyze_fixture(name);
    CHECK(a.m0J >= a.nu_F + a.nu_G);
  }
}

TEST_CASE("the counterexample to the difference inequality is informational") {
  Analysis a = analyze_fixture("sum_mult_counterexample.json");
  const Check* c = find_check(a.log, "packet-milnor-sum");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->ok);
  CHECK(c->kind == CheckKind::Info);
  CHECK(all_named_pass(a.log, "separatrix-intersection"));
  CHECK(a.log.status() == 0);
}

TEST_CASE("check log status") {
  CheckLog log;
  CHECK(log.status() == 0);
  log.add("a", "c", "w", false, "", CheckKind::Info);
  CHECK(log.status() == 0);
  log.add("b", "c", "w", false, "");
  CHECK(log.status() == 4);
  log.downgrade();
  CHECK(log.status() == 3);
  log.add("i", "c", "w", false, "", CheckKind::Internal);
  CHECK(log.status() == 5);
}
