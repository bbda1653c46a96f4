#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace jc;
using namespace jc::testing;

namespace {
Analysis kp_analysis(const std::string& name) {
  ProblemSpec p = load_fixture(name);
  return analyze(p.F->build(), p.G->build());
}
std::vector<mpq_class> heights(const TreeModel& t) {
  std::vector<mpq_class> h;
  for (auto& b : t.bars) h.push_back(b.h);
  return h;
}
std::vector<std::pair<int, int>> bimults(const TreeBar& b) {
  std::vector<std::pair<int, int>> v;
  for (auto& t : b.trunks) v.emplace_back(t.s, t.t);
  return v;
}
}  // namespace

TEST_CASE("Kuo-Parusinski tree model, d = 1, f = 2") {
  Analysis a = kp_analysis("kp_d1_f2.json");
  TreeModel t = tree_model(a);
  CHECK(t.n == 1);
  CHECK(t.s0 == 3);
  CHECK(t.t0 == 3);
  CHECK(heights(t) == std::vector<mpq_class>{1, 2, 3, 3});
  REQUIRE(t.bars.size() == 4);
  CHECK(bimults(t.bars[0]) == std::vector<std::pair<int, int>>{{1, 0}, {2, 2}, {0, 1}});
  CHECK(bimults(t.bars[1]) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});
  CHECK(t.bars[1].M_B.zero());
  for (auto& b : t.bars) {
    CHECK(b.relation_ok);
    CHECK(b.nu_f == b.nu_f_curvette);
    CHECK(b.nu_g == b.nu_g_curvette);
  }
  CHECK(a.log.status() == 0);
  CHECK_FALSE(t.render().empty());
  CHECK_FALSE(t.table().empty());
}

TEST_CASE("Kuo-Parusinski tree model, d = 2, f = 4") {
  Analysis a = kp_analysis("kp_d2_f4.json");
  TreeModel t = tree_model(a);
  CHECK(heights(t) == std::vector<mpq_class>{1, 3, 5, 5});
  for (auto& b : t.bars) CHECK(b.relation_ok);
  CHECK(a.log.status() == 0);
}

TEST_CASE("tree model of two transversal lines") {
  Analysis a = hamiltonian_pair({smooth({1})}, {smooth({-1})});
  TreeModel t = tree_model(a);
  REQUIRE(t.bars.size() == 1);
  CHECK(t.bars[0].h == 1);
  auto bm = bimults(t.bars[0]);
  std::sort(bm.begin(), bm.end());
  CHECK(bm == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("tree model of a cusp against a parabola") {
  Analysis a = hamiltonian_pair({cusp()}, {smooth({0, 1})});
  TreeModel t = tree_model(a);
  CHECK(t.n == 2);
  auto h = heights(t);
  CHECK(std::find(h.begin(), h.end(), mpq_class(3, 2)) != h.end());
  for (auto& b : t.bars) CHECK(b.relation_ok);
}

TEST_CASE("product equation") {
  CHECK(product_equation({cusp(), smooth({0, 1})}) == (Y().pow(2) - X().pow(3)) * (Y() - X().pow(2)));
}

TEST_CASE("semiroot conditions") {
  SemirootResult r = semiroot_check(cusp(), smooth({}), 0);
  CHECK(r.ok);
  CHECK(r.deg_actual == 1);
  CHECK(r.coincidence_actual == mpq_class(3, 2));
  CHECK_FALSE(semiroot_check(cusp(), smooth({1}), 0).ok);
  Branch f(4, {{6, Scalar(1)}, {7, Scalar(1)}});
  SemirootResult r1 = semiroot_check(f, cusp(), 1);
  CHECK(r1.ok);
  CHECK(r1.deg_actual == 2);
  CHECK(r1.coincidence_actual == mpq_class(7, 4));
  CHECK_FALSE(semiroot_check(f, smooth({}), 1).ok);
}

TEST_CASE("approximate root k = 1") {
  ProblemSpec p = load_fixture("semiroot_k1.json");
  ApproxRootReport r = approx_root_analysis(p.semiroot->f, p.semiroot->h, 1);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[0].v == mpq_class(3, 2));
  CHECK(r.levels[1].v == mpq_class(7, 4));
  for (auto& L : r.levels) {
    CHECK(L.collinear == L.expected_collinear);
    if (!L.collinear) CHECK(L.packet == L.packet_oracle);
  }
  CHECK(r.levels[0].collinear);
  CHECK_FALSE(r.levels[1].collinear);
  CHECK(r.levels[1].packet == 0);
  CHECK(r.levels[1].packet_oracle == 0);
  REQUIRE(r.levels[1].numerators.size() == 2);
  for (auto& u : r.levels[1].numerators) CHECK(u.degree() == 0);
  CHECK(r.deep_roots == r.deep_expected);
  CHECK(r.a.log.status() == 0);
}

TEST_CASE("approximate root k = 0") {
  ProblemSpec p = load_fixture("semiroot_k0.json");
  ApproxRootReport r = approx_root_analysis(p.semiroot->f, p.semiroot->h, 0);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[1].expected == 2);
  CHECK(r.levels[1].packet == 2);
  CHECK(r.levels[1].packet_oracle == 2);
  CHECK(r.a.log.status() == 0);
}

TEST_CASE("polar curve of a cusp") {
  FoliationModel F = hamiltonian_model(Y().pow(2) - X().pow(3), {cusp()}, "F");
  PolarReport r = polar_analysis(F, 42);
  CHECK(r.PC == 3);
  CHECK_FALSE(r.certificate.is_zero());
  auto it = std::find_if(r.packets.begin(), r.packets.end(), [](const PolarPacket& q) { return q.v == mpq_class(3, 2); });
  REQUIRE(it != r.packets.end());
  CHECK(it->measured == it->expected);
  CHECK(it->measured == 1);
  CHECK(r.a.log.status() == 0);
}

TEST_CASE("polar curve of two transversal lines") {
  FoliationModel F = hamiltonian_model((Y() - X()) * (Y() + X()), {smooth({1}), smooth({-1})}, "F");
  PolarReport r = polar_analysis(F, Scalar(1), Scalar(5));
  REQUIRE(r.packets.size() == 1);
  CHECK(r.packets[0].expected == 1);
  CHECK(r.packets[0].measured == 1);
}

TEST_CASE("polar curve of the CE-ME logarithmic foliation") {
  ProblemSpec p = load_fixture("ce_me.json");
  PolarReport r = polar_analysis(p.F->build(), 7);
  CHECK_FALSE(r.corner_minus_one);
  for (auto& q : r.packets) CHECK(q.measured == q.expected);
  CHECK(r.a.log.status() == 0);
}

TEST_CASE("polar genericity uses the degree of the M_E1 numerator") {
  // C = {y = 2x + x^2, y = 0} with equal weights and d = 1: the expression
  // sum c + d sum I is 1, yet M_E1 has a constant numerator and the E1
  // packet is lost to the direction x = 0.
  FoliationModel F = logarithmic_model({smooth({2, 1}), smooth({})}, {Scalar(3), Scalar(3)}, "F");
  PolarReport bad = polar_analysis(F, Scalar(1), Scalar(1));
  CHECK(bad.literal_certificate == Scalar(1));
  CHECK(bad.certificate.is_zero());
  CHECK(bad.a.div(0).M.num.degree() == 0);
  CHECK_FALSE(bad.a.xt.condition_holds);
  PolarReport good = polar_analysis(F, Scalar(1), Scalar(3));
  CHECK_FALSE(good.certificate.is_zero());
  for (auto& q : good.packets) CHECK(q.measured == q.expected);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PolarReport r = polar_analysis(F, seed);
    CHECK_FALSE(r.certificate.is_zero());
    for (auto& q : r.packets) CHECK(q.measured == q.expected);
  }
}

TEST_CASE("polar draws are reproducible") {
  FoliationModel F = hamiltonian_model(Y().pow(2) - X().pow(3), {cusp()}, "F");
  PolarReport a = polar_analysis(F, 9), b = polar_analysis(F, 9);
  CHECK(a.dir_a == b.dir_a);
  CHECK(a.dir_b == b.dir_b);
}
