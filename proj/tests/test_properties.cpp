#include "doctest.h"
#include "jc/expr.hpp"
#include "jc/fulton.hpp"
#include "random_models.hpp"
#include "test_util.hpp"

using namespace jc;
using namespace jc::testing;

namespace {

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar random_scalar(Rng& rng) {
  static const unsigned conductors[] = {1, 3, 4, 5, 6};
  Scalar s = Scalar(mpq_class(pick(rng, -5, 5), pick(rng, 1, 4)));
  unsigned n = conductors[pick(rng, 0, 4)];
  if (n > 1) s = s + Scalar::zeta(n, static_cast<unsigned>(pick(rng, 1, n - 1))) * Scalar(pick(rng, -3, 3));
  return s;
}

BiPoly random_poly(Rng& rng) {
  BiPoly p;
  int terms = static_cast<int>(pick(rng, 1, 6));
  for (int k = 0; k < terms; ++k)
    p.add_term(static_cast<int>(pick(rng, 0, 5)), static_cast<int>(pick(rng, 0, 5)),
               Scalar(mpq_class(pick(rng, -9, 9), pick(rng, 1, 6))));
  return p;
}

}  // namespace

TEST_CASE("scalar field axioms over cyclotomic fields") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    CHECK(parse_scalar(a.str()) == a);
  }
}

TEST_CASE("polynomial printing round-trips through the parser") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    BiPoly p = random_poly(rng);
    CHECK(parse_poly(p.str()) == p);
  }
}

TEST_CASE("univariate division identity") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    UPoly a, b;
    for (int k = 0; k <= pick(rng, 0, 6); ++k) a = a + UPoly::monomial(Scalar(pick(rng, -5, 5)), k);
    for (int k = 0; k <= pick(rng, 0, 3); ++k) b = b + UPoly::monomial(Scalar(pick(rng, -5, 5)), k);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("Fulton's algorithm agrees with branch intersections") {
  Rng rng(14);
  int done = 0;
  for (int i = 0; i < 60; ++i) {
    Branch a = random_singular_branch(rng, 3, "a");
    Branch b = pick(rng, 0, 1) ? random_singular_branch(rng, 3, "b") : random_smooth_branch(rng, {a}, 4, "b");
    if (implicit_equation(a) == implicit_equation(b)) continue;
    long expect = intersection_multiplicity(a, b);
    INFO(describe({a, b}));
    CHECK(local_intersection(implicit_equation(a), implicit_equation(b)) == expect);
    CHECK(merle_intersection(a, b) == expect);
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("local intersection is symmetric and additive") {
  Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    Branch a = random_singular_branch(rng, 3, "a");
    std::vector<Branch> bc = random_singular_curve(rng, 3);
    if (bc.size() < 2) continue;
    BiPoly f = implicit_equation(a), g = implicit_equation(bc[0]), h = implicit_equation(bc[1]);
    if (f == g || f == h) continue;
    INFO(describe({a, bc[0], bc[1]}));
    CHECK(local_intersection(f, g) == local_intersection(g, f));
    CHECK(local_intersection(f, g * h) == local_intersection(f, g) + local_intersection(f, h));
  }
}

TEST_CASE("random logarithmic pairs satisfy the divisor theorems") {
  Rng rng(16);
  for (int i = 0; i < 30; ++i) {
    RandomPair rp = random_log_pair(rng);
    INFO(rp.description);
    Analysis a = analyze(rp.F, rp.G);
    CHECK(a.log.status() == 0);
    CHECK(a.m0J >= a.nu_F + a.nu_G);
    CHECK(a.div(0).delta_sum.is_zero());
    for (const DivisorReport& E : a.divs) {
      if (!E.bifurcation) continue;
      CHECK(E.identity_ok);
      // M_E agrees with the partial fraction sum at a point off the divisor points.
      Scalar z0 = Scalar::frac(1000003, 7);
      Scalar sum(0);
      for (auto& P : E.points) sum = sum + P.delta * (z0 - P.c).inv();
      Scalar m = E.M.zero() ? Scalar(0) : E.M.num.eval(z0) * E.M.den.eval(z0).inv();
      CHECK(m == sum);
      if (E.collinear) continue;
      for (size_t k = 0; k < E.points.size(); ++k)
        CHECK(E.points[k].measured == predicted_multiplicity(E, static_cast<int>(k)));
    }
  }
}

TEST_CASE("random singular curves satisfy the ramification correspondence") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    std::vector<Branch> c = random_singular_curve(rng, 4);
    INFO(describe(c));
    DualGraph g = build_dual_graph(c, std::vector<Side>(c.size(), Side::C));
    std::vector<std::string> bad = ramification_violations(g);
    CHECK(bad.empty());
  }
}

TEST_CASE("polars of random non-resonant logarithmic models") {
  Rng rng(18);
  int nonresonant = 0;
  for (int i = 0; i < 20; ++i) {
    FoliationModel F = random_log_model(rng);
    PolarReport r = polar_analysis(F, static_cast<std::uint64_t>(i + 1));
    if (r.corner_minus_one) continue;
    ++nonresonant;
    for (auto& q : r.packets) CHECK(q.measured == q.expected);
    CHECK(r.a.log.status() == 0);
  }
  CHECK(nonresonant > 0);
}
