// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "jc/expr.hpp"
#include "jc/problem.hpp"
#include "random_models.hpp"

using namespace jc;
using namespace jc::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(JACURVE_FIXTURES) + "/" + name; }

UPoly Z() { return UPoly::monomial(Scalar(1), 1); }

// Collects failure messages for one criterion; keeps the first few.
struct Verdict {
  long failures = 0;
  std::vector<std::string> witnesses;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (witnesses.size() < 5) witnesses.push_back(what);
  }
};

Analysis analyze_fixture(const std::string& name) {
  ProblemSpec p = load_problem(fixture(name));
  return analyze(p.F->build(), p.G->build());
}

// Analyses of the random pairs, computed by criterion 3 and reused by 4 and 5.
std::vector<Analysis> g_pair_analyses;

const Analysis& pair_analysis(const std::vector<RandomPair>& pairs, size_t i) {
  if (g_pair_analyses.size() != pairs.size()) {
    g_pair_analyses.clear();
    for (const RandomPair& rp : pairs) g_pair_analyses.push_back(analyze(rp.F, rp.G));
  }
  return g_pair_analyses[i];
}

bool same_rational_function(const MeromorphicME& m, const UPoly& num, const UPoly& den) {
  return !m.zero() && m.num * den == num * m.den;
}

long failed_checks(const CheckLog& log, const std::string& name) {
  long n = 0;
  for (auto& c : log.all())
    if (c.name == name && !c.ok) ++n;
  return n;
}

void criterion1(Verdict& v) {
  Analysis a = analyze_fixture("ce_me.json");
  const DivisorReport& e2 = a.div(1);
  v.expect(e2.p == 2 && e2.points.size() == 3, "E2 is not the depth-two divisor with three points");
  if (v.failures) return;
  std::vector<Scalar> c, d;
  for (auto& P : e2.points) c.push_back(P.c), d.push_back(P.delta);
  v.expect(c == std::vector<Scalar>{Scalar(-1), Scalar(1), Scalar(-2)}, "E2 point coordinates");
  v.expect(d == std::vector<Scalar>{Scalar::frac(-2, 11), Scalar(0), Scalar::frac(3, 11)}, "Delta table at E2");
  UPoly den = (Z() + Scalar(2)) * (Z() + Scalar(1)) * Scalar(11);
  v.expect(same_rational_function(e2.M, Z() - Scalar(1), den), "M_E2 = " + e2.M.str());
  v.expect(e2.points[1].collinear && e2.points[1].tau > 0, "C(E2) = M(E2) = {R2}");
  v.expect(!e2.points[0].collinear && e2.points[0].tau == -1, "R1 in N(E2)");
  v.expect(!e2.points[2].collinear && e2.points[2].tau == -1, "R3 in N(E2)");
  v.expect(a.log.status() == 0, "check log status " + std::to_string(a.log.status()));
}

void criterion2(Verdict& v) {
  ProblemSpec p = load_problem(fixture("x_cono_tg.json"));
  Analysis a = analyze(p.F->build(), p.G->build());
  BiPoly expect = parse_poly("3x*(y^3 - 6x*y^2 + 2x^4*y^2 - 12x^5*y + 20x^6)");
  v.expect(a.J == expect, "J = " + a.J.str());
  UPoly den = Z() * (Z() - Scalar(1)) * (Z() - Scalar(2)) * (Z() - Scalar(3));
  v.expect(same_rational_function(a.div(0).M, Scalar(6) - Z(), den), "M_E1 = " + a.div(0).M.str());
  v.expect(!a.xt.condition_holds, "x-tangency condition reported as holding");
}

void criterion3(Verdict& v, const std::vector<RandomPair>& pairs) {
  long divisors = 0, points = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const RandomPair& rp = pairs[i];
    const Analysis& a = pair_analysis(pairs, i);
    for (const DivisorReport& E : a.divs) {
      if (!E.bifurcation || E.collinear) continue;
      ++divisors;
      v.expect(E.identity_ok, "divisor identity E" + std::to_string(E.id + 1) + " on " + rp.description);
      for (size_t k = 0; k < E.points.size(); ++k) {
        ++points;
        const PointReport& P = E.points[k];
        v.expect(P.measured == predicted_multiplicity(E, static_cast<int>(k)) && P.measured == P.predicted,
                 "point multiplicity E" + std::to_string(E.id + 1) + " at " + P.c.str() + " on " + rp.description);
      }
    }
    long bad = failed_checks(a.log, "divisor-identity") + failed_checks(a.log, "point-multiplicity");
    v.expect(bad == 0, "failed divisor checks on " + rp.description);
  }
  v.note = std::to_string(pairs.size()) + " pairs, " + std::to_string(divisors) + " non-collinear divisors, " +
           std::to_string(points) + " points";
}

void criterion4(Verdict& v, const std::vector<RandomPair>& pairs) {
  long seps = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (auto& s : pair_analysis(pairs, i).inter.seps) {
      ++seps;
      v.expect(s.JS == s.mu + s.tau, "(J," + s.label + ") on " + pairs[i].description);
    }
  }
  Rng rng(4004);
  long hams = 0;
  while (hams < 60) {
    std::vector<Branch> C, D;
    int nc = std::uniform_int_distribution<int>(1, 3)(rng), nd = std::uniform_int_distribution<int>(1, 3)(rng);
    random_smooth_configuration(rng, nc, nd, 4, C, D);
    Analysis a = hamiltonian_pair(C, D);
    ++hams;
    std::string desc = "f: " + describe(C) + "; g: " + describe(D);
    for (auto& s : a.inter.seps) {
      ++seps;
      v.expect(s.JS == s.mu + s.tau, "(J," + s.label + ") on " + desc);
    }
    v.expect(a.inter.mu_F && a.inter.mu_G, "Milnor numbers missing on " + desc);
    if (a.inter.mu_F && a.inter.mu_G)
      v.expect(a.inter.JSF - a.inter.JSG == *a.inter.mu_F - *a.inter.mu_G, "Milnor difference on " + desc);
  }
  v.note = std::to_string(seps) + " separatrices, " + std::to_string(hams) + " hamiltonian pairs";
}

void criterion5(Verdict& v, const std::vector<RandomPair>& pairs) {
  long equalities = 0;
  auto one = [&](const Analysis& a, const std::string& desc) {
    v.expect(a.m0J >= a.nu_F + a.nu_G, "lower bound on " + desc);
    if (!a.div(0).collinear) {
      ++equalities;
      v.expect(a.m0J == a.nu_F + a.nu_G, "equality with E1 non-collinear on " + desc);
    }
  };
  for (size_t i = 0; i < pairs.size(); ++i) one(pair_analysis(pairs, i), pairs[i].description);
  for (const char* name : {"ce_me.json", "x_cono_tg.json", "kp_d1_f2.json", "kp_d2_f4.json"})
    one(analyze_fixture(name), name);
  v.note = std::to_string(pairs.size() + 4) + " instances, " + std::to_string(equalities) + " with E1 non-collinear";
}

void criterion6(Verdict& v) {
  struct Case {
    const char* file;
    int d, f;
  };
  for (Case c : {Case{"kp_d1_f2.json", 1, 2}, Case{"kp_d2_f4.json", 2, 4}}) {
    Analysis a = analyze_fixture(c.file);
    TreeModel t = tree_model(a);
    std::string w = std::string(c.file) + ": ";
    v.expect(t.bars.size() == 4, w + "bar count " + std::to_string(t.bars.size()));
    if (t.bars.size() != 4) continue;
    std::vector<mpq_class> h, expect{1, c.d + 1, c.f + 1, c.f + 1};
    for (auto& b : t.bars) h.push_back(b.h);
    v.expect(h == expect, w + "bar heights");
    std::vector<std::pair<int, int>> on, on_expect{{3, 3}, {2, 2}, {1, 1}, {1, 1}};
    for (auto& b : t.bars) on.emplace_back(b.s, b.t);
    v.expect(on == on_expect, w + "bimultiplicities of the trunks under the bars");
    v.expect(t.s0 == 3 && t.t0 == 3, w + "main trunk");
    for (auto& b : t.bars) v.expect(b.relation_ok, w + "M_E~ = -n M_B at bar " + std::to_string(b.id));
  }
}

void criterion7(Verdict& v) {
  ProblemSpec p1 = load_problem(fixture("semiroot_k1.json"));
  ApproxRootReport r1 = approx_root_analysis(p1.semiroot->f, p1.semiroot->h, 1);
  v.expect(r1.semiroot.ok, "y^2 - x^3 is not a 1-semiroot: " + r1.semiroot.reason);
  v.expect(r1.levels.size() == 2, "level count");
  if (r1.levels.size() != 2) return;
  v.expect(r1.levels[0].collinear && !r1.levels[1].collinear, "non-collinear set is not {E2}");
  for (auto& u : r1.levels[1].numerators) v.expect(u.degree() == 0, "non-constant numerator at E_{k+1}: " + u.str());
  v.expect(r1.levels[1].packet == 0 && r1.levels[1].packet_oracle == 0,
           "J^{k+1} not empty: pipeline " + std::to_string(r1.levels[1].packet) + ", oracle " +
               std::to_string(r1.levels[1].packet_oracle));
  v.expect(r1.deep_roots == r1.deep_expected, "deep roots of the direct jacobian");

  ProblemSpec p0 = load_problem(fixture("semiroot_k0.json"));
  ApproxRootReport r0 = approx_root_analysis(p0.semiroot->f, p0.semiroot->h, 0);
  v.expect(r0.levels.size() == 2, "k=0 level count");
  if (r0.levels.size() != 2) return;
  const RootLevel& L = r0.levels[1];
  v.expect(L.expected == 2, "n1(n2 - 1) = " + std::to_string(L.expected));
  v.expect(L.packet == 2 && L.packet_oracle == 2,
           "m0(J^2) at k=0: pipeline " + std::to_string(L.packet) + ", oracle " + std::to_string(L.packet_oracle));
  v.expect(r1.a.log.status() == 0 && r0.a.log.status() == 0, "check log status");
  v.note = "k=1: non-collinear {E2}, J^2 = J^{k+1} empty (oracle 0); k=0: m0(J^2) = n1(n2-1) = 2 (oracle " +
           std::to_string(L.packet_oracle) + ")";
}

void criterion8(Verdict& v) {
  ProblemSpec p = load_problem(fixture("polar_cusp.json"));
  PolarReport r = polar_analysis(p.F->build(), p.options.seed);
  long nonzero = 0;
  for (auto& q : r.packets) {
    v.expect(q.measured == q.expected, "cusp packet at v=" + q.v.get_str());
    if (q.measured > 0) {
      ++nonzero;
      v.expect(q.measured == 1 && q.v == mpq_class(3, 2), "cusp packet multiplicity");
    }
  }
  v.expect(nonzero == 1, "cusp packet count " + std::to_string(nonzero));
  v.expect(r.PC == 3, "(P,C) = " + std::to_string(r.PC));

  Rng rng(8008);
  long models = 0, draws = 0, divisors = 0;
  while (models < 60 && draws < 1000) {
    ++draws;
    FoliationModel F = random_log_model(rng);
    PolarReport q = polar_analysis(F, draws);
    if (q.corner_minus_one) continue;
    ++models;
    for (auto& pk : q.packets) {
      ++divisors;
      v.expect(pk.measured == pk.expected, "packet at v=" + pk.v.get_str() + " measured " +
                                               std::to_string(pk.measured) + ", b^C - 1 = " +
                                               std::to_string(pk.expected) + " on " + describe(F.separatrices));
    }
    v.expect(q.a.log.status() == 0, "check log status on " + describe(F.separatrices));
  }
  v.expect(models >= 50, "only " + std::to_string(models) + " non-resonant models");
  v.note = "cusp (P,C)=" + std::to_string(r.PC) + "; " + std::to_string(models) + " non-resonant models, " +
           std::to_string(divisors) + " bifurcation divisors";
}

void criterion9(Verdict& v) {
  Rng rng(9009);
  long curves = 0, singular = 0;
  while (singular < 60 || curves < 60) {
    std::vector<Branch> c = random_singular_curve(rng, 4);
    bool any = false;
    for (auto& b : c) any = any || b.n() > 1;
    if (!any) continue;
    ++curves;
    for (auto& b : c) singular += b.n() > 1;
    DualGraph g = build_dual_graph(c, std::vector<Side>(c.size(), Side::C));
    for (auto& m : ramification_violations(g)) v.expect(false, m + " on " + describe(c));
  }
  v.note = std::to_string(curves) + " curves, " + std::to_string(singular) + " singular branches";
}

}  // namespace

int main() {
  Rng rng(3003);
  std::vector<RandomPair> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back(random_log_pair(rng));

  struct Criterion {
    int id;
    std::string title;
    double limit;  // seconds, 0 for none
    std::function<void(Verdict&)> run;
  };
  std::vector<Criterion> all = {
      {1, "CE-ME reproduction", 1, criterion1},
      {2, "x-cono-tg reproduction", 1, criterion2},
      {3, "multiplicity theorem suite", 60, [&](Verdict& v) { criterion3(v, pairs); }},
      {4, "intersection identities", 0, [&](Verdict& v) { criterion4(v, pairs); }},
      {5, "lower bound and E1 equality", 0, [&](Verdict& v) { criterion5(v, pairs); }},
      {6, "Kuo-Parusinski tree models", 0, criterion6},
      {7, "approximate roots", 5, criterion7},
      {8, "polar curves", 30, criterion8},
      {9, "ramification correspondence", 0, criterion9},
  };
  int failed = 0;
  for (auto& c : all) {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0) v.expect(s < c.limit, "runtime " + std::to_string(s) + " s over the limit");
    bool ok = v.failures == 0;
    failed += !ok;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs;
    if (c.limit > 0) std::cout << ", limit " << c.limit << "s";
    std::cout << ")";
    if (!v.note.empty()) std::cout << " [" << v.note << "]";
    std::cout << "\n";
    for (auto& w : v.witnesses) std::cout << "    " << w << "\n";
    if (v.failures > static_cast<long>(v.witnesses.size()))
      std::cout << "    ... " << v.failures - static_cast<long>(v.witnesses.size()) << " more\n";
  }
  return failed == 0 ? 0 : 1;
}
