#include <algorithm>
#include <map>

#include "jc/fulton.hpp"
#include "jc/jacobian.hpp"

namespace jc {

namespace {

const char* kMultThm = "jacobian multiplicity theorem";
const char* kInitLemma = "initial part of the jacobian lemma";
const char* kNonColLemma = "non-collinear divisor lemma";
const char* kTransport = "Camacho-Sad index under blow-up";
const char* kIndexSum = "Camacho-Sad index sum on the first divisor";
const char* kConsec = "consecutive bifurcation divisors corollary";
const char* kColPoint = "collinear point theorem";
const char* kDecomp = "decomposition theorem";
const char* kDecompGen = "decomposition theorem for singular separatrices";
const char* kIntSep = "intersection with a separatrix proposition";
const char* kMilnor = "Milnor number proposition";
const char* kSumMult = "intersection sums corollary";
const char* kMultBound = "lower bound for the multiplicity of the jacobian";
const char* kXTangent = "x-tangency remark";
const char* kLogIndex = "logarithmic Camacho-Sad index formula";

struct PointInput {
  Scalar c;
  std::vector<int> members;
  int mC = 0, mD = 0;
  int child = -1;
};

// Tree divisors are labelled from 1 in creation order, so the root is E1.
std::string where_of(int id) { return id < 0 ? "E1(direct)" : "E" + std::to_string(id + 1); }

UPoly strip_all(UPoly p, const std::vector<Scalar>& roots) {
  for (auto& r : roots) p = p.strip_root(r);
  return p;
}

DivisorReport analyze_divisor(const OneForm& wF, const OneForm& wG, const BiPoly& J,
                              const UPoly& eps, int p, const std::vector<PointInput>& pts,
                              const std::vector<std::optional<Scalar>>& logF,
                              const std::vector<std::optional<Scalar>>& logG, int id,
                              CheckLog& log) {
  const std::string wh = where_of(id);
  DivisorReport R;
  R.id = id;
  R.p = p;
  R.b = static_cast<int>(pts.size());
  R.bifurcation = R.b >= 2;
  DivisorForm dF = divisor_form(wF, eps, p), dG = divisor_form(wG, eps, p);
  if (dF.AE.is_zero()) throw AssumptionError("dicritical divisor " + wh + " for the first foliation");
  if (dG.AE.is_zero()) throw AssumptionError("dicritical divisor " + wh + " for the second foliation");

  std::vector<Scalar> cs, deltas;
  for (size_t q = 0; q < pts.size(); ++q) {
    PointReport P;
    P.c = pts[q].c;
    P.members = pts[q].members;
    P.mC = pts[q].mC;
    P.mD = pts[q].mD;
    P.child = pts[q].child;
    P.IF = cs_index_at_divisor_point(dF, P.c);
    P.IG = cs_index_at_divisor_point(dG, P.c);
    P.delta = P.IG - P.IF;
    P.collinear = P.delta.is_zero();
    if (q < logF.size() && logF[q]) {
      P.IF_log = logF[q];
      log.add("log-index", kLogIndex, wh + " at " + P.c.str(), *P.IF_log == P.IF,
              "direct " + P.IF.str() + ", closed form " + P.IF_log->str());
    }
    if (q < logG.size() && logG[q]) {
      P.IG_log = logG[q];
      log.add("log-index", kLogIndex, wh + " at " + P.c.str(), *P.IG_log == P.IG,
              "direct " + P.IG.str() + ", closed form " + P.IG_log->str());
    }
    cs.push_back(P.c);
    deltas.push_back(P.delta);
    R.points.push_back(std::move(P));
  }

  // Singular points of the strict transforms on E must lie on Z.
  for (auto* d : {&dF, &dG}) {
    UPoly rest = strip_all(d->AE, cs);
    log.add("singular-points-on-Z", "separatrices are listed completely", wh, rest.degree() <= 0,
            rest.degree() <= 0 ? "ok" : "unlisted singular factor " + rest.str(),
            CheckKind::Assumption);
  }

  R.M = me_function(cs, deltas);
  R.collinear = R.M.zero();
  for (auto& d : deltas) R.delta_sum += d;
  for (auto& P : R.points) R.nN += P.collinear ? 0 : 1;
  R.purely_non_collinear = R.nN == R.b;

  mpq_class nuJ;
  BiPoly in = J.shift_y(eps).weighted_initial(mpq_class(p), &nuJ);
  R.nu_J = nuJ;
  R.JE = in.at_x1();
  R.JE_free = strip_all(R.JE, cs);
  R.infinity_mass = R.JE.is_zero() ? 0 : mpq_class(nuJ - p * R.JE.degree()).get_num().get_si();
  for (auto& P : R.points) P.measured = R.JE.root_multiplicity(P.c);

  if (R.collinear) return R;

  int tC = 0;
  std::vector<Scalar> Croots;
  for (auto& P : R.points) {
    if (P.collinear) {
      P.t = R.M.num.root_multiplicity(P.c);
      P.tau = P.t;
      tC += P.t;
      Croots.push_back(P.c);
    } else {
      P.tau = -1;
    }
    P.predicted = P.mC + P.mD + P.tau;
  }
  R.t_star = R.M.t - tC;

  // Lemma: the wedge of the initial parts does not vanish and gives In_p(J).
  UPoly wedgeE = dF.AE * dG.BE - dF.BE * dG.AE;
  log.add("initial-wedge", kInitLemma, wh, !wedgeE.is_zero() && proportional(wedgeE, R.JE),
          "In(omega)^In(eta)(1,y) = " + wedgeE.str() + ", In(J)(1,y) = " + R.JE.str());

  UPoly target = R.M.num_full;
  for (auto& P : R.points) target = target * UPoly::linear_root(P.c).pow(P.mC + P.mD - 1);
  R.identity_ok = !R.JE.is_zero() && proportional(R.JE, target);
  if (R.identity_ok) R.identity_const = R.JE.lead() / target.lead();
  log.add("divisor-identity", kMultThm, wh, R.identity_ok,
          "In(J)(1,y) = " + R.JE.str() + " vs prod (y-c)^(mC+mD-1) N(y) = " + target.str());

  for (auto& P : R.points)
    log.add("point-multiplicity", kMultThm, wh + " at " + P.c.str(), P.predicted == P.measured,
            "predicted " + std::to_string(P.predicted) + ", measured " + std::to_string(P.measured));
  UPoly free_pred = strip_all(R.M.num, Croots);
  log.add("free-zeros", kMultThm, wh,
          proportional(R.JE_free, free_pred) && R.JE_free.degree() == R.t_star,
          "zeros of M off Z: " + free_pred.str() + ", jacobian: " + R.JE_free.str());

  bool disjoint = true;
  for (auto& P : R.points)
    if (!P.collinear && R.M.num.eval(P.c).is_zero()) disjoint = false;
  log.add("N-M-disjoint", kNonColLemma, wh, disjoint, "N(E) and M(E) share no point");
  log.add("N-count", kNonColLemma, wh, R.nN >= R.M.t + 1,
          "#N = " + std::to_string(R.nN) + ", t = " + std::to_string(R.M.t));
  if (!R.delta_sum.is_zero())
    log.add("N-count-equality", kNonColLemma, wh, R.nN == R.M.t + 1,
            "#N = " + std::to_string(R.nN) + ", t = " + std::to_string(R.M.t));
  return R;
}

std::vector<PointInput> tree_points(const PrefixTree& t, int id) {
  std::vector<PointInput> v;
  for (auto& q : t.div(id).points) {
    PointInput P;
    P.c = q.c;
    P.members = q.members;
    P.child = q.child;
    for (int s : q.members) (t.branches()[s].side == Side::C ? P.mC : P.mD)++;
    v.push_back(std::move(P));
  }
  return v;
}

bool positive_rational(const Scalar& s) { return s.is_rational() && sgn(s.rational()) > 0; }

void transport_checks(Analysis& a) {
  for (auto& R : a.divs) {
    std::string wh = where_of(R.id);
    Scalar sF(0), sG(0);
    for (auto& P : R.points) {
      sF += P.IF;
      sG += P.IG;
    }
    if (R.parent < 0) {
      if (a.graph.ram.n != 1) continue;
      a.log.add("index-sum", kIndexSum, wh, sF == Scalar(-1) && sG == Scalar(-1),
                "sums " + sF.str() + ", " + sG.str());
      a.log.add("delta-sum", kIndexSum, wh, R.delta_sum.is_zero(), R.delta_sum.str());
      continue;
    }
    const PointReport& P = a.divs[R.parent].points[R.parent_point];
    Scalar dF = P.IF - Scalar(1), dG = P.IG - Scalar(1);
    if (!dF.is_zero())
      a.log.add("index-transport", kTransport, wh, sF == -P.IF / dF,
                "sum " + sF.str() + ", from parent " + (-P.IF / dF).str());
    if (!dG.is_zero())
      a.log.add("index-transport", kTransport, wh, sG == -P.IG / dG,
                "sum " + sG.str() + ", from parent " + (-P.IG / dG).str());
    if (!dF.is_zero() && !dG.is_zero())
      a.log.add("delta-transport", kTransport, wh, R.delta_sum == P.delta / (dF * dG),
                "sum " + R.delta_sum.str() + ", from parent " + (P.delta / (dF * dG)).str());
    if (R.b == 1)
      a.log.add("chain-collinearity", kTransport, wh, R.points[0].collinear == P.collinear,
                P.collinear ? "collinear" : "non-collinear");
  }
}

void simple_singularity_checks(Analysis& a) {
  const PrefixTree& t = a.graph.tree;
  for (auto& R : a.divs)
    for (auto& P : R.points) {
      if (P.child >= 0 || P.members.size() != 1) continue;
      Side s = t.branches()[P.members[0]].side;
      const Scalar& I = s == Side::C ? P.IF : P.IG;
      bool ok = !positive_rational(I);
      if (!ok) {
        (s == Side::C ? a.F : a.G).claims_generalized_curve = false;
        a.log.downgrade();
      }
      a.log.add("simple-singularity", "generalized curve hypothesis",
                where_of(R.id) + " at " + P.c.str(), ok, "index " + I.str(), CheckKind::Info);
    }
}

void consecutive_checks(Analysis& a) {
  const PrefixTree& t = a.graph.tree;
  for (auto& R : a.divs) {
    if (!R.bifurcation) continue;
    for (size_t q = 0; q < R.points.size(); ++q) {
      const PointReport& P = R.points[q];
      if (P.child < 0) continue;
      std::vector<int> chain;
      int E2 = t.next_bifurcation(R.id, static_cast<int>(q), &chain);
      if (E2 < 0) continue;
      const DivisorReport& N = a.divs[E2];
      std::string wh = where_of(R.id) + " -> " + where_of(E2);
      if (P.collinear) {
        a.log.add("collinear-point-sum", "collinear point corollary", wh, N.delta_sum.is_zero(),
                  N.delta_sum.str());
        continue;
      }
      if (R.collinear) continue;
      a.log.add("consecutive-non-collinear", kConsec, wh, !N.collinear, "");
      a.log.add("consecutive-count", kConsec, wh, N.M.t + 1 == N.nN,
                "t = " + std::to_string(N.M.t) + ", #N = " + std::to_string(N.nN));
      bool cons = N.JE.degree() == P.measured;
      for (int c : chain) cons = cons && a.divs[c].JE.degree() == P.measured;
      a.log.add("consecutive-conservation", kConsec, wh, cons,
                "m_P = " + std::to_string(P.measured) + ", mass on E' = " +
                    std::to_string(N.JE.degree()));
    }
  }
}

void decompose(Analysis& a) {
  Decomposition& D = a.dec;
  std::map<int, const Packet*> by_div;
  for (auto& R : a.divs) {
    if (!R.bifurcation || R.collinear) continue;
    std::string wh = where_of(R.id);
    Packet pk;
    pk.divisor = R.id;
    pk.nc = R.t_star;
    pk.nc_measured = R.JE_free.degree();
    a.log.add("nc-bound", kDecomp, wh, pk.nc <= R.nN - 1,
              "m0(J_nc) = " + std::to_string(pk.nc) + ", #N - 1 = " + std::to_string(R.nN - 1));
    for (size_t q = 0; q < R.points.size(); ++q) {
      const PointReport& P = R.points[q];
      if (!P.collinear) continue;
      CollinearPacket cp;
      cp.point = static_cast<int>(q);
      std::string whp = wh + " at " + P.c.str();
      try {
        if (P.child >= 0) cp.cover = cover_of(a, R.id, static_cast<int>(q));
      } catch (const MathError& e) {
        a.log.add("cover", kColPoint, whp, false, e.what());
      }
      cp.predicted = collinear_packet(a, R.id, static_cast<int>(q), cp.cover);
      cp.measured = P.measured;
      for (int l : cp.cover) cp.measured -= std::max(a.divs[l].JE.degree(), 0);
      std::string cov;
      for (int l : cp.cover) cov += (cov.empty() ? "" : ",") + where_of(l);
      a.log.add("collinear-packet", kColPoint, whp, cp.predicted == cp.measured,
                "cover {" + cov + "}, predicted " + std::to_string(cp.predicted) + ", measured " +
                    std::to_string(cp.measured));
      pk.collinear.push_back(std::move(cp));
    }
    if (R.purely_non_collinear && !R.delta_sum.is_zero())
      a.log.add("maximal-packet", kDecomp, wh, pk.total() == R.b - 1 && pk.nc == R.b - 1,
                "m0(J^E) = " + std::to_string(pk.total()) + ", b - 1 = " + std::to_string(R.b - 1));
    D.packets.push_back(std::move(pk));
  }
  for (auto& pk : D.packets) by_div[pk.divisor] = &pk;

  long sum = 0;
  for (auto& pk : D.packets) sum += pk.total();
  D.m0J = a.J.order();
  D.residual = D.m0J - sum;
  a.log.add("decomposition-count", kDecomp, "origin", D.residual >= 0,
            "m0(J) = " + std::to_string(D.m0J) + ", packets = " + std::to_string(sum));

  for (auto& E : a.graph.divs) {
    if (!E.bifurcation()) continue;
    GraphPacket g;
    g.divisor = E.id;
    g.v = E.v;
    g.b = E.b;
    g.n_E = E.n_E;
    g.n_under = E.n_under;
    g.associated = E.associated;
    for (int l : E.associated)
      if (a.divs[l].collinear) g.collinear = true;
    g.bound = g.n_under * g.n_E * (g.b - 1);
    if (!g.collinear) {
      for (int l : E.associated) {
        g.nc += a.divs[l].t_star;
        auto it = by_div.find(l);
        if (it != by_div.end()) g.c += it->second->c();
      }
      std::string wh = "G" + std::to_string(E.id) + " v=" + E.v.get_str();
      a.log.add("graph-nc-bound", kDecompGen, wh, g.nc <= g.bound,
                "m0(J_nc) = " + std::to_string(g.nc) + ", bound " + std::to_string(g.bound));
      if (E.dead_arc)
        a.log.add("dead-arc-bound", kDecompGen, wh, g.nc <= g.bound - g.n_under,
                  "m0(J_nc) = " + std::to_string(g.nc) + ", bound " +
                      std::to_string(g.bound - g.n_under),
                  CheckKind::Info);
    }
    D.graph_packets.push_back(std::move(g));
  }
}

DivisorReport e1_direct(Analysis& a) {
  const auto& curves = a.graph.curves;
  std::vector<PointInput> pts;
  for (size_t i = 0; i < curves.size(); ++i) {
    Scalar slope = curves[i].coeff(static_cast<int>(curves[i].n()));
    auto it = std::find_if(pts.begin(), pts.end(), [&](const PointInput& P) { return P.c == slope; });
    if (it == pts.end()) {
      pts.push_back(PointInput{slope, {}, 0, 0, -1});
      it = pts.end() - 1;
    }
    it->members.push_back(static_cast<int>(i));
    (a.graph.sides[i] == Side::C ? it->mC : it->mD) += static_cast<int>(curves[i].n());
  }
  std::vector<std::optional<Scalar>> logF(pts.size()), logG(pts.size());
  size_t nF = a.F.separatrices.size();
  auto fill = [&](const FoliationModel& M, Side side, std::vector<std::optional<Scalar>>& out) {
    if (!M.has_log_data()) return;
    Scalar kappa(0);
    for (size_t i = 0; i < curves.size(); ++i)
      if (a.graph.sides[i] == side)
        kappa += M.lambda[side == Side::C ? i : i - nF] * Scalar(static_cast<long>(curves[i].n()));
    if (kappa.is_zero()) return;
    for (size_t q = 0; q < pts.size(); ++q) {
      Scalar s(0);
      for (int i : pts[q].members)
        if (a.graph.sides[i] == side)
          s += M.lambda[side == Side::C ? i : i - nF] * Scalar(static_cast<long>(curves[i].n()));
      out[q] = -s / kappa;
    }
  };
  fill(a.F, Side::C, logF);
  fill(a.G, Side::D, logG);
  return analyze_divisor(a.F.omega, a.G.omega, a.J, UPoly(), 1, pts, logF, logG, -1, a.log);
}

Branch curvette(const TreeDivisor& d, unsigned n) {
  long c = 1;
  for (;; ++c) {
    bool clash = false;
    for (auto& P : d.points)
      if (P.c == Scalar(c)) clash = true;
    if (!clash) break;
  }
  std::vector<std::pair<int, Scalar>> terms;
  for (size_t j = 0; j < d.prefix.size(); ++j)
    if (!d.prefix[j].is_zero()) terms.emplace_back(static_cast<int>(j + 1), d.prefix[j]);
  terms.emplace_back(d.p, Scalar(c));
  return Branch(n, std::move(terms), 0, "curvette");
}

void intersection_checks(Analysis& a) {
  IntersectionReport& I = a.inter;
  const auto& curves = a.graph.curves;
  for (size_t i = 0; i < curves.size(); ++i) {
    bool onF = a.graph.sides[i] == Side::C;
    const OneForm& own = onF ? a.F.omega : a.G.omega;
    const OneForm& other = onF ? a.G.omega : a.F.omega;
    Param g = curves[i].param();
    SeparatrixIntersection s;
    s.label = curves[i].label();
    s.side = a.graph.sides[i];
    s.JS = evaluate_along(a.J, g, kInfinite);
    s.mu = milnor_along(own, g);
    s.tau = tangency_order(other, g);
    a.log.add("separatrix-intersection", kIntSep, s.label, s.JS == s.mu + s.tau,
              "(J,S) = " + std::to_string(s.JS) + ", mu + tau = " + std::to_string(s.mu) + " + " +
                  std::to_string(s.tau));
    (onF ? I.JSF : I.JSG) += s.JS;
    I.seps.push_back(s);
  }
  try {
    I.mu_F = mu0(a.F);
    I.mu_G = mu0(a.G);
  } catch (const MathError& e) {
    a.log.add("milnor-number", kMilnor, "origin", false, e.what(), CheckKind::Assumption);
  }
  if (I.mu_F && I.mu_G)
    a.log.add("milnor-difference", kMilnor, "origin", I.JSF - I.JSG == *I.mu_F - *I.mu_G,
              "(J,S_F) - (J,S_G) = " + std::to_string(I.JSF - I.JSG) + ", mu(F) - mu(G) = " +
                  std::to_string(*I.mu_F - *I.mu_G));
  if (a.graph.ram.n != 1) return;

  const PrefixTree& t = a.graph.tree;
  std::vector<long> lhs(curves.size(), 0);
  long lhs2 = 0;
  for (auto& pk : a.dec.packets) {
    Branch gam = curvette(t.div(pk.divisor), 1);
    IntersectionReport::Nu nu{pk.divisor, 0, 0, pk.nc};
    for (size_t i = 0; i < curves.size(); ++i) {
      long k = intersection_multiplicity(gam, curves[i]);
      (a.graph.sides[i] == Side::C ? nu.nuC : nu.nuD) += k;
      lhs[i] += pk.nc * k;
    }
    lhs2 += pk.nc * (nu.nuC - nu.nuD);
    I.nu.push_back(nu);
  }
  for (size_t i = 0; i < curves.size(); ++i)
    a.log.add("packet-intersection-sum", kSumMult, curves[i].label(), lhs[i] <= I.seps[i].JS,
              std::to_string(lhs[i]) + " <= " + std::to_string(I.seps[i].JS));
  // The difference form subtracts two inequalities and fails when J* meets
  // D more often than C (a branch of J* transversal to everything, with
  // more branches in D than in C), so it is reported, not enforced.
  if (I.mu_F && I.mu_G)
    a.log.add("packet-milnor-sum", kSumMult, "origin", lhs2 <= *I.mu_F - *I.mu_G,
              std::to_string(lhs2) + " <= " + std::to_string(*I.mu_F - *I.mu_G) + ", (J*,C) - (J*,D) = " +
                  std::to_string(*I.mu_F - *I.mu_G - lhs2),
              CheckKind::Info);
}

void x_tangency(Analysis& a) {
  XTangency& X = a.xt;
  for (auto& P : a.e1.points) X.quantity += P.delta * P.c;
  X.condition_holds = !X.quantity.is_zero();
  BiPoly in = a.J.weighted_initial(mpq_class(1));
  X.x_divides_initial = true;
  for (auto& [e, c] : in.terms())
    if (e.first == 0) X.x_divides_initial = false;
  if (!a.e1.collinear)
    a.log.add("x-tangency", kXTangent, "E1", !X.condition_holds || !X.x_divides_initial,
              "sum Delta c = " + X.quantity.str() +
                  (X.x_divides_initial ? ", x divides In(J)" : ", x does not divide In(J)"));
  if (a.F.has_log_data() && a.G.has_log_data()) {
    const auto& curves = a.graph.curves;
    size_t nF = a.F.separatrices.size();
    Scalar kF(0), kG(0), sa(0), sb(0);
    for (size_t i = 0; i < curves.size(); ++i) {
      Scalar n(static_cast<long>(curves[i].n()));
      Scalar slope = curves[i].coeff(static_cast<int>(curves[i].n()));
      if (i < nF) {
        kF += a.F.lambda[i] * n;
        sa += a.F.lambda[i] * n * slope;
      } else {
        kG += a.G.lambda[i - nF] * n;
        sb += a.G.lambda[i - nF] * n * slope;
      }
    }
    X.log_expression = kF * sb - kG * sa;
    a.log.add("x-tangency-closed-form", kXTangent, "E1",
              *X.log_expression == -(kF * kG) * X.quantity, X.log_expression->str());
  }
}

}  // namespace

Analysis analyze(const FoliationModel& F, const FoliationModel& G, const AnalysisOptions& opt) {
  Analysis a;
  a.F = F;
  a.G = G;
  if (F.separatrices.empty() || G.separatrices.empty())
    throw InputError("each foliation needs at least one separatrix");
  for (auto* M : {&F, &G})
    for (auto& l : M->lambda)
      if (l.is_zero()) throw InputError("residues must be nonzero");
  a.assumptions = {"non-dicritical foliations", "generalized curve foliations",
                   "no common separatrix", "the listed separatrices are all of them",
                   "second type (Milnor number identity)"};

  for (auto* M : {&F, &G})
    for (auto& S : M->separatrices) {
      long tau = tangency_order(M->omega, S.param());
      a.log.add("separatrix-invariance", "separatrices are invariant", M->name + ":" + S.label(),
                tau == kInfinite, tau == kInfinite ? "ok" : "pullback has order " + std::to_string(tau),
                CheckKind::Assumption);
    }

  std::vector<Branch> curves = F.separatrices;
  std::vector<Side> sides(curves.size(), Side::C);
  for (auto& b : G.separatrices) {
    curves.push_back(b);
    sides.push_back(Side::D);
  }
  try {
    a.graph = build_dual_graph(curves, sides, opt.ramification);
  } catch (const InputError& e) {
    if (std::string(e.what()).find("common branch") != std::string::npos)
      throw AssumptionError(std::string("common separatrix: ") + e.what());
    throw;
  }
  a.J = jacobian_form(F.omega, G.omega);
  unsigned n = a.graph.ram.n;
  a.wF = F.omega.ramify(n).saturated();
  a.wG = G.omega.ramify(n).saturated();
  a.Jr = a.J.ramify(n);

  const PrefixTree& t = a.graph.tree;
  size_t ns = t.branches().size();
  std::vector<Scalar> lamS(ns, Scalar(0)), muS(ns, Scalar(0));
  size_t nF = F.separatrices.size();
  for (size_t s = 0; s < ns; ++s) {
    const SmoothBranch& b = t.branches()[s];
    if (b.side == Side::C && F.has_log_data()) lamS[s] = F.lambda.at(b.curve);
    if (b.side == Side::D && G.has_log_data()) muS[s] = G.lambda.at(b.curve - nF);
  }

  try {
    for (auto& d : t.divisors()) {
      auto pts = tree_points(t, d.id);
      std::vector<std::optional<Scalar>> logF(pts.size()), logG(pts.size());
      for (size_t q = 0; q < pts.size(); ++q) {
        if (F.has_log_data()) logF[q] = log_cs_index(t, lamS, d.id, static_cast<int>(q));
        if (G.has_log_data()) logG[q] = log_cs_index(t, muS, d.id, static_cast<int>(q));
      }
      DivisorReport R =
          analyze_divisor(a.wF, a.wG, a.Jr, d.eps(), d.p, pts, logF, logG, d.id, a.log);
      R.parent = d.parent;
      R.parent_point = d.parent_point;
      a.divs.push_back(std::move(R));
    }
    a.e1 = e1_direct(a);
  } catch (const MathError& e) {
    throw AssumptionError(e.what());
  }

  transport_checks(a);
  simple_singularity_checks(a);
  consecutive_checks(a);
  decompose(a);

  a.nu_F = nu0(F);
  a.nu_G = nu0(G);
  a.m0J = a.J.order();
  a.log.add("multiplicity-lower-bound", kMultBound, "origin", a.m0J >= a.nu_F + a.nu_G,
            std::to_string(a.m0J) + " >= " + std::to_string(a.nu_F) + " + " + std::to_string(a.nu_G));
  if (!a.e1.collinear)
    a.log.add("multiplicity-equality", kMultBound, "origin", a.m0J == a.nu_F + a.nu_G,
              std::to_string(a.m0J) + " = " + std::to_string(a.nu_F) + " + " + std::to_string(a.nu_G));
  if (n == 1) {
    bool same = a.e1.M.num == a.divs[0].M.num && a.e1.JE == a.divs[0].JE;
    a.log.add("first-divisor-consistency", "first blow-up computed twice", "E1", same, "",
              CheckKind::Internal);
  }
  x_tangency(a);
  if (opt.intersections) intersection_checks(a);
  return a;
}

}  // namespace jc
