#include "jc/applications.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace jc {

namespace {

const char* kTree = "tree model correspondence";
const char* kNuKappa = "bar order as a logarithmic kappa";
const char* kMB = "bar rational function relation";
const char* kSemiroot = "characteristic approximate root properties";
const char* kRootCol = "approximate root collinearity lemma";
const char* kRootEmpty = "first non-collinear level carries no jacobian branch";
const char* kRootDec = "approximate root decomposition corollary";
const char* kPolarLemma = "polar corner index lemma";
const char* kPolarDec = "polar decomposition";
const char* kPolarCert = "polar first divisor genericity";

Scalar q(const mpq_class& v) { return Scalar(v); }

// Order in x of P along y = eps_E(x^(1/n)) + c x^(p/n) with c off the points of E.
mpq_class curvette_order(const BiPoly& P, const TreeDivisor& d, unsigned n) {
  long c = 1;
  while (std::any_of(d.points.begin(), d.points.end(),
                     [&](const TreePoint& R) { return R.c == Scalar(c); }))
    ++c;
  Param g;
  g.exact = true;
  g.xs.assign(n + 1, Scalar(0));
  g.xs[n] = Scalar(1);
  g.ys.assign(d.p + 1, Scalar(0));
  for (size_t j = 0; j < d.prefix.size(); ++j) g.ys[j + 1] = d.prefix[j];
  g.ys[d.p] = Scalar(c);
  long o = evaluate_along(P, g, kInfinite);
  if (o == kInfinite) throw InternalError("curvette contained in the curve");
  return ratio(o, n);
}

}  // namespace

BiPoly product_equation(const std::vector<Branch>& branches) {
  BiPoly f(Scalar(1));
  for (auto& b : branches) {
    if (!b.exact()) throw InputError("branch " + b.label() + " must be exact to form its equation");
    f = f * implicit_equation(b);
  }
  return f;
}

Analysis hamiltonian_pair(const std::vector<Branch>& f, const std::vector<Branch>& g,
                          const AnalysisOptions& opt) {
  return analyze(hamiltonian_model(product_equation(f), f, "f"),
                 hamiltonian_model(product_equation(g), g, "g"), opt);
}

// ---------------------------------------------------------------- tree model

TreeModel tree_model(Analysis& a) {
  if (a.F.kind != FoliationKind::Hamiltonian || a.G.kind != FoliationKind::Hamiltonian)
    throw InputError("tree models are defined for pairs of hamiltonian foliations");
  const PrefixTree& t = a.graph.tree;
  TreeModel T;
  T.n = a.graph.ram.n;
  for (size_t i = 0; i < a.graph.curves.size(); ++i)
    (a.graph.sides[i] == Side::C ? T.s0 : T.t0) += static_cast<int>(a.graph.curves[i].n());

  BiPoly f = product_equation(a.F.separatrices), g = product_equation(a.G.separatrices);
  std::vector<Scalar> lamC(t.branches().size(), Scalar(0)), lamD = lamC;
  for (size_t s = 0; s < t.branches().size(); ++s)
    (t.branches()[s].side == Side::C ? lamC : lamD)[s] = Scalar(1);

  std::vector<int> bar_of(t.divisors().size(), -1);
  for (int id : t.bifurcation_divisors()) {
    const TreeDivisor& d = t.div(id);
    const DivisorReport& R = a.div(id);
    TreeBar B;
    B.id = static_cast<int>(T.bars.size());
    B.tree_div = id;
    B.graph_div = a.graph.find_by_tree(id);
    B.h = ratio(d.p, T.n);
    for (int m : d.members) (t.branches()[m].side == Side::C ? B.s : B.t) += 1;
    for (int cur = id; t.div(cur).parent >= 0; cur = t.div(cur).parent) {
      int par = t.div(cur).parent;
      if (t.div(par).bifurcation()) {
        B.parent_bar = bar_of[par];
        B.parent_trunk = t.div(cur).parent_point;
        break;
      }
    }
    std::string wh = "bar B" + std::to_string(B.id) + " (E" + std::to_string(id + 1) + ")";
    if (B.graph_div >= 0) {
      const mpq_class& v = a.graph.divs[B.graph_div].v;
      a.log.add("bar-height", kTree, wh, v == B.h,
                "h = " + B.h.get_str() + ", v(E) = " + v.get_str(), CheckKind::Internal);
    } else {
      a.log.add("bar-height", kTree, wh, false, "no divisor of G(Z) is associated",
                CheckKind::Internal);
    }

    B.nu_f = log_kappa(t, lamC, id).rational() / T.n;
    B.nu_g = log_kappa(t, lamD, id).rational() / T.n;
    B.nu_f_curvette = curvette_order(f, d, T.n);
    B.nu_g_curvette = curvette_order(g, d, T.n);
    a.log.add("bar-order", kNuKappa, wh,
              B.nu_f == B.nu_f_curvette && B.nu_g == B.nu_g_curvette,
              "kappa/n = (" + B.nu_f.get_str() + ", " + B.nu_g.get_str() + "), curvette = (" +
                  B.nu_f_curvette.get_str() + ", " + B.nu_g_curvette.get_str() + ")");

    std::vector<Scalar> cs;
    int sum_s = 0, sum_t = 0;
    for (size_t k = 0; k < d.points.size(); ++k) {
      TreeTrunk tr;
      tr.c = d.points[k].c;
      tr.s = R.points[k].mC;
      tr.t = R.points[k].mD;
      sum_s += tr.s;
      sum_t += tr.t;
      Scalar det = q(B.nu_f) * Scalar(tr.t) - q(B.nu_g) * Scalar(tr.s);
      B.det.push_back(det);
      B.delta_B.push_back(det / q(B.nu_f * B.nu_g * T.n * T.n));
      cs.push_back(tr.c);
      B.trunks.push_back(std::move(tr));
    }
    a.log.add("trunk-bimultiplicity", kTree, wh, sum_s == B.s && sum_t == B.t,
              "[" + std::to_string(B.s) + "," + std::to_string(B.t) + "] splits into trunks summing to [" +
                  std::to_string(sum_s) + "," + std::to_string(sum_t) + "]",
              CheckKind::Internal);
    B.M_B = me_function(cs, B.delta_B);
    UPoly lhs = R.M.num_full, rhs = B.M_B.num_full * Scalar(-static_cast<long>(T.n));
    B.relation_ok = lhs == rhs;
    a.log.add("bar-function", kMB, wh, B.relation_ok,
              "M_E~ numerator " + lhs.str("z") + ", -n M_B numerator " + rhs.str("z"));
    bar_of[id] = B.id;
    T.bars.push_back(std::move(B));
  }
  for (auto& B : T.bars)
    for (size_t k = 0; k < B.trunks.size(); ++k) {
      int nb = t.next_bifurcation(B.tree_div, static_cast<int>(k));
      if (nb >= 0) B.trunks[k].bar = bar_of[nb];
    }
  return T;
}

namespace {

std::string bim(int s, int t) { return "[" + std::to_string(s) + "," + std::to_string(t) + "]"; }

void render_bar(const TreeModel& T, int b, int depth, std::ostringstream& os) {
  const TreeBar& B = T.bars[b];
  std::string ind(2 * depth, ' ');
  os << ind << "B" << B.id << " h=" << B.h.get_str() << " on " << bim(B.s, B.t) << "\n";
  for (auto& tr : B.trunks) {
    os << ind << "  |- c=" << tr.c.str() << " " << bim(tr.s, tr.t);
    if (tr.bar < 0) {
      os << "\n";
      continue;
    }
    os << " ->\n";
    render_bar(T, tr.bar, depth + 2, os);
  }
}

}  // namespace

std::string TreeModel::render() const {
  std::ostringstream os;
  os << "B* main trunk " << bim(s0, t0) << " (n = " << n << ")\n";
  for (auto& B : bars)
    if (B.parent_bar < 0) render_bar(*this, B.id, 1, os);
  return os.str();
}

std::string TreeModel::table() const {
  std::ostringstream os;
  os << "bar\theight\ton\tnu_f\tnu_g\ttrunk\t[s,t]\tDelta_B\tnext\n";
  for (auto& B : bars)
    for (size_t k = 0; k < B.trunks.size(); ++k) {
      auto& tr = B.trunks[k];
      os << "B" << B.id << "\t" << B.h.get_str() << "\t" << bim(B.s, B.t) << "\t"
         << B.nu_f.get_str() << "\t" << B.nu_g.get_str() << "\t" << tr.c.str() << "\t"
         << bim(tr.s, tr.t) << "\t" << B.delta_B[k].str() << "\t"
         << (tr.bar < 0 ? std::string("-") : "B" + std::to_string(tr.bar)) << "\n";
    }
  return os.str();
}

// ---------------------------------------------------------- approximate roots

SemirootResult semiroot_check(const Branch& f, const Branch& h, int k) {
  SemirootResult r;
  CharacteristicData cf = characteristic_data(f);
  if (k < 0 || k >= cf.g()) {
    r.reason = "k = " + std::to_string(k) + " outside [0, g-1] with g = " + std::to_string(cf.g());
    return r;
  }
  if (f.tangent_to_x0() || h.tangent_to_x0()) {
    r.reason = "branches must be transversal to x = 0";
    return r;
  }
  r.deg_expected = cf.beta[0] / cf.e[k];
  r.deg_actual = h.n();
  r.coincidence_expected = ratio(cf.beta[k + 1], cf.beta[0]);
  r.coincidence_actual = coincidence(f, h);
  for (int j = 0; j <= k; ++j) r.char_expected.push_back(cf.beta[j] / cf.e[k]);
  r.char_actual = characteristic_data(h).beta;
  std::vector<std::string> why;
  if (r.deg_actual != r.deg_expected)
    why.push_back("deg_y h = " + std::to_string(r.deg_actual) + " != " +
                  std::to_string(r.deg_expected));
  if (r.coincidence_actual != r.coincidence_expected)
    why.push_back("C(f,h) = " + r.coincidence_actual.get_str() + " != " +
                  r.coincidence_expected.get_str());
  if (r.char_actual != r.char_expected) why.push_back("characteristic exponents of h differ");
  r.ok = why.empty();
  for (auto& w : why) r.reason += (r.reason.empty() ? "" : "; ") + w;
  if (r.ok) r.reason = "ok";
  return r;
}

namespace {

// Roots of P(u^n, v) through the free points of a tree divisor, counted by
// the weighted initial form after the shift v -> v + eps_E.
long free_roots(const BiPoly& Pr, const TreeDivisor& d) {
  UPoly in = Pr.shift_y(d.eps()).weighted_initial(mpq_class(d.p)).at_x1();
  for (auto& R : d.points) in = in.strip_root(R.c);
  return std::max(in.degree(), 0);
}

long deep_root_count(const BiPoly& Pr, const TreeDivisor& d) {
  return std::max(Pr.shift_y(d.eps()).weighted_initial(mpq_class(d.p)).at_x1().degree(), 0);
}

}  // namespace

ApproxRootReport approx_root_analysis(const Branch& f, const Branch& h, int k) {
  ApproxRootReport r;
  r.k = k;
  r.semiroot = semiroot_check(f, h, k);
  if (!r.semiroot.ok) throw InputError("not a " + std::to_string(k) + "-semiroot: " + r.semiroot.reason);
  r.cd = characteristic_data(f);
  Branch fl = f, hl = h;
  if (fl.label().empty()) fl.set_label("f");
  if (hl.label().empty()) hl.set_label("h");
  r.a = hamiltonian_pair({fl}, {hl});
  Analysis& a = r.a;
  a.log.add("semiroot", kSemiroot, "h", r.semiroot.ok, r.semiroot.reason, CheckKind::Assumption);
  const PrefixTree& t = a.graph.tree;
  unsigned n = a.graph.ram.n;

  BiPoly F = implicit_equation(f), H = implicit_equation(h);
  r.J_direct = F.dx() * H.dy() - F.dy() * H.dx();
  a.log.add("direct-jacobian", kRootDec, "origin", r.J_direct == a.J,
            "df ^ dh expanded directly", CheckKind::Internal);
  BiPoly Jr = r.J_direct.ramify(n);

  int g = r.cd.g();
  for (int i = 1; i <= g; ++i) {
    RootLevel L;
    L.i = i;
    L.v = ratio(r.cd.beta[i], r.cd.beta[0]);
    L.expected_collinear = i <= k;
    for (auto& E : a.graph.divs)
      if (E.v == L.v && std::find(E.through.begin(), E.through.end(), 0) != E.through.end() &&
          E.bifurcation())
        L.graph_div = E.id;
    std::string wh = "E_" + std::to_string(i) + " v=" + L.v.get_str();
    if (L.graph_div < 0) {
      a.log.add("root-level", kRootCol, wh, false, "no bifurcation divisor at this level",
                CheckKind::Internal);
      r.levels.push_back(std::move(L));
      continue;
    }
    const GraphDivisor& E = a.graph.divs[L.graph_div];
    for (int l : E.associated) {
      const DivisorReport& R = a.div(l);
      if (R.collinear) L.collinear = true;
      L.numerators.push_back(R.M.num);
      L.packet_oracle += free_roots(Jr, t.div(l));
    }
    for (auto& gp : a.dec.graph_packets)
      if (gp.divisor == L.graph_div) L.packet = gp.nc + gp.c;
    a.log.add("root-collinearity", kRootCol, wh, L.collinear == L.expected_collinear,
              std::string(L.collinear ? "collinear" : "non-collinear") + ", expected " +
                  (L.expected_collinear ? "collinear" : "non-collinear"));
    if (i == k + 1) {
      bool constant = true;
      std::string nums;
      for (auto& N : L.numerators) {
        constant = constant && N.degree() == 0;
        nums += (nums.empty() ? "" : ", ") + N.str("z");
      }
      a.log.add("root-empty-level", kRootEmpty, wh, constant && L.packet == 0 && L.packet_oracle == 0,
                "numerators {" + nums + "}, packet " + std::to_string(L.packet) + ", oracle " +
                    std::to_string(L.packet_oracle));
    }
    if (i >= k + 2) {
      L.expected = r.cd.n_prod(i - 1) * (r.cd.puiseux_pairs[i - 1].second - 1);
      r.deep_expected += L.expected;
      a.log.add("root-packet", kRootDec, wh, L.packet == L.expected && L.packet_oracle == L.expected,
                "m0(J^i) = " + std::to_string(L.packet) + ", oracle " +
                    std::to_string(L.packet_oracle) + ", expected " + std::to_string(L.expected));
    }
    r.levels.push_back(std::move(L));
  }
  // Branches of J* stay below contact beta_{k+1}/beta_0 with C.
  if (k + 1 <= g && r.levels[k].graph_div >= 0) {
    for (int l : a.graph.divs[r.levels[k].graph_div].associated) r.deep_roots += deep_root_count(Jr, t.div(l));
    a.log.add("root-residual-contact", kRootDec, "E_" + std::to_string(k + 1),
              r.deep_roots == r.deep_expected,
              "roots with contact >= " + r.levels[k].v.get_str() + ": " + std::to_string(r.deep_roots) +
                  ", expected " + std::to_string(r.deep_expected));
  }
  return r;
}

// ------------------------------------------------------------------ polars

PolarReport polar_analysis(const FoliationModel& F, const Scalar& da, const Scalar& db) {
  if (da.is_zero()) throw InputError("polar direction must have a != 0");
  PolarReport r;
  r.dir_a = da;
  r.dir_b = db;
  Scalar d = db / da;
  OneForm w;
  w.A = BiPoly(-db);
  w.B = BiPoly(da);
  FoliationModel G = explicit_model(w, {Branch::smooth({d}, "D")}, "G");
  r.a = analyze(F, G);
  Analysis& a = r.a;

  // The zeros of M_E1 are the roots of
  //   prod_j (z - c_j) + (z - d) sum_l I_l prod_{j != l} (z - c_j).
  // Its z^b coefficient is 1 + sum I and its z^(b-1) coefficient is
  //   sum_l I_l c_l - (1 + sum I) sum c - d sum I,
  // which reduces to sum I_l c_l + d when sum I = -1. It must not vanish
  // for the packet on E1 to have b^C - 1 zeros in the chart. The expression
  // sum c + d sum I is recorded for reference only: it does not control the
  // degree (C = {y = 2x + x^2, y = 0}, equal weights, d = 1 makes it 1
  // while the polynomial is the constant -1).
  Scalar sc(0), si(0), sic(0);
  for (auto& P : a.e1.points)
    if (P.mC > 0) {
      sc += P.c;
      si += P.IF;
      sic += P.IF * P.c;
    }
  r.certificate = sic - (Scalar(1) + si) * sc - d * si;
  r.literal_certificate = sc + d * si;
  a.log.add("polar-certificate", kPolarCert, "E1(direct)", !r.certificate.is_zero(),
            "sum I c - (1 + sum I) sum c - d sum I = " + r.certificate.str(), CheckKind::Assumption);
  a.log.add("polar-certificate-literal", kPolarCert, "E1(direct)", !r.literal_certificate.is_zero(),
            "sum c + d sum I = " + r.literal_certificate.str(), CheckKind::Info);

  const PrefixTree& t = a.graph.tree;
  unsigned n = a.graph.ram.n;
  r.all_purely_non_collinear = true;
  for (auto& R : a.divs) {
    if (!R.purely_non_collinear) r.all_purely_non_collinear = false;
    for (auto& P : R.points)
      if (P.child >= 0 && P.IF.is_zero()) r.corner_minus_one = true;
  }
  CheckKind lemma_kind = n == 1 ? CheckKind::Theorem : CheckKind::Info;
  a.log.add("polar-corner-lemma", kPolarLemma, "exceptional divisor",
            r.corner_minus_one != r.all_purely_non_collinear,
            std::string("corner index -1: ") + (r.corner_minus_one ? "yes" : "no") +
                ", all purely non-collinear: " + (r.all_purely_non_collinear ? "yes" : "no"),
            lemma_kind);

  for (auto& E : a.graph.divs) {
    if (!E.bifurcation()) continue;
    PolarPacket pk;
    pk.graph_div = E.id;
    pk.v = E.v;
    for (int l : E.associated) {
      int bc = 0;
      for (auto& P : t.div(l).points) {
        bool onC = std::any_of(P.members.begin(), P.members.end(),
                               [&](int s) { return t.branches()[s].side == Side::C; });
        bc += onC ? 1 : 0;
      }
      pk.expected += std::max(bc - 1, 0);
    }
    for (auto& gp : a.dec.graph_packets)
      if (gp.divisor == E.id) pk.measured = gp.collinear ? -1 : gp.nc + gp.c;
    std::string wh = "G" + std::to_string(E.id) + " v=" + E.v.get_str();
    CheckKind kind = n == 1 ? CheckKind::Theorem : CheckKind::Info;
    if (r.corner_minus_one)
      a.log.add("polar-packet-bound", kPolarDec, wh, pk.measured <= pk.expected,
                "m0(J^E) = " + std::to_string(pk.measured) + " <= " + std::to_string(pk.expected), kind);
    else
      a.log.add("polar-packet", kPolarDec, wh, pk.measured == pk.expected,
                "m0(J^E) = " + std::to_string(pk.measured) + ", b^C - 1 = " + std::to_string(pk.expected),
                kind);
    r.packets.push_back(pk);
  }
  if (!r.corner_minus_one && n == 1)
    a.log.add("polar-residual", kPolarDec, "origin", a.dec.residual == 0,
              "m0(J*) = " + std::to_string(a.dec.residual));
  for (auto& s : a.inter.seps)
    if (s.side == Side::C) r.PC += s.JS;
  return r;
}

PolarReport polar_analysis(const FoliationModel& F, std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::string last;
  for (int att = 1; att <= max_attempts; ++att) {
    Scalar b = Scalar::frac(num(rng), den(rng));
    bool clash = false;
    for (auto& S : F.separatrices)
      if (S.coeff(static_cast<int>(S.n())) == b) clash = true;
    if (clash) continue;
    try {
      PolarReport r = polar_analysis(F, Scalar(1), b);
      r.attempts = att;
      if (!r.certificate.is_zero()) return r;
      last = "certificate vanished";
    } catch (const AssumptionError& e) {
      last = e.what();
    }
  }
  throw AssumptionError("no generic polar direction found in " + std::to_string(max_attempts) +
                        " draws: " + last);
}

}  // namespace jc
