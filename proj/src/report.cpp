#include "jc/report.hpp"

#include <algorithm>
#include <sstream>

namespace jc {

using ojson = nlohmann::ordered_json;

namespace {

const char* kExpect = "fixture expectation";

std::string kind_name(FoliationKind k) {
  switch (k) {
    case FoliationKind::OneForm:
      return "one_form";
    case FoliationKind::Hamiltonian:
      return "hamiltonian";
    case FoliationKind::Logarithmic:
      return "logarithmic";
  }
  return "?";
}

std::string check_kind(CheckKind k) {
  switch (k) {
    case CheckKind::Theorem:
      return "theorem";
    case CheckKind::Assumption:
      return "assumption";
    case CheckKind::Internal:
      return "internal";
    case CheckKind::Info:
      return "info";
  }
  return "?";
}

ojson scalars(const std::vector<Scalar>& v) {
  ojson a = ojson::array();
  for (auto& s : v) a.push_back(s.str());
  return a;
}

std::string branch_label(const Analysis& a, int sigma) { return a.graph.tree.branches()[sigma].label; }

ojson foliation_json(const FoliationModel& M) {
  ojson o;
  o["name"] = M.name;
  o["kind"] = kind_name(M.kind);
  o["A"] = M.omega.A.str();
  o["B"] = M.omega.B.str();
  o["nu0"] = nu0(M);
  ojson s = ojson::array();
  for (auto& b : M.separatrices) s.push_back(branch_to_json(b));
  o["separatrices"] = s;
  if (M.has_log_data()) o["weights"] = scalars(M.lambda);
  return o;
}

ojson graph_json(const DualGraph& g) {
  ojson o;
  o["ramification"] = g.ram.n;
  o["compressed"] = g.compressed;
  ojson ds = ojson::array();
  for (auto& E : g.divs) {
    ojson d;
    d["label"] = "G" + std::to_string(E.id);
    d["v"] = E.v.get_str();
    d["m"] = E.m;
    d["b"] = E.b;
    d["parent"] = E.parent < 0 ? ojson(nullptr) : ojson("G" + std::to_string(E.parent));
    d["n_E"] = E.n_E;
    d["n_under"] = E.n_under;
    d["puiseux"] = E.puiseux;
    d["dead_arc"] = E.dead_arc;
    ojson th = ojson::array();
    for (int i : E.through) th.push_back(g.curves[i].label());
    d["through"] = th;
    ojson as = ojson::array();
    for (int l : E.associated) as.push_back(divisor_label(l));
    d["associated"] = as;
    ds.push_back(d);
  }
  o["divisors"] = ds;
  return o;
}

ojson decomposition_json(const Analysis& a) {
  ojson o;
  o["m0J"] = a.dec.m0J;
  o["residual"] = a.dec.residual;
  ojson ps = ojson::array();
  for (auto& pk : a.dec.packets) {
    ojson p;
    p["divisor"] = divisor_label(pk.divisor);
    p["nc"] = pk.nc;
    p["c"] = pk.c();
    p["total"] = pk.total();
    ojson cs = ojson::array();
    for (auto& cp : pk.collinear) {
      ojson c;
      c["point"] = "R" + std::to_string(cp.point + 1);
      ojson cov = ojson::array();
      for (int l : cp.cover) cov.push_back(divisor_label(l));
      c["cover"] = cov;
      c["predicted"] = cp.predicted;
      c["measured"] = cp.measured;
      cs.push_back(c);
    }
    p["collinear_points"] = cs;
    ps.push_back(p);
  }
  o["packets"] = ps;
  ojson gs = ojson::array();
  for (auto& g : a.dec.graph_packets) {
    ojson p;
    p["divisor"] = "G" + std::to_string(g.divisor);
    p["v"] = g.v.get_str();
    p["b"] = g.b;
    p["collinear"] = g.collinear;
    p["nc"] = g.nc;
    p["c"] = g.c;
    p["bound"] = g.bound;
    gs.push_back(p);
  }
  o["graph_packets"] = gs;
  return o;
}

ojson intersections_json(const Analysis& a) {
  ojson o;
  ojson s = ojson::array();
  for (auto& x : a.inter.seps) {
    ojson e;
    e["separatrix"] = x.label;
    e["side"] = x.side == Side::C ? "F" : "G";
    e["J_S"] = x.JS;
    e["mu"] = x.mu;
    e["tau"] = x.tau;
    s.push_back(e);
  }
  o["separatrices"] = s;
  o["mu_F"] = a.inter.mu_F ? ojson(*a.inter.mu_F) : ojson(nullptr);
  o["mu_G"] = a.inter.mu_G ? ojson(*a.inter.mu_G) : ojson(nullptr);
  return o;
}

ojson x_tangency_json(const XTangency& x) {
  ojson o;
  o["quantity"] = x.quantity.str();
  o["condition_holds"] = x.condition_holds;
  o["x_divides_initial_part"] = x.x_divides_initial;
  o["log_expression"] = x.log_expression ? ojson(x.log_expression->str()) : ojson(nullptr);
  return o;
}

// Keeps only the checks named in the options; "all" keeps everything.
CheckLog filtered(const CheckLog& log, const std::vector<std::string>& names) {
  if (std::find(names.begin(), names.end(), "all") != names.end()) return log;
  CheckLog out;
  for (auto& c : log.all())
    if (std::find(names.begin(), names.end(), c.name) != names.end()) out.add(c);
  if (log.downgraded()) out.downgrade();
  return out;
}

void expectation_checks(Analysis& a, const Expectations& e) {
  if (e.J)
    a.log.add("expected-J", kExpect, "origin", *e.J == a.J,
              "computed " + a.J.str() + ", expected " + e.J->str());
  if (e.m0J)
    a.log.add("expected-m0J", kExpect, "origin", *e.m0J == a.m0J,
              "computed " + std::to_string(a.m0J) + ", expected " + std::to_string(*e.m0J));
  if (e.x_tangency_condition)
    a.log.add("expected-x-tangency", kExpect, "E1", *e.x_tangency_condition == a.xt.condition_holds,
              std::string("condition ") + (a.xt.condition_holds ? "holds" : "fails") + ", expected " +
                  (*e.x_tangency_condition ? "holds" : "fails"));
  for (auto& [label, vals] : e.delta) {
    int id = -1;
    if (label.size() > 1 && label[0] == 'E') {
      try {
        id = std::stoi(label.substr(1)) - 1;
      } catch (const std::exception&) {
        id = -1;
      }
    }
    if (id < 0 || id >= static_cast<int>(a.divs.size()))
      throw InputError("expectation names unknown divisor " + label);
    std::vector<Scalar> got;
    for (auto& P : a.divs[id].points) got.push_back(P.delta);
    std::string g, w;
    for (auto& s : got) g += (g.empty() ? "" : ", ") + s.str();
    for (auto& s : vals) w += (w.empty() ? "" : ", ") + s.str();
    a.log.add("expected-delta", kExpect, label, got == vals, "computed (" + g + "), expected (" + w + ")");
  }
}

std::string summary_line(const CheckLog& log) {
  long pass = 0, fail = 0, info = 0;
  for (auto& c : log.all()) {
    if (c.ok)
      ++pass;
    else
      ++(c.kind == CheckKind::Info ? info : fail);
  }
  return "checks: " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(info) + " informational, status " + std::to_string(log.status());
}

void text_analysis(const Analysis& a, const CheckLog& log, std::ostringstream& os, bool decomposition_only) {
  os << "J = " << a.J.str() << "\n";
  os << "m0(J) = " << a.m0J << ", nu0(F) = " << a.nu_F << ", nu0(G) = " << a.nu_G
     << ", ramification n = " << a.graph.ram.n << "\n";
  if (!decomposition_only) {
    for (auto& R : a.divs) {
      if (!R.bifurcation) continue;
      os << divisor_label(R.id) << " p=" << R.p << " b=" << R.b << " "
         << (R.collinear ? "collinear" : "non-collinear") << "\n";
      for (size_t q = 0; q < R.points.size(); ++q) {
        auto& P = R.points[q];
        os << "  R" << q + 1 << " c=" << P.c.str() << " [" << P.mC << "," << P.mD << "] Delta=" << P.delta.str();
        if (!R.collinear) os << " predicted=" << P.predicted << " measured=" << P.measured;
        os << "\n";
      }
      if (!R.collinear) os << "  M(z) = " << R.M.str() << ", t* = " << R.t_star << "\n";
    }
    os << "x-tangency quantity = " << a.xt.quantity.str() << " (condition "
       << (a.xt.condition_holds ? "holds" : "fails") << ")\n";
  }
  os << "decomposition:";
  for (auto& pk : a.dec.packets) os << " " << divisor_label(pk.divisor) << ":" << pk.total();
  os << " residual:" << a.dec.residual << "\n";
  for (auto& c : log.all())
    if (!c.ok && c.kind != CheckKind::Info)
      os << "FAIL [" << check_kind(c.kind) << "] " << c.name << " at " << c.where << " (" << c.citation
         << "): " << c.detail << "\n";
  os << summary_line(log) << "\n";
}

}  // namespace

std::string divisor_label(int tree_id) { return "E" + std::to_string(tree_id + 1); }

Command parse_command(const std::string& s) {
  if (s == "analyze") return Command::Analyze;
  if (s == "decompose") return Command::Decompose;
  if (s == "verify") return Command::Verify;
  if (s == "tree") return Command::Tree;
  if (s == "polar") return Command::Polar;
  if (s == "semiroot") return Command::Semiroot;
  throw InputError("unknown command " + s);
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Analyze:
      return "analyze";
    case Command::Decompose:
      return "decompose";
    case Command::Verify:
      return "verify";
    case Command::Tree:
      return "tree";
    case Command::Polar:
      return "polar";
    case Command::Semiroot:
      return "semiroot";
  }
  return "?";
}

ojson checks_json(const CheckLog& log) {
  ojson a = ojson::array();
  for (auto& c : log.all()) {
    ojson o;
    o["name"] = c.name;
    o["citation"] = c.citation;
    o["where"] = c.where;
    o["kind"] = check_kind(c.kind);
    o["ok"] = c.ok;
    o["detail"] = c.detail;
    a.push_back(o);
  }
  return a;
}

ojson divisor_json(const Analysis& a, const DivisorReport& R) {
  ojson o;
  o["label"] = R.id < 0 ? std::string("E1(direct)") : divisor_label(R.id);
  if (R.id >= 0) {
    o["parent"] = R.parent < 0 ? ojson(nullptr) : ojson(divisor_label(R.parent));
    o["p"] = R.p;
    o["v"] = ratio(R.p, a.graph.ram.n).get_str();
  }
  o["b"] = R.b;
  o["bifurcation"] = R.bifurcation;
  o["collinear"] = R.collinear;
  o["purely_non_collinear"] = R.purely_non_collinear;
  ojson pts = ojson::array();
  ojson setC = ojson::array(), setN = ojson::array();
  for (size_t q = 0; q < R.points.size(); ++q) {
    const PointReport& P = R.points[q];
    std::string name = "R" + std::to_string(q + 1);
    ojson p;
    p["name"] = name;
    p["c"] = P.c.str();
    ojson mem = ojson::array();
    for (int s : P.members) mem.push_back(R.id < 0 ? a.graph.curves[s].label() : branch_label(a, s));
    p["members"] = mem;
    p["mC"] = P.mC;
    p["mD"] = P.mD;
    p["I_F"] = P.IF.str();
    p["I_G"] = P.IG.str();
    p["Delta"] = P.delta.str();
    p["collinear"] = P.collinear;
    p["t"] = P.t;
    p["tau"] = P.tau;
    p["predicted"] = R.collinear ? ojson(nullptr) : ojson(P.predicted);
    p["measured"] = P.measured;
    pts.push_back(p);
    (P.collinear ? setC : setN).push_back(name);
  }
  o["points"] = pts;
  o["C"] = setC;
  o["N"] = setN;
  // Square-free factors of the reduced numerator of M_E.
  ojson setM = ojson::array();
  for (auto& [factor, mult] : R.M.bundles)
    setM.push_back(ojson{{"factor", factor.str("z")}, {"multiplicity", mult}});
  o["M"] = setM;
  ojson m;
  m["expression"] = R.M.str();
  m["numerator"] = R.M.num.str("z");
  m["denominator"] = R.M.den.str("z");
  m["zeros"] = R.M.t;
  m["t_star"] = R.t_star;
  o["M_E"] = m;
  o["delta_sum"] = R.delta_sum.str();
  o["initial_part"] = R.JE.str();
  o["initial_part_free"] = R.JE_free.str();
  o["nu_J"] = R.nu_J.get_str();
  return o;
}

ojson analysis_json(const Analysis& a, const CheckLog& log) {
  ojson o;
  ojson in;
  in["F"] = foliation_json(a.F);
  in["G"] = foliation_json(a.G);
  o["input"] = in;
  ojson j;
  j["J"] = a.J.str();
  j["m0"] = a.m0J;
  j["nu0_F"] = a.nu_F;
  j["nu0_G"] = a.nu_G;
  o["jacobian"] = j;
  o["graph"] = graph_json(a.graph);
  o["first_divisor"] = divisor_json(a, a.e1);
  ojson ds = ojson::array();
  for (auto& R : a.divs) ds.push_back(divisor_json(a, R));
  o["divisors"] = ds;
  o["decomposition"] = decomposition_json(a);
  o["intersections"] = intersections_json(a);
  o["x_tangency"] = x_tangency_json(a.xt);
  ojson as = ojson::array();
  for (auto& s : a.assumptions) as.push_back(s);
  o["assumptions"] = as;
  o["generalized_curve_downgraded"] = log.downgraded();
  o["checks"] = checks_json(log);
  ojson sum;
  long pass = 0, fail = 0;
  for (auto& c : log.all()) (c.ok ? pass : fail) += 1;
  sum["passed"] = pass;
  sum["failed"] = fail;
  sum["failed_theorem"] = log.failures(CheckKind::Theorem);
  sum["failed_assumption"] = log.failures(CheckKind::Assumption);
  sum["failed_internal"] = log.failures(CheckKind::Internal);
  sum["status"] = log.status();
  o["summary"] = sum;
  return o;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 2;
  if (dynamic_cast<const AssumptionError*>(&e)) return 3;
  if (auto* m = dynamic_cast<const MathError*>(&e)) {
    // An insufficient truncation is a defect of the input data.
    return std::string(m->what()).rfind("truncation too short", 0) == 0 ? 2 : 3;
  }
  return 5;
}

RunResult run_pipeline(const ProblemSpec& spec, Command cmd) {
  RunResult r;
  ojson& o = r.report;
  o["schema"] = "jacurve-report/1";
  o["version"] = kVersion;
  o["command"] = command_name(cmd);
  o["problem"] = spec.name;
  o["seed"] = spec.options.seed;
  std::ostringstream os;
  os << "problem " << spec.name << ", command " << command_name(cmd) << "\n";
  AnalysisOptions opt;
  opt.ramification = spec.options.ramification;
  int T = spec.options.truncation;

  auto need_pair = [&]() {
    if (!spec.F || !spec.G) throw InputError("command " + command_name(cmd) + " needs foliations F and G");
  };

  switch (cmd) {
    case Command::Analyze:
    case Command::Decompose:
    case Command::Verify: {
      need_pair();
      Analysis a = analyze(spec.F->build(T), spec.G->build(T), opt);
      if (cmd == Command::Verify) {
        if (spec.expect.empty()) throw InputError("verify needs an \"expect\" block");
        expectation_checks(a, spec.expect);
      }
      CheckLog log = filtered(a.log, spec.options.checks);
      if (cmd == Command::Decompose) {
        o["jacobian"] = ojson{{"J", a.J.str()}, {"m0", a.m0J}};
        o["decomposition"] = decomposition_json(a);
        o["checks"] = checks_json(log);
        o["status"] = log.status();
      } else {
        o["analysis"] = analysis_json(a, log);
      }
      text_analysis(a, log, os, cmd == Command::Decompose);
      r.dot = a.graph.dot() + a.graph.tree.dot();
      r.status = log.status();
      break;
    }
    case Command::Tree: {
      need_pair();
      if (spec.F->kind != FoliationKind::Hamiltonian || spec.G->kind != FoliationKind::Hamiltonian)
        throw InputError("tree needs two hamiltonian foliations");
      Analysis a = analyze(spec.F->build(T), spec.G->build(T), opt);
      TreeModel t = tree_model(a);
      CheckLog log = filtered(a.log, spec.options.checks);
      ojson tm;
      tm["ramification"] = t.n;
      tm["main_trunk"] = ojson::array({t.s0, t.t0});
      ojson bars = ojson::array();
      for (auto& B : t.bars) {
        ojson b;
        b["bar"] = "B" + std::to_string(B.id);
        b["divisor"] = divisor_label(B.tree_div);
        b["graph_divisor"] = "G" + std::to_string(B.graph_div);
        b["height"] = B.h.get_str();
        b["on"] = ojson::array({B.s, B.t});
        b["parent"] = B.parent_bar < 0 ? ojson(nullptr) : ojson("B" + std::to_string(B.parent_bar));
        b["nu_f"] = B.nu_f.get_str();
        b["nu_g"] = B.nu_g.get_str();
        ojson trs = ojson::array();
        for (size_t k = 0; k < B.trunks.size(); ++k) {
          auto& tr = B.trunks[k];
          ojson x;
          x["c"] = tr.c.str();
          x["bimultiplicity"] = ojson::array({tr.s, tr.t});
          x["Delta_B"] = B.delta_B[k].str();
          x["determinant"] = B.det[k].str();
          x["bar"] = tr.bar < 0 ? ojson(nullptr) : ojson("B" + std::to_string(tr.bar));
          trs.push_back(x);
        }
        b["trunks"] = trs;
        b["M_B"] = B.M_B.str();
        b["relation_holds"] = B.relation_ok;
        bars.push_back(b);
      }
      tm["bars"] = bars;
      tm["text"] = t.render();
      o["tree_model"] = tm;
      o["checks"] = checks_json(log);
      o["status"] = log.status();
      os << t.render() << t.table() << summary_line(log) << "\n";
      r.dot = a.graph.dot() + a.graph.tree.dot();
      r.status = log.status();
      break;
    }
    case Command::Polar: {
      if (!spec.F) throw InputError("polar needs a foliation F");
      FoliationModel F = spec.F->build(T);
      PolarReport p = spec.polar.direction
                          ? polar_analysis(F, spec.polar.direction->first, spec.polar.direction->second)
                          : polar_analysis(F, spec.options.seed, spec.polar.attempts);
      CheckLog log = filtered(p.a.log, spec.options.checks);
      ojson po;
      po["direction"] = ojson::array({p.dir_a.str(), p.dir_b.str()});
      po["attempts"] = p.attempts;
      po["certificate"] = p.certificate.str();
      po["literal_certificate"] = p.literal_certificate.str();
      po["corner_index_minus_one"] = p.corner_minus_one;
      po["all_purely_non_collinear"] = p.all_purely_non_collinear;
      ojson pk = ojson::array();
      for (auto& x : p.packets)
        pk.push_back(ojson{{"divisor", "G" + std::to_string(x.graph_div)},
                           {"v", x.v.get_str()},
                           {"expected", x.expected},
                           {"measured", x.measured}});
      po["packets"] = pk;
      po["polar_curve_intersection"] = p.PC;
      o["polar"] = po;
      o["analysis"] = analysis_json(p.a, log);
      os << "direction [" << p.dir_a.str() << ":" << p.dir_b.str() << "] after " << p.attempts
         << " draw(s), certificate " << p.certificate.str() << "\n";
      for (auto& x : p.packets)
        os << "  G" << x.graph_div << " v=" << x.v.get_str() << ": m0(J^E) = " << x.measured
           << ", b^C - 1 = " << x.expected << "\n";
      os << "(P,C)_0 = " << p.PC << "\n" << summary_line(log) << "\n";
      r.dot = p.a.graph.dot() + p.a.graph.tree.dot();
      r.status = log.status();
      break;
    }
    case Command::Semiroot: {
      if (!spec.semiroot) throw InputError("semiroot needs a \"semiroot\" block");
      const SemirootSpec& s = *spec.semiroot;
      SemirootResult sr = semiroot_check(s.f, s.h, s.k);
      ojson so;
      so["k"] = s.k;
      so["is_semiroot"] = sr.ok;
      so["reason"] = sr.reason;
      so["degree"] = ojson::array({sr.deg_actual, sr.deg_expected});
      so["coincidence"] = ojson::array({sr.coincidence_actual.get_str(), sr.coincidence_expected.get_str()});
      so["characteristic"] = ojson{{"h", sr.char_actual}, {"expected", sr.char_expected}};
      o["semiroot"] = so;
      os << "semiroot check (k = " << s.k << "): " << (sr.ok ? "yes" : "no") << " (" << sr.reason << ")\n";
      if (!sr.ok) {
        r.status = 3;
        o["status"] = 3;
        break;
      }
      ApproxRootReport ar = approx_root_analysis(s.f, s.h, s.k);
      CheckLog log = filtered(ar.a.log, spec.options.checks);
      ojson lv = ojson::array();
      for (auto& L : ar.levels) {
        ojson x;
        x["level"] = "E_" + std::to_string(L.i);
        x["v"] = L.v.get_str();
        x["graph_divisor"] = L.graph_div < 0 ? ojson(nullptr) : ojson("G" + std::to_string(L.graph_div));
        x["collinear"] = L.collinear;
        x["packet"] = L.packet;
        x["packet_oracle"] = L.packet_oracle;
        x["expected"] = L.expected < 0 ? ojson(nullptr) : ojson(L.expected);
        ojson nums = ojson::array();
        for (auto& N : L.numerators) nums.push_back(N.str("z"));
        x["M_numerators"] = nums;
        lv.push_back(x);
        os << "  E_" << L.i << " v=" << L.v.get_str() << " " << (L.collinear ? "collinear" : "non-collinear")
           << ", m0(J^i) = " << L.packet << " (oracle " << L.packet_oracle << ")\n";
      }
      so["levels"] = lv;
      so["J_direct"] = ar.J_direct.str();
      so["deep_roots"] = ar.deep_roots;
      o["semiroot"] = so;
      o["analysis"] = analysis_json(ar.a, log);
      os << summary_line(log) << "\n";
      r.dot = ar.a.graph.dot() + ar.a.graph.tree.dot();
      r.status = log.status();
      break;
    }
  }
  r.text = os.str();
  return r;
}

}  // namespace jc
