#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "jc/dual_graph.hpp"

namespace jc {

namespace {

std::vector<int> curve_set(const PrefixTree& t, const std::vector<int>& members) {
  std::set<int> s;
  for (int m : members) s.insert(t.branches()[m].curve);
  return {s.begin(), s.end()};
}

long lcm_den(long acc, const mpq_class& q) { return std::lcm(acc, q.get_den().get_si()); }

// Characteristic ratios beta_k / beta_0, k >= 1.
std::vector<mpq_class> char_ratios(const Branch& b) {
  CharacteristicData d = characteristic_data(b);
  std::vector<mpq_class> r;
  for (size_t k = 1; k < d.beta.size(); ++k) {
    mpq_class q(d.beta[k], d.beta[0]);
    q.canonicalize();
    r.push_back(q);
  }
  return r;
}

// Synthesizes G(Z) from characteristic exponents and pairwise coincidences.
std::vector<GraphDivisor> skeleton(const std::vector<Branch>& curves) {
  size_t r = curves.size();
  std::vector<std::vector<mpq_class>> ratios(r);
  for (size_t i = 0; i < r; ++i) ratios[i] = char_ratios(curves[i]);
  std::vector<std::vector<mpq_class>> C(r, std::vector<mpq_class>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) C[i][j] = C[j][i] = coincidence(curves[i], curves[j]);

  auto above = [&](size_t i, size_t j, const mpq_class& v) { return i == j || C[i][j] >= v; };
  std::vector<std::pair<mpq_class, std::vector<int>>> nodes;
  for (size_t i = 0; i < r; ++i) {
    std::vector<mpq_class> vs{mpq_class(1)};
    for (auto& q : ratios[i]) vs.push_back(q);
    for (size_t j = 0; j < r; ++j)
      if (j != i) vs.push_back(C[i][j]);
    for (auto& v : vs) {
      std::vector<int> I;
      for (size_t j = 0; j < r; ++j)
        if (above(i, j, v)) I.push_back(static_cast<int>(j));
      bool dup = false;
      for (auto& [w, J] : nodes)
        if (w == v && J == I) dup = true;
      if (!dup) nodes.emplace_back(v, I);
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(), [](auto& a, auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  std::vector<GraphDivisor> out;
  for (auto& [v, I] : nodes) {
    GraphDivisor E;
    E.id = static_cast<int>(out.size());
    E.v = v;
    E.through = I;
    long N = 1;
    int k = 0;
    for (auto& q : ratios[I[0]])
      if (q < v) N = lcm_den(N, q), ++k;
    for (int i : I) {
      long Ni = 1;
      int ki = 0;
      for (auto& q : ratios[i])
        if (q < v) Ni = lcm_den(Ni, q), ++ki;
      if (Ni != N || ki != k) throw InternalError("branches through a divisor disagree below it");
    }
    E.m = std::lcm(N, v.get_den().get_si());
    E.n_under = N;
    E.n_E = E.m / N;
    E.k_E = k;
    E.puiseux = E.n_E > 1;
    for (int i : I) {
      bool pf = std::find(ratios[i].begin(), ratios[i].end(), v) != ratios[i].end();
      (pf ? E.puiseux_for : E.contact_for).push_back(i);
    }
    if (E.puiseux != !E.puiseux_for.empty())
      throw InternalError("Puiseux divisor without a Puiseux branch");
    // Outgoing directions: branches staying together beyond v.
    std::vector<int> cls(I.size(), -1);
    int ncls = 0;
    for (size_t a = 0; a < I.size(); ++a) {
      if (cls[a] >= 0) continue;
      cls[a] = ncls;
      for (size_t b = a + 1; b < I.size(); ++b)
        if (cls[b] < 0 && C[I[a]][I[b]] > v) cls[b] = ncls;
      ++ncls;
    }
    for (int c = 0; c < ncls; ++c) {
      Direction d;
      for (size_t a = 0; a < I.size(); ++a)
        if (cls[a] == c) d.curves.push_back(I[a]);
      bool has_contact = false, has_puiseux = false;
      for (int i : d.curves) {
        if (std::find(E.contact_for.begin(), E.contact_for.end(), i) != E.contact_for.end())
          has_contact = true;
        else
          has_puiseux = true;
      }
      if (E.puiseux && has_contact && has_puiseux)
        throw InternalError("contact and Puiseux branches share a direction");
      d.dead_arc_side = E.puiseux && has_contact;
      E.directions.push_back(d);
    }
    if (E.puiseux) {
      int dead = 0;
      for (auto& d : E.directions) dead += d.dead_arc_side;
      if (dead > 1) throw InternalError("contact branches leave a Puiseux divisor apart");
      if (dead == 0) {
        Direction d;
        d.dead_arc_side = true;
        E.directions.push_back(d);
        E.dead_arc = true;
      }
    }
    E.b = static_cast<int>(E.directions.size());
    out.push_back(std::move(E));
  }
  for (auto& E : out) {
    for (int k = E.id - 1; k >= 0; --k) {
      auto& P = out[k];
      if (P.v < E.v && std::includes(P.through.begin(), P.through.end(), E.through.begin(),
                                     E.through.end())) {
        E.parent = k;
        P.children.push_back(E.id);
        break;
      }
    }
    if (E.id > 0 && E.parent < 0) throw InternalError("divisor without parent in G(Z)");
  }
  if (out.empty() || out[0].v != 1) throw InternalError("G(Z) lacks the first divisor");
  return out;
}

// Exponent a with zeta_n^a mapping tree divisor l onto k; -1 if none.
std::vector<long> deck_elements(const PrefixTree& t, unsigned n, int l, int k) {
  const auto& pl = t.div(l).prefix;
  const auto& pk = t.div(k).prefix;
  std::vector<long> r;
  if (pl.size() != pk.size()) return r;
  for (long a = 0; a < static_cast<long>(n); ++a) {
    bool ok = true;
    for (size_t j = 0; j < pl.size() && ok; ++j)
      if (pl[j] * Scalar::zeta(n, a * static_cast<long>(j + 1)) != pk[j]) ok = false;
    if (ok) r.push_back(a);
  }
  return r;
}

std::map<int, int> count_by_curve(const PrefixTree& t, const std::vector<int>& members) {
  std::map<int, int> m;
  for (int s : members) m[t.branches()[s].curve]++;
  return m;
}

void associate(DualGraph& g) {
  const PrefixTree& t = g.tree;
  unsigned n = g.ram.n;
  std::vector<int> used(t.divisors().size(), -1);
  for (auto& E : g.divs) {
    mpq_class pv = E.v * static_cast<long>(n);
    if (pv.get_den() != 1) throw InternalError("valuation not integral after ramification");
    int p = static_cast<int>(pv.get_num().get_si());
    for (auto& d : t.divisors())
      if (d.p == p && curve_set(t, d.members) == E.through) {
        E.associated.push_back(d.id);
        used[d.id] = E.id;
      }
    if (E.associated.empty()) throw InternalError("divisor of G(Z) without associated divisor");
    if (static_cast<long>(E.associated.size()) != E.n_under)
      throw InternalError("number of associated divisors differs from underlined n_E");
    for (int l : E.associated) {
      if (deck_elements(t, n, l, E.associated[0]).empty())
        throw InternalError("associated divisors are not Galois conjugate");
      // Ramified valence formula.
      int bt = t.div(l).b();
      int expect = !E.puiseux ? E.b : (E.dead_arc ? (E.b - 1) * E.n_E : (E.b - 1) * E.n_E + 1);
      if (bt != expect) throw InternalError("ramified valence formula fails");
      // Points of each branch on the associated divisor.
      for (int i : E.through) {
        long ni = g.curves[i].n();
        long e = ni / E.n_under;
        bool pf = std::find(E.puiseux_for.begin(), E.puiseux_for.end(), i) != E.puiseux_for.end();
        int npts = 0;
        for (auto& pt : t.div(l).points) {
          auto cnt = count_by_curve(t, pt.members);
          if (!cnt.count(i)) continue;
          ++npts;
          if (cnt[i] != (pf ? e / E.n_E : e)) throw InternalError("per-point branch multiplicity fails");
        }
        if (npts != (pf ? E.n_E : 1)) throw InternalError("per-branch point count fails");
      }
    }
  }
  for (auto& d : t.divisors()) {
    if (d.p < static_cast<int>(n) && d.b() != 1) throw InternalError("bifurcation before E_1");
    if (d.bifurcation() && d.p >= static_cast<int>(n) && used[d.id] < 0)
      throw InternalError("ramified bifurcation divisor not associated to G(Z)");
  }
  // Directions: coordinates through rho and per-curve counts on E~^1.
  for (auto& E : g.divs) {
    const TreeDivisor& d1 = t.div(E.associated[0]);
    for (size_t q = 0; q < d1.points.size(); ++q) {
      auto cnt = count_by_curve(t, d1.points[q].members);
      int dir = -1;
      for (size_t k = 0; k < E.directions.size(); ++k)
        for (int i : E.directions[k].curves)
          if (cnt.count(i)) dir = static_cast<int>(k);
      if (dir < 0) throw InternalError("point of a ramified divisor outside every direction");
      Direction& D = E.directions[dir];
      Scalar z = rho_to_E(g, E.id, d1.id, d1.points[q].c);
      if (D.tree_point < 0) {
        D.tree_point = static_cast<int>(q);
        D.z = z;
        D.mult.assign(D.curves.size(), 0);
      } else if (D.z != z) {
        throw InternalError("a direction of G(Z) meets two points of E_red");
      }
      for (size_t k = 0; k < D.curves.size(); ++k) D.mult[k] += cnt.count(D.curves[k]) ? cnt[D.curves[k]] : 0;
      if (D.dead_arc_side && !z.is_zero()) throw InternalError("dead-arc side away from the origin");
    }
    for (size_t a = 0; a < E.directions.size(); ++a)
      for (size_t b = a + 1; b < E.directions.size(); ++b)
        if (E.directions[a].z == E.directions[b].z) throw InternalError("two directions share a point");
    std::stable_sort(E.directions.begin(), E.directions.end(), [](const Direction& a, const Direction& b) {
      auto key = [](const Direction& d) { return d.tree_point < 0 ? 1 << 30 : d.tree_point; };
      return key(a) < key(b);
    });
    // Puiseux series count.
    long total = 0, expect = 0;
    for (auto& D : E.directions)
      for (int m : D.mult) total += m;
    for (int i : E.through) expect += static_cast<long>(g.curves[i].n()) / E.n_under;
    if (total != expect) throw InternalError("Puiseux series count on E fails");
    // Commutation of the rho diagram.
    for (int l : E.associated)
      for (int k : E.associated) {
        auto els = deck_elements(t, n, l, k);
        long a = els.back();
        const TreeDivisor& dl = t.div(l);
        const TreeDivisor& dk = t.div(k);
        for (auto& pt : dl.points) {
          Scalar img = pt.c * Scalar::zeta(n, a * dl.p);
          int q = -1;
          for (size_t j = 0; j < dk.points.size(); ++j)
            if (dk.points[j].c == img) q = static_cast<int>(j);
          if (q < 0) throw InternalError("deck transformation misses a point");
          if (count_by_curve(t, pt.members) != count_by_curve(t, dk.points[q].members))
            throw InternalError("deck transformation changes a multiplicity table");
          if (rho_to_E(g, E.id, k, img) != rho_to_E(g, E.id, l, pt.c))
            throw InternalError("rho diagram does not commute");
        }
      }
  }
}

void from_tree(DualGraph& g) {
  const PrefixTree& t = g.tree;
  for (auto& d : t.divisors()) {
    GraphDivisor E;
    E.id = d.id;
    E.v = d.p;
    E.parent = d.parent;
    E.b = d.b();
    E.through = curve_set(t, d.members);
    if (E.bifurcation()) E.contact_for = E.through;
    E.associated = {d.id};
    for (size_t q = 0; q < d.points.size(); ++q) {
      Direction D;
      D.z = d.points[q].c;
      D.tree_point = static_cast<int>(q);
      auto cnt = count_by_curve(t, d.points[q].members);
      for (auto& [c, m] : cnt) {
        D.curves.push_back(c);
        D.mult.push_back(m);
      }
      if (d.points[q].child >= 0) E.children.push_back(d.points[q].child);
      E.directions.push_back(D);
    }
    g.divs.push_back(std::move(E));
  }
}

}  // namespace

Scalar rho_to_E(const DualGraph& g, int E, int tree_div, const Scalar& c) {
  const GraphDivisor& D = g.divs.at(E);
  auto els = deck_elements(g.tree, g.ram.n, tree_div, D.associated.at(0));
  if (els.empty()) throw InternalError("divisor is not associated to E");
  Scalar c1 = c * Scalar::zeta(g.ram.n, els.front() * g.tree.div(tree_div).p);
  return c1.pow(D.n_E);
}

Scalar rho_between(const DualGraph& g, int l, int k, const Scalar& c) {
  auto els = deck_elements(g.tree, g.ram.n, l, k);
  if (els.empty()) throw InternalError("divisors are not Galois conjugate");
  return c * Scalar::zeta(g.ram.n, els.front() * g.tree.div(l).p);
}

int DualGraph::find_by_tree(int tree_id) const {
  for (auto& E : divs)
    for (int a : E.associated)
      if (a == tree_id) return E.id;
  return -1;
}

std::string DualGraph::dot() const {
  std::ostringstream os;
  os << "graph G {\n";
  for (auto& E : divs) {
    os << "  E" << E.id << " [label=\"G" << E.id << " v=" << E.v.get_str() << " m=" << E.m
       << " b=" << E.b << "\"];\n";
    if (E.parent >= 0) os << "  E" << E.parent << " -- E" << E.id << ";\n";
    for (auto& D : E.directions) {
      if (D.dead_arc_side && D.curves.empty()) {
        os << "  T" << E.id << " [shape=point];\n  E" << E.id << " -- T" << E.id
           << " [style=dashed];\n";
        continue;
      }
      bool leads_to_child = false;
      for (int ch : E.children) {
        auto& th = divs[ch].through;
        if (std::includes(D.curves.begin(), D.curves.end(), th.begin(), th.end()) ||
            std::includes(th.begin(), th.end(), D.curves.begin(), D.curves.end()))
          leads_to_child = true;
      }
      if (leads_to_child) continue;
      for (int c : D.curves)
        os << "  A" << c << " [shape=plaintext,label=\"" << curves[c].label() << "\"];\n  E" << E.id
           << " -- A" << c << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

DualGraph build_dual_graph(const std::vector<Branch>& curves, const std::vector<Side>& sides,
                           unsigned n) {
  if (curves.empty()) throw InputError("empty curve");
  if (curves.size() != sides.size()) throw InternalError("sides do not match curves");
  for (auto& b : curves)
    if (b.tangent_to_x0()) throw InputError("x = 0 is tangent to branch " + b.label());
  DualGraph g;
  g.curves = curves;
  g.sides = sides;
  g.ram = ramify(curves, sides, n);
  g.tree = PrefixTree(g.ram.sigma);
  auto sk = skeleton(curves);
  if (g.ram.n == 1) {
    from_tree(g);
    // The synthesized skeleton must list exactly E_1 and the bifurcations.
    std::vector<std::pair<long, int>> a, b;
    for (auto& E : sk) a.emplace_back(E.v.get_num().get_si(), E.b);
    for (auto& E : g.divs)
      if (E.id == 0 || E.bifurcation()) b.emplace_back(E.v.get_num().get_si(), E.b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InternalError("prefix tree and characteristic skeleton disagree");
  } else {
    g.divs = std::move(sk);
    g.compressed = true;
    associate(g);
  }
  return g;
}

}  // namespace jc
