#include "jc/foliation.hpp"

#include "jc/fulton.hpp"

namespace jc {

namespace {

long first_nonzero(const std::vector<Scalar>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<long>(i);
  return -1;
}

OneForm checked_saturation(const OneForm& w) { return w.saturated(); }

}  // namespace

FoliationModel logarithmic_model(std::vector<Branch> branches, std::vector<Scalar> lambda,
                                 std::string name) {
  if (branches.size() != lambda.size()) throw InputError("one residue per branch is required");
  if (branches.empty()) throw InputError("logarithmic model without branches");
  std::vector<BiPoly> f;
  for (auto& b : branches) f.push_back(implicit_equation(b));
  OneForm w;
  for (size_t i = 0; i < f.size(); ++i) {
    if (lambda[i].is_zero()) throw InputError("residues of a logarithmic model must be nonzero");
    BiPoly others(Scalar(1));
    for (size_t j = 0; j < f.size(); ++j)
      if (j != i) others = others * f[j];
    w.A += others * f[i].dx() * lambda[i];
    w.B += others * f[i].dy() * lambda[i];
  }
  FoliationModel F;
  F.name = std::move(name);
  F.kind = FoliationKind::Logarithmic;
  F.omega = checked_saturation(w);
  F.separatrices = std::move(branches);
  F.lambda = std::move(lambda);
  return F;
}

FoliationModel hamiltonian_model(const BiPoly& f, std::vector<Branch> branches, std::string name) {
  FoliationModel F;
  F.name = std::move(name);
  F.kind = FoliationKind::Hamiltonian;
  F.omega = checked_saturation(exterior_derivative(f));
  F.lambda.assign(branches.size(), Scalar(1));
  F.separatrices = std::move(branches);
  return F;
}

FoliationModel explicit_model(const OneForm& omega, std::vector<Branch> branches, std::string name) {
  FoliationModel F;
  F.name = std::move(name);
  F.kind = FoliationKind::OneForm;
  F.omega = checked_saturation(omega);
  F.separatrices = std::move(branches);
  return F;
}

int nu0(const FoliationModel& F) { return F.omega.order(); }

long mu0(const FoliationModel& F) {
  if (F.omega.order() == 0) return 0;
  return local_intersection(F.omega.A, F.omega.B);
}

long tangency_order(const OneForm& w, const Param& g) {
  // gamma^* omega = A(gamma) x' + B(gamma) y'
  Param gg = g;
  if (g.exact) {
    long bound = 0;
    for (auto* P : {&w.A, &w.B})
      for (auto& [e, c] : P->terms())
        bound = std::max<long>(bound, e.first * (long)g.xs.size() + e.second * (long)g.ys.size());
    // room for the derivative terms x'(t), y'(t)
    gg.T = bound + static_cast<long>(g.xs.size() + g.ys.size()) + 2;
  }
  auto a = compose_series(w.A, gg), b = compose_series(w.B, gg);
  std::vector<Scalar> s(gg.T, Scalar(0));
  for (long k = 0; k + 1 < gg.T; ++k) {
    // coefficient of t^k in A x' + B y'
    Scalar acc(0);
    for (long i = 0; i <= k; ++i) {
      long j = k - i;  // from x' (t^j comes from x_{j+1} (j+1))
      if (j + 1 < (long)g.xs.size() && !g.xs[j + 1].is_zero()) acc += a[i] * g.xs[j + 1] * Scalar(j + 1);
      if (j + 1 < (long)g.ys.size() && !g.ys[j + 1].is_zero()) acc += b[i] * g.ys[j + 1] * Scalar(j + 1);
    }
    s[k] = acc;
  }
  long o = first_nonzero(std::vector<Scalar>(s.begin(), s.end() - 1));
  if (o < 0) return kInfinite;
  return o;
}

long milnor_along(const OneForm& w, const Param& g) {
  long ox = first_nonzero(g.xs), oy = first_nonzero(g.ys);
  if (ox >= 0) {
    long ob = evaluate_along(w.B, g, kInfinite);
    if (ob == kInfinite) throw MathError("Milnor number along S is infinite (B vanishes on S)");
    return ob - ox + 1;
  }
  if (oy < 0) throw MathError("degenerate parametrization");
  long oa = evaluate_along(w.A, g, kInfinite);
  if (oa == kInfinite) throw MathError("Milnor number along S is infinite (A vanishes on S)");
  return oa - oy + 1;
}

Scalar cs_index_smooth(const OneForm& w, const Branch& s) {
  if (s.n() != 1 || !s.exact()) throw InputError("index along a smooth exact branch only");
  std::vector<Scalar> eps(s.last_exponent() + 1, Scalar(0));
  for (auto& [j, c] : s.terms()) eps[j] = c;
  OneForm t = w.shift_y(UPoly(eps));
  UPoly a0 = t.A.at_y0();
  if (!a0.is_zero()) throw MathError("curve is not invariant");
  std::vector<Scalar> g(std::max(t.A.deg_x() + 1, 1), Scalar(0));
  for (auto& [e, c] : t.A.terms())
    if (e.second == 1) g[e.first] += c;
  UPoly h = t.B.at_y0();
  if (h.is_zero()) throw MathError("singular curve of zeros along the separatrix");
  return -URational(UPoly(g), h).residue_at(Scalar(0));
}

DivisorForm divisor_form(const OneForm& w, const UPoly& eps, int p) {
  OneForm t = w.shift_y(eps);
  DivisorForm d;
  d.in = initial_form(t, mpq_class(p));
  d.nu = d.in.nu;
  UPoly a = d.in.form.A.at_x1(), b = d.in.form.B.at_x1();
  d.AE = a + UPoly({Scalar(0), Scalar(p)}) * b;
  d.BE = b;
  return d;
}

Scalar cs_index_at_divisor_point(const DivisorForm& d, const Scalar& c) {
  if (d.AE.is_zero()) throw MathError("dicritical divisor: exceptional divisor is not invariant");
  if (d.BE.is_zero()) return Scalar(0);
  return -URational(d.BE, d.AE).residue_at(c);
}

Scalar log_kappa(const PrefixTree& t, const std::vector<Scalar>& lam, int E) {
  Scalar k(0);
  for (size_t s = 0; s < t.branches().size(); ++s)
    if (!lam[s].is_zero()) k += lam[s] * Scalar(t.shared_depth(E, static_cast<int>(s)));
  return k;
}

Scalar log_cs_index(const PrefixTree& t, const std::vector<Scalar>& lam, int E, int point) {
  Scalar kappa = log_kappa(t, lam, E);
  if (kappa.is_zero()) throw MathError("kappa_E = 0: index undefined (excluded configuration)");
  Scalar s(0);
  for (int m : t.div(E).points.at(point).members) s += lam[m];
  return -s / kappa;
}

}  // namespace jc
