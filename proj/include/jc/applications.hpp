#pragma once
// Specializations of the jacobian analysis: Kuo-Parusinski tree models,
// approximate roots (semiroots) of an irreducible curve, and polar curves.

#include <cstdint>
#include <string>
#include <vector>

#include "jc/jacobian.hpp"

namespace jc {

// Hamiltonian pair df, dg with f, g the products of the Weierstrass
// equations of the given exact branches.
Analysis hamiltonian_pair(const std::vector<Branch>& f, const std::vector<Branch>& g,
                          const AnalysisOptions& opt = {});
BiPoly product_equation(const std::vector<Branch>& branches);

// ---- Kuo-Parusinski tree model ----

struct TreeTrunk {
  Scalar c;        // where the trunk grows on its bar
  int s = 0, t = 0;  // bimultiplicity [s, t]
  int bar = -1;    // bar drawn on top of this trunk, -1 for a leaf
};

struct TreeBar {
  int id = 0;
  int tree_div = -1;   // bifurcation divisor of G(Z~)
  int graph_div = -1;  // G(Z) divisor it is associated to
  int parent_bar = -1, parent_trunk = -1;
  mpq_class h;         // height = v(E~) / n
  int s = 0, t = 0;    // bimultiplicity of the trunk the bar sits on
  std::vector<TreeTrunk> trunks;
  mpq_class nu_f, nu_g;              // from kappa
  mpq_class nu_f_curvette, nu_g_curvette;  // ord_x along an E-curvette
  std::vector<Scalar> det;           // | nu_f p_k ; nu_g q_k |
  std::vector<Scalar> delta_B;       // det / (n^2 nu_f nu_g)
  MeromorphicME M_B;
  bool relation_ok = false;          // M_E~ = -n M_B
};

struct TreeModel {
  unsigned n = 1;
  int s0 = 0, t0 = 0;  // main trunk under the ground bar
  std::vector<TreeBar> bars;
  std::string render() const;  // indented text art
  std::string table() const;   // one row per trunk
};

// Builds the tree model from a hamiltonian analysis and appends its checks
// to a.log.
TreeModel tree_model(Analysis& a);

// ---- approximate roots ----

struct SemirootResult {
  bool ok = false;
  std::string reason;
  long deg_expected = 0, deg_actual = 0;
  mpq_class coincidence_expected, coincidence_actual;
  std::vector<int> char_expected, char_actual;
};
// Condition (1): deg_y h = beta_0 / e_k and C(f, h) = beta_{k+1} / beta_0;
// condition (2): h has characteristic exponents beta_0/e_k .. beta_k/e_k.
SemirootResult semiroot_check(const Branch& f, const Branch& h, int k);

struct RootLevel {
  int i = 0;          // index of E_i
  mpq_class v;        // beta_i / beta_0
  int graph_div = -1;
  bool collinear = false;
  bool expected_collinear = false;
  long packet = 0;          // m0(J^i) from the pipeline
  long packet_oracle = 0;   // free roots of the directly expanded jacobian
  long expected = -1;       // n_1 ... n_{i-1}(n_i - 1) for i >= k+2
  std::vector<UPoly> numerators;  // M numerators over the associated divisors
};

struct ApproxRootReport {
  Analysis a;
  SemirootResult semiroot;
  int k = 0;
  CharacteristicData cd;
  std::vector<RootLevel> levels;  // E_1 .. E_g
  BiPoly J_direct;
  long deep_roots = 0;      // roots of J with contact >= beta_{k+1}/beta_0
  long deep_expected = 0;   // sum of m0(J^i), i >= k+2
};
ApproxRootReport approx_root_analysis(const Branch& f, const Branch& h, int k);

// ---- polar curves ----

struct PolarPacket {
  int graph_div = -1;
  mpq_class v;
  long expected = 0;  // sum over associated divisors of (b~^C - 1)
  long measured = 0;
};

struct PolarReport {
  Analysis a;
  Scalar dir_a, dir_b;      // G = a dy - b dx
  Scalar certificate;          // z^(b-1) coefficient of the M_E1 numerator
  Scalar literal_certificate;  // sum c_j + d sum I_{R_j}
  int attempts = 0;
  bool corner_minus_one = false;
  bool all_purely_non_collinear = false;
  std::vector<PolarPacket> packets;
  long PC = 0;              // (P, C)_0
};
// Seeded generic direction, redrawn while the first-divisor certificate
// vanishes (at most max_attempts draws).
PolarReport polar_analysis(const FoliationModel& F, std::uint64_t seed, int max_attempts = 16);
PolarReport polar_analysis(const FoliationModel& F, const Scalar& a, const Scalar& b);

}  // namespace jc
