#pragma once
// Dual graphs of reductions of singularities.
//
// Smooth branches (possibly over a cyclotomic field) are resolved by a prefix
// tree: divisor E_p with prefix (a_1..a_{p-1}) exists when at least two
// branches share that prefix, and its first-chart points are the distinct
// coefficients a_p. Singular branches are ramified by x = u^n first; the
// graph of the original curve is synthesized from characteristic exponents
// and coincidences and matched against Galois orbits of the ramified tree.

#include <string>
#include <vector>

#include "jc/branch.hpp"

namespace jc {

enum class Side { C, D };

// Smooth branch v = sum_{j>=1} c_j u^j in ramified coordinates.
struct SmoothBranch {
  std::vector<Scalar> c;  // c[j] for u^j; c[0] unused (zero)
  int T = 0;              // known mod u^T; 0 = exact
  int curve = 0;          // index of the original branch
  unsigned conj = 0;      // conjugate index k (u -> zeta^k u)
  Side side = Side::C;
  std::string label;
  Scalar coeff(int j) const;
  bool known(int j) const { return T == 0 || j < T; }
  int last() const { return static_cast<int>(c.size()) - 1; }
  Branch as_branch() const;
};

struct TreePoint {
  Scalar c;                  // coordinate in the first chart of E_red
  std::vector<int> members;  // smooth branches through the point
  int child = -1;            // divisor obtained by blowing up the point
};

struct TreeDivisor {
  int id = 0;
  int parent = -1, parent_point = -1;
  int p = 1;                   // valuation in ramified coordinates
  std::vector<Scalar> prefix;  // a_1..a_{p-1}
  std::vector<int> members;    // smooth branches whose geodesic contains E
  std::vector<TreePoint> points;
  int b() const { return static_cast<int>(points.size()); }
  bool bifurcation() const { return b() >= 2; }
  UPoly eps() const;  // a_1 x + ... + a_{p-1} x^{p-1}
  int point_of(int branch) const;  // index into points, or -1
};

class PrefixTree {
 public:
  PrefixTree() = default;
  explicit PrefixTree(std::vector<SmoothBranch> branches);
  const std::vector<TreeDivisor>& divisors() const { return divs_; }
  const TreeDivisor& div(int id) const { return divs_.at(id); }
  const std::vector<SmoothBranch>& branches() const { return br_; }
  // Number of divisors E' <= E on the geodesic of branch s:
  // min(p(E), ord_u(phi_s - eps_E)).
  int shared_depth(int E, int s) const;
  // Divisor reached from point P of E through the non-bifurcation chain.
  // Returns -1 when no divisor arises at P. Chain ids are appended.
  int next_bifurcation(int E, int P, std::vector<int>* chain = nullptr) const;
  std::vector<int> bifurcation_divisors() const;
  std::string dot() const;

 private:
  std::vector<SmoothBranch> br_;
  std::vector<TreeDivisor> divs_;
};

// Ramification x = u^n of a list of branches; n = 0 picks the lcm of the
// multiplicities, otherwise n must be a multiple of it.
struct Ramified {
  unsigned n = 1;
  std::vector<SmoothBranch> sigma;
};
Ramified ramify(const std::vector<Branch>& curves, const std::vector<Side>& sides,
                unsigned n = 0);

// One outgoing direction of a divisor of G(Z).
struct Direction {
  Scalar z;                  // coordinate on E_red (0 for the dead-arc side)
  std::vector<int> curves;   // original branches leaving E in this direction
  std::vector<int> mult;     // per curve: Puiseux series through the fiber on E~^1
  bool dead_arc_side = false;
  int tree_point = -1;       // a representative point on the first associated divisor
};

struct GraphDivisor {
  int id = 0;
  mpq_class v;
  long m = 1;
  int b = 0;
  int parent = -1;
  std::vector<int> children;
  std::vector<int> through;       // I_E
  std::vector<int> puiseux_for;   // curves for which E is a Puiseux divisor
  std::vector<int> contact_for;
  long n_E = 1, n_under = 1;      // n_E and underlined n_E
  int k_E = 0;
  bool puiseux = false;           // Puiseux divisor for Z
  bool dead_arc = false;          // end of a dead arc
  std::vector<int> associated;    // ids in the ramified prefix tree
  std::vector<Direction> directions;
  bool bifurcation() const { return b >= 2; }
  bool terminal() const { return b == 0; }
};

struct DualGraph {
  std::vector<Branch> curves;
  std::vector<Side> sides;
  Ramified ram;
  PrefixTree tree;                   // graph of the ramified curve
  std::vector<GraphDivisor> divs;    // graph of Z (skeleton when n > 1)
  bool compressed = false;           // chains and dead arcs omitted
  int root() const { return 0; }
  int find_by_tree(int tree_id) const;  // G(Z) divisor with tree_id associated
  std::string dot() const;
};

// Builds G(Z) and G(Z~) and runs the internal consistency checks (ramified
// valence formula, per-branch point counts, rho-diagram commutation);
// violations raise InternalError.
DualGraph build_dual_graph(const std::vector<Branch>& curves, const std::vector<Side>& sides,
                           unsigned n = 0);

// Coordinate on E_red of a point of an associated divisor of E.
Scalar rho_to_E(const DualGraph& g, int E, int tree_div, const Scalar& c);
// Image of a point of E~^l on E~^k under a deck transformation.
Scalar rho_between(const DualGraph& g, int tree_l, int tree_k, const Scalar& c);

}  // namespace jc
