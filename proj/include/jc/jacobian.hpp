#pragma once
// Jacobian curve of two foliations: Delta tables, the meromorphic function
// M_E, predicted multiplicities, covers and the decomposition into packets.
//
// Every divisor is analysed in ramified coordinates (u, v) with x = u^n, so
// that all branches are smooth; for n = 1 these are the usual coordinates.

#include <optional>
#include <string>
#include <vector>

#include "jc/foliation.hpp"

namespace jc {

// J with omega ^ eta = J dx ^ dy; AssumptionError when J = 0.
BiPoly jacobian_form(const OneForm& omega, const OneForm& eta);

enum class CheckKind { Theorem, Assumption, Internal, Info };

struct Check {
  std::string name;
  std::string citation;
  std::string where;
  bool ok = true;
  std::string detail;  // witness on failure, value otherwise
  CheckKind kind = CheckKind::Theorem;
};

class CheckLog {
 public:
  void add(Check c) { v_.push_back(std::move(c)); }
  void add(std::string name, std::string citation, std::string where, bool ok,
           std::string detail, CheckKind kind = CheckKind::Theorem);
  const std::vector<Check>& all() const { return v_; }
  long failures(CheckKind k) const;
  // 0 all pass, 3 assumption violated (or theorem failure under a violated
  // assumption), 4 theorem failure, 5 internal inconsistency.
  int status() const;
  // Marks that a declared hypothesis was withdrawn (e.g. generalized curve);
  // theorem failures then report as assumption violations.
  void downgrade() { downgraded_ = true; }
  bool downgraded() const { return downgraded_; }

 private:
  std::vector<Check> v_;
  bool downgraded_ = false;
};

// M_E(z) = sum_l Delta_l / (z - c_l).
struct MeromorphicME {
  UPoly num_full;  // sum_l Delta_l prod_{j != l} (z - c_j) over every listed point
  UPoly num, den;  // reduced: only points with Delta != 0
  std::vector<std::pair<UPoly, int>> bundles;  // square-free decomposition of num
  int t = 0;                                   // number of zeros, with multiplicity
  bool zero() const { return num.is_zero(); }
  std::string str(const std::string& var = "z") const;
};
MeromorphicME me_function(const std::vector<Scalar>& c, const std::vector<Scalar>& delta);

struct PointReport {
  Scalar c;
  std::vector<int> members;  // smooth (ramified) branches through the point
  int mC = 0, mD = 0;
  int child = -1;
  Scalar IF, IG, delta;
  std::optional<Scalar> IF_log, IG_log;
  bool collinear = false;
  int t = 0;    // order of the zero of M_E at c (collinear points only)
  int tau = 0;  // t_P on M(E), -1 on N(E), 0 otherwise
  long predicted = 0, measured = 0;
};

struct DivisorReport {
  int id = -1;  // prefix-tree id; -1 for the direct first blow-up report
  int parent = -1, parent_point = -1;
  int p = 1;
  int b = 0;
  bool bifurcation = false;
  bool collinear = true;
  bool purely_non_collinear = false;
  std::vector<PointReport> points;
  MeromorphicME M;
  Scalar delta_sum;  // over all listed points
  int nN = 0;        // number of non-collinear points
  int t_star = 0;    // zeros of M_E away from the points of Z
  UPoly JE;          // In_p(J)(1, y) after the shift y -> y + eps_E
  UPoly JE_free;     // JE without its roots at the listed points
  mpq_class nu_J;
  bool identity_ok = true;
  Scalar identity_const;
  long infinity_mass = 0;  // nu_J - p deg JE: weight of In(J) escaping to the corner
};

struct CollinearPacket {
  int point = 0;
  std::vector<int> cover;  // tree divisor ids
  long predicted = 0, measured = 0;
};

struct Packet {
  int divisor = 0;  // tree divisor id
  long nc = 0;      // m_0(J^E_nc) = t*(E)
  long nc_measured = 0;
  std::vector<CollinearPacket> collinear;
  long c() const;
  long total() const { return nc + c(); }
};

struct GraphPacket {
  int divisor = 0;  // G(Z) id
  mpq_class v;
  int b = 0;
  long n_E = 1, n_under = 1;
  std::vector<int> associated;
  bool collinear = false;
  long nc = 0, c = 0;
  long bound = 0;  // n_under n_E (b - 1)
};

struct Decomposition {
  std::vector<Packet> packets;            // one per non-collinear bifurcation divisor of the tree
  std::vector<GraphPacket> graph_packets; // aggregated on G(Z)
  long m0J = 0;
  long residual = 0;  // m_0(J*)
};

struct SeparatrixIntersection {
  std::string label;
  Side side = Side::C;
  long JS = 0, mu = 0, tau = 0;
};

struct IntersectionReport {
  std::vector<SeparatrixIntersection> seps;
  std::optional<long> mu_F, mu_G;
  long JSF = 0, JSG = 0;
  // Per non-collinear bifurcation divisor (smooth inputs): nu_E(C), nu_E(D).
  struct Nu {
    int divisor;
    long nuC, nuD, t_star;
  };
  std::vector<Nu> nu;
};

struct XTangency {
  Scalar quantity;                 // sum_l Delta_{E1}(R_l) c_l
  bool condition_holds = false;    // quantity != 0
  bool x_divides_initial = false;  // direct: x | In(J)
  std::optional<Scalar> log_expression;
};

struct AnalysisOptions {
  bool intersections = true;
  unsigned ramification = 0;  // 0: lcm of the multiplicities
};

struct Analysis {
  FoliationModel F, G;
  DualGraph graph;
  BiPoly J;
  OneForm wF, wG;  // ramified, saturated
  BiPoly Jr;       // J(u^n, v)
  std::vector<DivisorReport> divs;  // indexed by tree id
  DivisorReport e1;                 // first blow-up in the original coordinates
  Decomposition dec;
  IntersectionReport inter;
  XTangency xt;
  int nu_F = 0, nu_G = 0, m0J = 0;
  CheckLog log;
  std::vector<std::string> assumptions;

  const DivisorReport& div(int id) const { return divs.at(id); }
  bool non_collinear(int id) const { return !divs.at(id).collinear; }
};

Analysis analyze(const FoliationModel& F, const FoliationModel& G, const AnalysisOptions& opt = {});

// Theorem value m^C + m^D + tau_E(P); MathError on a collinear divisor.
long predicted_multiplicity(const DivisorReport& E, int point);
// Unique non-collinear cover of E at a collinear point, walking each
// branch's geodesic to its first non-collinear bifurcation divisor.
std::vector<int> cover_of(const Analysis& a, int E, int point);
// t_P + sum over the cover of (#N - t).
long collinear_packet(const Analysis& a, int E, int point, const std::vector<int>& cover);

}  // namespace jc
