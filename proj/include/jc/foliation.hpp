#pragma once
// Foliation models and local invariants at the origin.

#include <string>
#include <vector>

#include "jc/dual_graph.hpp"
#include "jc/oneform.hpp"

namespace jc {

enum class FoliationKind { OneForm, Hamiltonian, Logarithmic };

struct FoliationModel {
  std::string name;
  FoliationKind kind = FoliationKind::OneForm;
  OneForm omega;                   // saturated defining form
  std::vector<Branch> separatrices;
  std::vector<Scalar> lambda;      // residues (Hamiltonian: all 1)
  bool claims_generalized_curve = true;
  bool claims_non_dicritical = true;
  bool has_log_data() const { return kind != FoliationKind::OneForm; }
};

// f_1 ... f_r sum lambda_i df_i / f_i with f_i the Weierstrass equations.
FoliationModel logarithmic_model(std::vector<Branch> branches, std::vector<Scalar> lambda,
                                 std::string name = "L");
// df; separatrices must be the branches of f = 0.
FoliationModel hamiltonian_model(const BiPoly& f, std::vector<Branch> branches, std::string name = "H");
FoliationModel explicit_model(const OneForm& omega, std::vector<Branch> branches,
                              std::string name = "F");

int nu0(const FoliationModel& F);
long mu0(const FoliationModel& F);
// Order of t -> gamma^* omega; kInfinite when the curve is invariant.
long tangency_order(const OneForm& omega, const Param& g);
// Milnor number along an invariant curve: the vector field (-B, A) restricted
// to gamma equals h(t) gamma'(t); returns ord_t h.
long milnor_along(const OneForm& omega, const Param& g);
// Camacho-Sad index of an invariant smooth exact branch y = phi(x).
Scalar cs_index_smooth(const OneForm& omega, const Branch& s);

// Data of omega at a divisor of the prefix tree (chart x -> x, y -> x^p y + eps).
struct DivisorForm {
  UPoly AE, BE;  // A^E(0, y), B^E(0, y)
  mpq_class nu;
  InitialForm in;
};
DivisorForm divisor_form(const OneForm& omega, const UPoly& eps, int p);
// -Res_{y=c} B^E / A^E; MathError "dicritical divisor" when E is not invariant.
Scalar cs_index_at_divisor_point(const DivisorForm& d, const Scalar& c);

// kappa_E = sum_s lambda_s * shared_depth(E, s) on the prefix tree.
Scalar log_kappa(const PrefixTree& t, const std::vector<Scalar>& lambda_sigma, int E);
Scalar log_cs_index(const PrefixTree& t, const std::vector<Scalar>& lambda_sigma, int E, int point);

}  // namespace jc
