#ifndef CONEDIRAC_VERIFY_HPP
#define CONEDIRAC_VERIFY_HPP

// Cross-cutting verification engine: the angular quadratic-form identity,
// the interval Hardy lemma, transcendental-vs-shooting cross-validation,
// the perturbation budget, and the quantum-dot equivalence matrix.
// Every check emits a VerificationReport.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "conedirac/angular.hpp"
#include "conedirac/oracle.hpp"
#include "conedirac/testfunctions.hpp"

namespace conedirac::verify {

struct VerificationReport {
  std::string check_id;
  double max_residual = 0.0;
  bool passed = false;
  std::map<std::string, double> parameters;
  std::string note;
};

// Quadratic-form identity for the flat-measure fiber operator: with
// alpha = k + 1/2 and a boundary-adapted psi,
//   ||(T_k - 1/2) psi||^2  =  sum_j int |psi_j'|^2
//     + int [alpha(alpha-1)(|psi1|^2+|psi3|^2)
//            + alpha(alpha+1)(|psi2|^2+|psi4|^2)] / sin^2
// with the boundary terms B(psi1,psi2)(omega) + B(psi3,psi4)(omega)
// cancelling.  max_residual is the relative LHS/RHS discrepancy; the
// boundary-term sum is reported in parameters["boundary_term"].
VerificationReport angular_form_identity(const angular::AngularProblem& problem,
                                         const testfn::SpinorTestFunction& psi,
                                         int quad_nodes = 1024);

// Interval Hardy inequality on (0, omega], omega <= pi/2:
//   int |f'|^2 - (1/4) int |f|^2/sin^2 - (pi^2/(16 omega^2)) int |f|^2 >= 0.
// passed iff the residual is >= -1e-9 * scale.
VerificationReport interval_hardy_check(double omega,
                                        const testfn::ScalarTestFunction& f,
                                        int quad_nodes = 1024);

// Pointwise comparison bound behind the Hardy lemma:
//   (pi/(2 omega))^2 / sin^2(pi theta/(2 omega)) >= 1/sin^2(theta)
// sampled on (0, omega).
VerificationReport hardy_pointwise_bound(double omega, int samples = 1000);

// Hausdorff agreement of the transcendental and shooting root sets.
VerificationReport cross_validate(int k, double omega, angular::Window window,
                                  double tol,
                                  const oracle::ShootingConfig& config = {},
                                  double scan_step = 0.005);

enum class PerturbationVerdict : std::uint8_t {
  SelfAdjointClosure,       // nu <  pi/(4 omega)
  EssentiallySelfAdjoint,   // nu == pi/(4 omega) (within 1e-12)
  NoGuarantee,              // nu >  pi/(4 omega)
};
// Stability budget for Coulomb-like Hermitian perturbations with
// sup |x||V(x)| = nu on a convex cone.  Rejects omega >= pi/2.
PerturbationVerdict perturbation_budget(double omega, double nu);
std::string to_string(PerturbationVerdict v);

// Diagonal equivalence matrix between the quantum-dot boundary condition
// at parameter theta and the +- variants of the bag condition:
//   diag(a, a, b, b),  a = sqrt(|cos t|/(1+sin t)), b = sqrt(|cos t|/(1-sin t)),
// with the minus variant for t in (pi/2, 3pi/2).  The zig-zag values
// t = pi/2, 3pi/2 are rejected (within 1e-9).
struct QuantumDotMatrix {
  std::array<double, 4> diag;
  enum class Equivalence : std::uint8_t { MITplus, MITminus } equivalence;
};
QuantumDotMatrix quantum_dot_matrix(double theta);

}  // namespace conedirac::verify

#endif
