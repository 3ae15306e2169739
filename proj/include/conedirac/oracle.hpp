#ifndef CONEDIRAC_ORACLE_HPP
#define CONEDIRAC_ORACLE_HPP

// Independent eigenvalue oracle.  Instead of Ferrers functions, it
// integrates the first-order angular system directly in the flat-measure
// variables,
//   u1' = (k+1/2) cot(t) u1 + (lambda+k) u2
//   u2' = (k+1-lambda) u1 - (k+1/2) cot(t) u2,
// launching from Frobenius data of the regular solution near t = 0 and
// measuring the alignment defect against the +-i eigenvectors of the
// boundary matrix at t = omega.  Eigenvalues are the lambdas where the
// corresponding defect vanishes.

#include <array>

#include "conedirac/angular.hpp"

namespace conedirac::oracle {

using Vec2 = std::array<double, 2>;

struct ShootingConfig {
  double theta_start = 1e-5;  // series launch offset from 0, in (0, 1e-3]
  double rtol = 1e-10;
  double atol = 1e-12;
  double max_step = 0.1;
};

// Leading-order Frobenius data of the regular solution at theta_start,
// normalized so the larger component is 1:
//   k >= 0:   (1, (k - lambda + 1) t0 / (2 (k+1)))
//   k <= -1:  ((lambda + k) t0 / (-2 k), 1)
// See docs/oracle-launch.md for the derivation from the ascending series.
Vec2 regular_initial_data(int k, double lambda, double theta_start);

// Endpoint value of the regular solution at theta = omega, by an embedded
// Dormand-Prince 5(4) integration with PI step control.
Vec2 integrate_fiber(int k, double lambda, double omega,
                     const ShootingConfig& config = {});

// Scale-free alignment defects against the boundary eigenvectors,
//   miss_{+-} = |det[psi(omega), xi_{+-i}]| / (|psi(omega)| |xi_{+-i}|).
// lambda is an oracle eigenvalue of branch Eq1 (resp. Eq2) when miss_plus
// (resp. miss_minus) vanishes.
struct MissValue {
  double lambda;
  double miss_plus;
  double miss_minus;
};
MissValue boundary_miss(int k, double lambda, double omega,
                        const ShootingConfig& config = {});

// Signed version of one branch's defect; this is what the scanner
// brackets, since the magnitude never changes sign.
double boundary_miss_signed(int k, double lambda, double omega,
                            angular::Branch branch,
                            const ShootingConfig& config = {});

// Scan-bracket-refine on the signed miss functions; intended solely for
// cross-validating the transcendental solver.
angular::AngularSpectrum oracle_spectrum(int k, double omega,
                                         angular::Window window,
                                         const ShootingConfig& config = {},
                                         double scan_step = 0.01);

}  // namespace conedirac::oracle

#endif
