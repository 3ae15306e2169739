#ifndef CONEDIRAC_ANGULAR_HPP
#define CONEDIRAC_ANGULAR_HPP

// Angular fiber operators of the spin-orbit operator on the spherical cap
// cut out by a circular cone of half-aperture omega.  For each momentum
// index k the eigenvalues are the roots of two transcendental equations in
// Ferrers functions evaluated at cos(omega); this module defines those
// characteristic functions, locates the eigenvalue sets, evaluates the
// eigenfunctions, and checks the structural spectral properties (symmetry,
// simplicity, gap bounds, intertwining).

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "conedirac/errors.hpp"
#include "conedirac/rootscan.hpp"

namespace conedirac::angular {

using Complex = std::complex<double>;
using Spinor2 = std::array<Complex, 2>;
using Spinor4 = std::array<Complex, 4>;

// Which of the two transcendental equations a root solves.
enum class Branch { Eq1, Eq2 };

// Half-aperture strictly inside (0, pi); omega = pi/2 is the half-space
// case, which the fiber reduction excludes, so the constructor rejects it
// within 1e-9 rad.
struct AngularProblem {
  int k;
  double omega;

  AngularProblem(int k_, double omega_);
};

struct EigenvalueRecord {
  double lambda;
  Branch branch;
  double residual;
};

struct Window {
  double lo;
  double hi;
};

struct AngularSpectrum {
  int k = 0;
  double omega = 0.0;
  Window window{0.0, 0.0};
  std::vector<EigenvalueRecord> records;  // sorted by lambda, strictly increasing

  // smallest |lambda| among records; infinity when empty
  double min_abs_lambda() const;
};

// The 2x2 unitary boundary matrix A_omega with its +i / -i eigenvectors.
struct BoundaryMatrix {
  double omega;
  std::array<std::array<Complex, 2>, 2> entries;
  std::array<double, 2> xi_plus;   // eigenvector for +i (real)
  std::array<double, 2> xi_minus;  // eigenvector for -i (real)

  static BoundaryMatrix make(double omega);
};

// Characteristic function whose zeros are the fiber eigenvalues.
//   k >= 0:  Eq1: (l+k+1) P_l^{-k-1}(c) - P_{l-1}^{-k}(c)
//            Eq2: (l+k+1) P_l^{-k-1}(c) + P_{l-1}^{-k}(c)
//   k <= -1: Eq1: (l+k) P_{l-1}^{k}(c) + P_l^{k+1}(c)
//            Eq2: (l+k) P_{l-1}^{k}(c) - P_l^{k+1}(c)
// with c = cos(omega).
double char_fn(const AngularProblem& problem, double lambda, Branch branch);

struct FindRootsOptions {
  double scan_step = 0.005;
  rootscan::Options refine{};
  double residual_tol = 1e-8;
};

// All roots of one branch inside the window, each refined to ~1e-10 in
// lambda with |char_fn| <= residual_tol.  Scan diagnostics (barriers,
// stalled brackets) are reported through *diag when given.
std::vector<EigenvalueRecord> find_roots(const AngularProblem& problem,
                                         Branch branch, Window window,
                                         double scan_step,
                                         rootscan::Diagnostics* diag = nullptr);

// Union of both branches, sorted and deduplicated.  Postconditions checked:
// no eigenvalue at 0, no branch collision within 1e-8 (the spectrum is
// simple), and every Eq1 root has its negative among the Eq2 roots whenever
// it lies inside the window.
AngularSpectrum spectrum(const AngularProblem& problem, Window window,
                         double scan_step = 0.005);

enum class SpinorSign { plus, minus };

// One sample of an angular eigenfunction.
struct SpinorSample {
  double theta;
  double phi;
  Spinor2 value;
};

// Two-component angular eigenfunction Phi^{+-}_{k,lambda}(theta, phi):
//   k >= 0:  ( P^{-k}_{s l - 1}(cos t) e^{i k phi},
//              (k - s l + 1) P^{-k-1}_{s l - 1}(cos t) e^{i (k+1) phi} )
//   k <= -1: ( (l + s k) P^{k}_{s l - 1}(cos t) e^{i k phi},
//              s P^{k+1}_{s l - 1}(cos t) e^{i (k+1) phi} )
// with s = +-1 the sign choice and l = lambda.  theta must lie in
// [1e-8, omega]; below 1e-8 rad the components vanish to machine noise and
// sampling is rejected.
Spinor2 eigenfunction_value(const AngularProblem& problem, double lambda,
                            SpinorSign sign, double theta, double phi = 0.0);
SpinorSample eigenfunction(const AngularProblem& problem,
                           const EigenvalueRecord& record, SpinorSign sign,
                           double theta, double phi = 0.0);

// Four-component eigenfunction (c i Phi) (+) Phi of the fiber operator for
// the eigenvalue s*lambda, where the sign c of the i-block follows from the
// branch the record solves.
Spinor4 eigenfunction_psi(const AngularProblem& problem,
                          const EigenvalueRecord& record, SpinorSign sign,
                          double theta, double phi = 0.0);

// Max deviation of the radial-matrix intertwining identity
//   [[cos t, sin t],[sin t, -cos t]] Phi^{+} = Phi^{-}   (phi = 0 slice)
// and its mirror over the given theta samples, scaled by the local spinor
// magnitude.
double spinor_intertwine_check(const AngularProblem& problem,
                               const EigenvalueRecord& record,
                               std::span<const double> theta_samples);

struct GapReport {
  double min_abs_lambda = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  bool censored = false;     // window contained no root; min is a lower bound
  bool conjectured = false;  // only the conjectured 1/2 bound applies
};

// Proven lower bounds on |lambda|:
//   pi/(4 omega) + 1/2          for omega < pi/2 (all k),
//   (sqrt(3)+1)/2               for |k + 1/2| >= 3/2 (all omega),
//   1/2 (conjectured, flagged)  for omega > pi/2 and k in {-1, 0}.
// The strongest applicable bound is reported.
GapReport gap_report(const AngularProblem& problem, Window window,
                     double scan_step = 0.005);

}  // namespace conedirac::angular

#endif
