#ifndef CONEDIRAC_SPECFUN_HPP
#define CONEDIRAC_SPECFUN_HPP

// Self-contained real special-function kernel: gamma, Gauss hypergeometric
// 2F1, Ferrers functions of the first kind P_nu^mu on the cut (-1,1) for
// real degree and integer order, and modified Bessel functions I_nu, K_nu.
//
// Every kernel is deterministic and branch-stable: identical inputs give
// bit-identical outputs, and no global state is touched.

#include <cstdint>

#include "conedirac/errors.hpp"

namespace conedirac::specfun {

// Gamma function via a fixed-coefficient Lanczos rational approximation,
// with reflection for x < 0.5.  Relative accuracy ~1e-14 on |x| <= 50.
// Throws PoleError at non-positive integers.
double gamma_fn(double x);

// sin(pi*x) with argument reduction done on x itself, so large |x| does
// not lose the phase.
double sin_pi(double x);

// Gauss hypergeometric function 2F1(a, b; c; z) for z in [0, 1).
//
// The defining series converges on the whole unit disc, so it is summed
// directly; the accumulation runs in double-double arithmetic because for
// large |a| ~ |b| ~ nu the terms grow like exp(2 nu log(1+sqrt(z))) before
// the alternating tail cancels them, which is far beyond what a plain
// double accumulator survives near z -> 1.
//
// Termination: two consecutive terms below 1e-16 relative, hard cap of
// 10000 terms (ConvergenceError on breach).  Throws PoleError when c is a
// non-positive integer.
double hyp2f1(double a, double b, double c, double z);

// Argument bundle for Ferrers evaluations.  Construction validates
// x strictly inside (-1, 1).  The degree is stored as given; evaluation
// canonicalizes it with the reflection P_nu = P_{-nu-1}.
struct FerrersArgs {
  double degree;  // nu
  int order;      // mu, may be negative
  double x;       // in (-1, 1)

  FerrersArgs(double degree_, int order_, double x_);
};

// Value of P_nu^mu(x) together with a flag marking the gamma-pole limit
// case of the positive-order connection (integer degree below the order),
// where the finite limit value 0 is returned instead of an error so that
// characteristic functions stay continuous in the degree.
struct FerrersEval {
  double value;
  bool pole_limit;
};

// Ferrers function of the first kind, P_nu^mu(x), x in (-1,1).
//
// Non-positive orders -m go through the hypergeometric representation in
// the variable (1-x)/2,
//   P_nu^{-m}(x) = ((1-x)/(1+x))^{m/2} / m! * 2F1(-nu, nu+1; 1+m; (1-x)/2),
// after the degree reflection nu -> -nu-1 normalizes nu >= -1/2.  Positive
// integer orders use the integer-order connection
//   P_nu^{m} = (-1)^m Gamma(nu+m+1)/Gamma(nu-m+1) * P_nu^{-m},
// whose phase matches the on-the-cut convention the degree/order
// recurrences below are written in (DLMF 14.9.3).
FerrersEval ferrers_p_ext(double degree, int order, double x);
double ferrers_p(double degree, int order, double x);
double ferrers_p(const FerrersArgs& args);

// d/dx P_nu^mu(x), obtained by differentiating the hypergeometric
// representation term-wise (no finite differences).
double ferrers_p_derivative(double degree, int order, double x);

// Named three-term recurrence / connection identities used as self-tests
// of ferrers_p.  Returns |LHS - RHS| of the identity at (degree, order, x).
enum class FerrersIdentity : std::uint8_t {
  GR8733_5,     // P_nu^mu = P_{-nu-1}^mu
  GR8735_1,     // (nu-mu+1) P_{nu+1}^mu = (nu+mu+1) x P_nu^mu + s P_nu^{mu+1}
  GR8735_2,     // (nu+mu) P_{nu-1}^mu  = (nu-mu) x P_nu^mu  - s P_nu^{mu+1}
  GR8735_3,     // P_{nu-1}^mu = x P_nu^mu + (nu-mu+1) s P_nu^{mu-1}
  GR8735_4,     // P_{nu+1}^mu = x P_nu^mu - (nu+mu)   s P_nu^{mu-1}
  DLMF14_10_2,  // s P_nu^{mu+1} - (nu-mu+1) P_{nu+1}^mu + (nu+mu+1) x P_nu^mu = 0
  DLMF14_10_4,  // (1-x^2) dP_nu^mu/dx = (mu-nu-1) P_{nu+1}^mu + (nu+1) x P_nu^mu
};
// s = sqrt(1-x^2) above.
double ferrers_identity_residual(FerrersIdentity id, double degree, int order,
                                 double x);

// Modified Bessel function of the second kind, K_nu(x), nu >= 0, x > 0,
// by composite Gauss-Legendre quadrature of
//   K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt
// with the panel count doubled until self-consistent.  bessel_k_panels
// exposes a fixed panel count for convergence testing.
double bessel_k(double nu, double x);
double bessel_k_panels(double nu, double x, int panels);

// Modified Bessel function of the first kind, I_nu(x), by ascending series.
double bessel_i(double nu, double x);

}  // namespace conedirac::specfun

#endif
