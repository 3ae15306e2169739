#ifndef CONEDIRAC_HALFLINE_HPP
#define CONEDIRAC_HALFLINE_HPP

// Half-line radial fiber operators: one-dimensional Dirac expressions with
// an off-diagonal Coulomb-type coupling on (0, b).  The classification
// below covers the coupling/endpoint cases with equal deficiency indices;
// for |alpha| < 1/2, b = inf the deficiency functions are explicit in
// modified Bessel K.
//
// Two sign conventions are in play and are bridged by one conversion map
// (docs/sign-conventions.md):
//   tau_alpha f = ( f2' + (alpha/x) f2 , -f1' + (alpha/x) f1 )
//   d_lambda psi = ( -psi2' - (lambda/x) psi2 , psi1' - (lambda/x) psi1 )
// satisfy   tau_alpha f = z f   <=>   d_{-alpha} (f2, f1) = z (f2, f1).

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "conedirac/errors.hpp"

namespace conedirac::halfline {

using Complex = std::complex<double>;
using CVec2 = std::array<Complex, 2>;

inline constexpr double kInfiniteEndpoint =
    std::numeric_limits<double>::infinity();

struct HalflineProblem {
  double alpha;       // Coulomb coupling
  double endpoint_b;  // > 0 or kInfiniteEndpoint

  HalflineProblem(double alpha_, double endpoint_b_);
  bool infinite() const { return std::isinf(endpoint_b); }
};

struct DeficiencyReport {
  int n_plus = 0;
  int n_minus = 0;
  bool essentially_self_adjoint = false;
  std::string domain_note;
};

// Deficiency-index table:
//   |alpha| >= 1/2, b finite  -> (1,1), boundary data (f1(b), f2(b))
//   |alpha| >= 1/2, b = inf   -> (0,0), essentially self-adjoint;
//                                minimal domain H^1_0 when |alpha| > 1/2
//   |alpha| <  1/2, b = inf   -> (1,1), Bessel-K deficiency pair
//   |alpha| <  1/2, b finite  -> outside the classified cases (throws)
DeficiencyReport classify(const HalflineProblem& problem);

enum class SignPM { plus, minus };

// Deficiency function f_alpha^{+-}(x) spanning ker(T_alpha -+ i) for
// alpha in (-1/2, 1/2):
//   ( x^{1/2} K_{1/2-alpha}(x), -+ i x^{1/2} K_{1/2+alpha}(x) ).
CVec2 deficiency_function(double alpha, SignPM sign, double x);

// A smooth compactly supported scalar test function with an analytic
// derivative, sampled by the quadrature below.
struct RadialTestFunction {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  double support_lo = 0.0;
  double support_hi = 0.0;
};

// Residual of the fiber Hardy inequality
//   int |psi' -+ lambda psi / x|^2 dx  >=  (lambda -+ 1/2)^2 int |psi|^2/x^2 dx
// (>= -1e-9 * scale for every admissible psi).  Composite Gauss-Legendre
// with 64 nodes per dyadic sub-interval of the support.
double fiber_hardy_residual(double lambda, SignPM sign,
                            const RadialTestFunction& psi);

// d_lambda applied to a sampled two-component function on a strictly
// positive grid, derivatives by central differences (one-sided at the
// ends):  ( -psi2' - lambda psi2 / x , psi1' - lambda psi1 / x ).
std::vector<CVec2> dirac_fiber_apply(double lambda, std::span<const CVec2> psi,
                                     std::span<const double> grid);

}  // namespace conedirac::halfline

#endif
