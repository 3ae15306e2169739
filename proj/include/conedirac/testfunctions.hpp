#ifndef CONEDIRAC_TESTFUNCTIONS_HPP
#define CONEDIRAC_TESTFUNCTIONS_HPP

// Smooth test functions with analytic derivatives, used by the quadrature
// checks.  Scalar kinds: a C-infinity bump on (a, b), a polynomial times a
// bump, and a ramped kind that vanishes identically left of its support
// but is free (nonzero, flat) at the right endpoint.  The spinor kind is
// the boundary-adapted four-component class: supported away from theta = 0
// and satisfying the A_omega endpoint condition exactly at theta = omega.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "conedirac/angular.hpp"

namespace conedirac::testfn {

using Complex = std::complex<double>;

enum class ScalarKind : std::uint8_t { Bump, PolyBump, RampPoly };

class ScalarTestFunction {
public:
  // Bump / PolyBump: supported on (a, b).  RampPoly: zero left of a, ramps
  // up over (a, b0) and equals the polynomial from b0 to the right edge b.
  static ScalarTestFunction bump(double a, double b);
  static ScalarTestFunction poly_bump(double a, double b,
                                      std::vector<double> coeffs);
  static ScalarTestFunction ramp_poly(double a, double b0, double b,
                                      std::vector<double> coeffs);

  double value(double x) const;
  double deriv(double x) const;

  ScalarKind kind() const { return kind_; }
  double support_lo() const { return a_; }
  double support_hi() const { return b_; }
  const std::vector<double>& parameters() const { return coeffs_; }

private:
  ScalarKind kind_ = ScalarKind::Bump;
  double a_ = 0.0, b0_ = 0.0, b_ = 0.0;
  std::vector<double> coeffs_;
};

// Four-component complex test function in the boundary-adapted class:
// components 3 and 4 are free smooth functions, components 1 and 2 carry
// the A_omega image of their endpoint values on a smooth ramp so that
//   (psi1(omega), psi2(omega)) = A_omega (psi3(omega), psi4(omega))
// holds to rounding.  All components vanish identically near theta = 0.
class SpinorTestFunction {
public:
  static SpinorTestFunction random(const angular::BoundaryMatrix& bm,
                                   double support_lo, std::mt19937& rng);

  Complex value(int component, double theta) const;
  Complex deriv(int component, double theta) const;

  double support_lo() const { return support_lo_; }
  double omega() const { return omega_; }

private:
  struct Term {
    Complex coeff;
    ScalarTestFunction shape;
  };
  std::array<std::vector<Term>, 4> comp_;
  double support_lo_ = 0.0;
  double omega_ = 0.0;
};

}  // namespace conedirac::testfn

#endif
