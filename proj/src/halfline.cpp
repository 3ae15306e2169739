#include "conedirac/halfline.hpp"

#include <cmath>
#include <stdexcept>

#include "conedirac/quadrature.hpp"
#include "conedirac/specfun.hpp"

namespace conedirac::halfline {

HalflineProblem::HalflineProblem(double alpha_, double endpoint_b_)
    : alpha(alpha_), endpoint_b(endpoint_b_) {
  if (!(endpoint_b > 0.0))
    throw std::invalid_argument("HalflineProblem: endpoint must be positive");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("HalflineProblem: alpha must be finite");
}

DeficiencyReport classify(const HalflineProblem& problem) {
  const double a = std::abs(problem.alpha);
  DeficiencyReport rep;
  if (a >= 0.5 && !problem.infinite()) {
    rep.n_plus = rep.n_minus = 1;
    rep.domain_note = "limit-circle at b; boundary data (f1(b), f2(b))";
    return rep;
  }
  if (a >= 0.5 && problem.infinite()) {
    rep.n_plus = rep.n_minus = 0;
    rep.essentially_self_adjoint = true;
    rep.domain_note =
        a > 0.5 ? "H1_0 half-line" : "essentially self-adjoint (|alpha|=1/2)";
    return rep;
  }
  if (a < 0.5 && problem.infinite()) {
    rep.n_plus = rep.n_minus = 1;
    rep.domain_note =
        "deficiency pair x^{1/2} K_{1/2-+alpha}; extensions form a "
        "one-parameter unimodular family";
    return rep;
  }
  throw std::invalid_argument(
      "classify: |alpha| < 1/2 with finite endpoint is outside the "
      "classified cases");
}

CVec2 deficiency_function(double alpha, SignPM sign, double x) {
  if (!(alpha > -0.5 && alpha < 0.5))
    throw std::domain_error("deficiency_function: alpha must lie in (-1/2,1/2)");
  if (!(x > 0.0)) throw std::domain_error("deficiency_function: x must be > 0");
  const double r = std::sqrt(x);
  const double f1 = r * specfun::bessel_k(0.5 - alpha, x);
  const double f2 = r * specfun::bessel_k(0.5 + alpha, x);
  const double s = sign == SignPM::plus ? -1.0 : 1.0;
  return {Complex(f1, 0.0), Complex(0.0, s * f2)};
}

double fiber_hardy_residual(double lambda, SignPM sign,
                            const RadialTestFunction& psi) {
  if (!(psi.support_lo > 0.0 && psi.support_hi > psi.support_lo))
    throw std::invalid_argument(
        "fiber_hardy_residual: support must be a positive interval");
  const double s = sign == SignPM::plus ? 1.0 : -1.0;
  const auto edges = quad::dyadic_edges(psi.support_lo, psi.support_hi, 10);
  auto energy = [&](double x) {
    const double d = psi.deriv(x) - s * lambda * psi.value(x) / x;
    return d * d;
  };
  auto weight = [&](double x) {
    const double v = psi.value(x);
    return v * v / (x * x);
  };
  const double lhs = quad::composite_quadrature(energy, edges, 64);
  const double c = lambda - s * 0.5;
  const double rhs = c * c * quad::composite_quadrature(weight, edges, 64);
  return lhs - rhs;
}

std::vector<CVec2> dirac_fiber_apply(double lambda, std::span<const CVec2> psi,
                                     std::span<const double> grid) {
  if (psi.size() != grid.size() || grid.size() < 3)
    throw std::invalid_argument("dirac_fiber_apply: need matching grids, n >= 3");
  const std::size_t n = grid.size();
  std::vector<CVec2> out(n);
  auto deriv = [&](std::size_t i, int comp) -> Complex {
    if (i == 0)
      return (psi[1][comp] - psi[0][comp]) / (grid[1] - grid[0]);
    if (i == n - 1)
      return (psi[n - 1][comp] - psi[n - 2][comp]) / (grid[n - 1] - grid[n - 2]);
    return (psi[i + 1][comp] - psi[i - 1][comp]) / (grid[i + 1] - grid[i - 1]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!(grid[i] > 0.0))
      throw std::invalid_argument("dirac_fiber_apply: grid must be positive");
    const double x = grid[i];
    out[i] = {-deriv(i, 1) - lambda * psi[i][1] / x,
              deriv(i, 0) - lambda * psi[i][0] / x};
  }
  return out;
}

}  // namespace conedirac::halfline
