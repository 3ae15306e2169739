#include "conedirac/testfunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace conedirac::testfn {

namespace {

// exp(-1/(1-u^2)) on (-1,1), zero outside; together with its derivative.
double bump_u(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}

double bump_u_deriv(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return bump_u(u) * (-2.0 * u / (w * w));
}

// C-infinity ramp: 0 for v <= 0, 1 for v >= 1.
double g_half(double v) { return v > 0.0 ? std::exp(-1.0 / v) : 0.0; }
double g_half_deriv(double v) {
  return v > 0.0 ? std::exp(-1.0 / v) / (v * v) : 0.0;
}
double ramp_v(double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  const double g0 = g_half(v), g1 = g_half(1.0 - v);
  return g0 / (g0 + g1);
}
double ramp_v_deriv(double v) {
  if (v <= 0.0 || v >= 1.0) return 0.0;
  const double g0 = g_half(v), g1 = g_half(1.0 - v);
  const double d0 = g_half_deriv(v), d1 = -g_half_deriv(1.0 - v);
  const double den = g0 + g1;
  return (d0 * den - g0 * (d0 + d1)) / (den * den);
}

double poly_eval(const std::vector<double>& c, double x) {
  double p = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
  return p;
}

double poly_deriv(const std::vector<double>& c, double x) {
  double p = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) p = p * x + j * c[j];
  return p;
}

}  // namespace

ScalarTestFunction ScalarTestFunction::bump(double a, double b) {
  if (!(b > a)) throw std::invalid_argument("bump: need b > a");
  ScalarTestFunction f;
  f.kind_ = ScalarKind::Bump;
  f.a_ = a;
  f.b_ = b;
  f.coeffs_ = {1.0};
  return f;
}

ScalarTestFunction ScalarTestFunction::poly_bump(double a, double b,
                                                 std::vector<double> coeffs) {
  ScalarTestFunction f = bump(a, b);
  f.kind_ = ScalarKind::PolyBump;
  f.coeffs_ = std::move(coeffs);
  if (f.coeffs_.empty()) f.coeffs_ = {1.0};
  return f;
}

ScalarTestFunction ScalarTestFunction::ramp_poly(double a, double b0, double b,
                                                 std::vector<double> coeffs) {
  if (!(b0 > a && b > b0))
    throw std::invalid_argument("ramp_poly: need a < b0 < b");
  ScalarTestFunction f;
  f.kind_ = ScalarKind::RampPoly;
  f.a_ = a;
  f.b0_ = b0;
  f.b_ = b;
  f.coeffs_ = std::move(coeffs);
  if (f.coeffs_.empty()) f.coeffs_ = {1.0};
  return f;
}

double ScalarTestFunction::value(double x) const {
  switch (kind_) {
    case ScalarKind::Bump:
    case ScalarKind::PolyBump: {
      const double u = (2.0 * x - a_ - b_) / (b_ - a_);
      const double base = bump_u(u);
      return kind_ == ScalarKind::Bump ? base : base * poly_eval(coeffs_, x);
    }
    case ScalarKind::RampPoly: {
      const double v = (x - a_) / (b0_ - a_);
      return ramp_v(v) * poly_eval(coeffs_, x);
    }
  }
  return 0.0;
}

double ScalarTestFunction::deriv(double x) const {
  switch (kind_) {
    case ScalarKind::Bump:
    case ScalarKind::PolyBump: {
      const double scale = 2.0 / (b_ - a_);
      const double u = (2.0 * x - a_ - b_) / (b_ - a_);
      if (kind_ == ScalarKind::Bump) return bump_u_deriv(u) * scale;
      return bump_u_deriv(u) * scale * poly_eval(coeffs_, x) +
             bump_u(u) * poly_deriv(coeffs_, x);
    }
    case ScalarKind::RampPoly: {
      const double scale = 1.0 / (b0_ - a_);
      const double v = (x - a_) / (b0_ - a_);
      return ramp_v_deriv(v) * scale * poly_eval(coeffs_, x) +
             ramp_v(v) * poly_deriv(coeffs_, x);
    }
  }
  return 0.0;
}

SpinorTestFunction SpinorTestFunction::random(
    const angular::BoundaryMatrix& bm, double support_lo, std::mt19937& rng) {
  const double omega = bm.omega;
  if (!(support_lo > 0.0 && support_lo < 0.5 * omega))
    throw std::invalid_argument(
        "SpinorTestFunction: support_lo must lie in (0, omega/2)");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto rand_c = [&] { return Complex(unit(rng), unit(rng)); };

  SpinorTestFunction f;
  f.support_lo_ = support_lo;
  f.omega_ = omega;

  // Free interior bumps for every component.
  const double mid = 0.5 * (support_lo + omega);
  auto interior1 = ScalarTestFunction::bump(support_lo, mid);
  auto interior2 = ScalarTestFunction::poly_bump(
      support_lo, 0.98 * omega, {unit(rng), unit(rng), unit(rng)});
  // Ramp carrying the endpoint values: equal to 1 on [0.8 omega, omega].
  auto carrier =
      ScalarTestFunction::ramp_poly(support_lo, 0.8 * omega, omega, {1.0});

  const Complex z3 = rand_c(), z4 = rand_c();
  // Endpoint values of components 1,2 forced by the boundary matrix.
  const Complex z1 = bm.entries[0][0] * z3 + bm.entries[0][1] * z4;
  const Complex z2 = bm.entries[1][0] * z3 + bm.entries[1][1] * z4;

  const Complex ends[4] = {z1, z2, z3, z4};
  for (int j = 0; j < 4; ++j) {
    f.comp_[j].push_back({ends[j], carrier});
    f.comp_[j].push_back({rand_c(), interior1});
    f.comp_[j].push_back({rand_c(), interior2});
  }
  return f;
}

Complex SpinorTestFunction::value(int component, double theta) const {
  Complex v = 0.0;
  for (const auto& t : comp_[component]) v += t.coeff * t.shape.value(theta);
  return v;
}

Complex SpinorTestFunction::deriv(int component, double theta) const {
  Complex v = 0.0;
  for (const auto& t : comp_[component]) v += t.coeff * t.shape.deriv(theta);
  return v;
}

}  // namespace conedirac::testfn
