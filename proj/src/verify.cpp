#include "conedirac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "conedirac/quadrature.hpp"

namespace conedirac::verify {

using Complex = std::complex<double>;

namespace {

double sq(double x) { return x * x; }
double sq(Complex z) { return std::norm(z); }

}  // namespace

VerificationReport angular_form_identity(const angular::AngularProblem& problem,
                                         const testfn::SpinorTestFunction& psi,
                                         int quad_nodes) {
  const double omega = problem.omega;
  const double alpha = problem.k + 0.5;
  const double a0 = psi.support_lo();
  const int panels = std::max(8, quad_nodes / 32);

  // ||(tau_k - 1/2)(f,g)||^2 integrand for one 2-component block.
  auto lhs_block = [&](int jf, int jg, double t) {
    const Complex f = psi.value(jf, t), g = psi.value(jg, t);
    const Complex fp = psi.deriv(jf, t), gp = psi.deriv(jg, t);
    const double ct = std::cos(t) / std::sin(t);
    return sq(alpha * f - gp - alpha * ct * g) +
           sq(fp - alpha * ct * f - alpha * g);
  };
  auto lhs_fn = [&](double t) { return lhs_block(0, 1, t) + lhs_block(2, 3, t); };

  auto rhs_fn = [&](double t) {
    const double is2 = 1.0 / sq(std::sin(t));
    double v = 0.0;
    for (int j = 0; j < 4; ++j) v += sq(psi.deriv(j, t));
    v += alpha * (alpha - 1.0) * is2 *
         (sq(psi.value(0, t)) + sq(psi.value(2, t)));
    v += alpha * (alpha + 1.0) * is2 *
         (sq(psi.value(1, t)) + sq(psi.value(3, t)));
    return v;
  };

  const double lhs =
      quad::composite_quadrature(lhs_fn, a0, omega, 32, panels);
  const double rhs =
      quad::composite_quadrature(rhs_fn, a0, omega, 32, panels);

  // Boundary sum B(psi1,psi2)(omega) + B(psi3,psi4)(omega),
  // B(f,g) = Re[2 f conj(g)] + cot(omega)(|f|^2 - |g|^2).
  const double cot_w = std::cos(omega) / std::sin(omega);
  auto bterm = [&](int jf, int jg) {
    const Complex f = psi.value(jf, omega), g = psi.value(jg, omega);
    return 2.0 * std::real(f * std::conj(g)) + cot_w * (sq(f) - sq(g));
  };
  const double boundary = bterm(0, 1) + bterm(2, 3);

  VerificationReport rep;
  rep.check_id = "angular_form_identity";
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  rep.max_residual = std::abs(lhs - rhs) / scale;
  rep.parameters["k"] = problem.k;
  rep.parameters["omega"] = omega;
  rep.parameters["lhs"] = lhs;
  rep.parameters["rhs"] = rhs;
  rep.parameters["boundary_term"] = std::abs(boundary) / (1.0 + scale);
  rep.passed = rep.max_residual <= 1e-6 &&
               rep.parameters["boundary_term"] <= 1e-9;
  return rep;
}

VerificationReport interval_hardy_check(double omega,
                                        const testfn::ScalarTestFunction& f,
                                        int quad_nodes) {
  if (!(omega > 0.0 && omega <= 0.5 * M_PI + 1e-15))
    throw std::invalid_argument("interval_hardy_check: need omega <= pi/2");
  if (!(f.support_lo() > 0.0) || f.support_hi() > omega + 1e-12)
    throw std::invalid_argument(
        "interval_hardy_check: support must lie inside (0, omega]");
  const int panels = std::max(8, quad_nodes / 32);
  const double a0 = f.support_lo();
  const double b = std::min(f.support_hi(), omega);

  auto energy = [&](double t) { return sq(f.deriv(t)); };
  auto sin_weight = [&](double t) { return sq(f.value(t)) / sq(std::sin(t)); };
  auto mass = [&](double t) { return sq(f.value(t)); };

  const double e = quad::composite_quadrature(energy, a0, b, 32, panels);
  const double w = quad::composite_quadrature(sin_weight, a0, b, 32, panels);
  const double m = quad::composite_quadrature(mass, a0, b, 32, panels);
  const double residual = e - 0.25 * w - sq(M_PI) / (16.0 * sq(omega)) * m;

  VerificationReport rep;
  rep.check_id = "interval_hardy";
  rep.max_residual = residual;
  rep.parameters["omega"] = omega;
  rep.parameters["energy"] = e;
  rep.parameters["scale"] = std::max(e, 1e-300);
  rep.passed = residual >= -1e-9 * rep.parameters["scale"];
  return rep;
}

VerificationReport hardy_pointwise_bound(double omega, int samples) {
  VerificationReport rep;
  rep.check_id = "hardy_pointwise_bound";
  rep.parameters["omega"] = omega;
  double worst = 0.0;
  const double r = 0.5 * M_PI / omega;
  for (int i = 1; i < samples; ++i) {
    const double t = omega * i / samples;
    const double lhs = sq(r) / sq(std::sin(r * t));
    const double rhs = 1.0 / sq(std::sin(t));
    worst = std::min(worst, lhs - rhs);
  }
  rep.max_residual = -worst;
  rep.passed = worst >= -1e-12;
  return rep;
}

VerificationReport cross_validate(int k, double omega, angular::Window window,
                                  double tol,
                                  const oracle::ShootingConfig& config,
                                  double scan_step) {
  const angular::AngularProblem problem(k, omega);
  const auto trans = angular::spectrum(problem, window, scan_step);
  const auto shot = oracle::oracle_spectrum(k, omega, window, config);

  auto nearest = [](double x, const std::vector<angular::EigenvalueRecord>& v) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : v) best = std::min(best, std::abs(r.lambda - x));
    return best;
  };

  double hausdorff = 0.0;
  std::ostringstream unmatched;
  for (const auto& r : trans.records) {
    const double d = nearest(r.lambda, shot.records);
    hausdorff = std::max(hausdorff, d);
    if (d > tol) unmatched << " transcendental:" << r.lambda;
  }
  for (const auto& r : shot.records) {
    const double d = nearest(r.lambda, trans.records);
    hausdorff = std::max(hausdorff, d);
    if (d > tol) unmatched << " oracle:" << r.lambda;
  }

  VerificationReport rep;
  rep.check_id = "cross_validate";
  rep.max_residual = hausdorff;
  rep.parameters["k"] = k;
  rep.parameters["omega"] = omega;
  rep.parameters["roots_transcendental"] = double(trans.records.size());
  rep.parameters["roots_oracle"] = double(shot.records.size());
  rep.passed = hausdorff <= tol &&
               trans.records.size() == shot.records.size();
  if (!rep.passed) rep.note = "unmatched roots:" + unmatched.str();
  return rep;
}

PerturbationVerdict perturbation_budget(double omega, double nu) {
  if (!(omega > 0.0 && omega < 0.5 * M_PI))
    throw std::invalid_argument(
        "perturbation_budget: the stability theorem needs omega < pi/2");
  if (!(nu >= 0.0))
    throw std::invalid_argument("perturbation_budget: nu must be >= 0");
  const double budget = M_PI / (4.0 * omega);
  if (std::abs(nu - budget) <= 1e-12) return PerturbationVerdict::EssentiallySelfAdjoint;
  return nu < budget ? PerturbationVerdict::SelfAdjointClosure
                     : PerturbationVerdict::NoGuarantee;
}

std::string to_string(PerturbationVerdict v) {
  switch (v) {
    case PerturbationVerdict::SelfAdjointClosure: return "SelfAdjointClosure";
    case PerturbationVerdict::EssentiallySelfAdjoint:
      return "EssentiallySelfAdjoint";
    case PerturbationVerdict::NoGuarantee: return "NoGuarantee";
  }
  return "?";
}

QuantumDotMatrix quantum_dot_matrix(double theta) {
  if (!(theta >= 0.0 && theta < 2.0 * M_PI))
    throw std::invalid_argument("quantum_dot_matrix: theta must lie in [0, 2pi)");
  if (std::abs(theta - 0.5 * M_PI) < 1e-9 ||
      std::abs(theta - 1.5 * M_PI) < 1e-9)
    throw std::invalid_argument(
        "quantum_dot_matrix: zig-zag values theta = pi/2, 3pi/2 are excluded");
  const double c = std::abs(std::cos(theta));
  const double s = std::sin(theta);
  const double a = std::sqrt(c / (1.0 + s));
  const double b = std::sqrt(c / (1.0 - s));
  QuantumDotMatrix m{{a, a, b, b},
                     (theta > 0.5 * M_PI && theta < 1.5 * M_PI)
                         ? QuantumDotMatrix::Equivalence::MITminus
                         : QuantumDotMatrix::Equivalence::MITplus};
  for (double d : m.diag)
    if (!(d > 0.0) || !std::isfinite(d))
      throw SolverError("quantum_dot_matrix: matrix lost positivity");
  return m;
}

}  // namespace conedirac::verify
