#include "conedirac/angular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "conedirac/specfun.hpp"

namespace conedirac::angular {

using specfun::ferrers_p;

AngularProblem::AngularProblem(int k_, double omega_) : k(k_), omega(omega_) {
  if (!(omega > 0.0 && omega < M_PI))
    throw std::invalid_argument("AngularProblem: omega must lie in (0, pi)");
  if (std::abs(omega - 0.5 * M_PI) < 1e-9)
    throw std::invalid_argument(
        "AngularProblem: omega = pi/2 (half-space case) is excluded from the "
        "fiber reduction");
}

double AngularSpectrum::min_abs_lambda() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : records) m = std::min(m, std::abs(r.lambda));
  return m;
}

BoundaryMatrix BoundaryMatrix::make(double omega) {
  const double s = std::sin(omega);
  const double c = std::cos(omega);
  BoundaryMatrix b;
  b.omega = omega;
  const Complex i(0.0, 1.0);
  b.entries = {{{i * s, -i * c}, {-i * c, -i * s}}};
  b.xi_plus = {1.0, (s - 1.0) / c};
  b.xi_minus = {1.0, (s + 1.0) / c};
  return b;
}

double char_fn(const AngularProblem& problem, double lambda, Branch branch) {
  const double c = std::cos(problem.omega);
  const int k = problem.k;
  if (k >= 0) {
    const double a = (lambda + k + 1.0) * ferrers_p(lambda, -k - 1, c);
    const double b = ferrers_p(lambda - 1.0, -k, c);
    return branch == Branch::Eq1 ? a - b : a + b;
  }
  const double a = (lambda + k) * ferrers_p(lambda - 1.0, k, c);
  const double b = ferrers_p(lambda, k + 1, c);
  return branch == Branch::Eq1 ? a + b : a - b;
}

std::vector<EigenvalueRecord> find_roots(const AngularProblem& problem,
                                         Branch branch, Window window,
                                         double scan_step,
                                         rootscan::Diagnostics* diag) {
  auto f = [&](double lambda) { return char_fn(problem, lambda, branch); };
  auto roots = rootscan::scan(f, window.lo, window.hi, scan_step, {}, diag);
  std::vector<EigenvalueRecord> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back({r.x, branch, r.residual});
  return out;
}

namespace {

void check_postconditions(const AngularSpectrum& sp) {
  constexpr double kDedupRadius = 1e-8;
  constexpr double kSymmetryTol = 1e-7;
  for (std::size_t i = 0; i + 1 < sp.records.size(); ++i) {
    const auto& a = sp.records[i];
    const auto& b = sp.records[i + 1];
    if (b.lambda - a.lambda < kDedupRadius && a.branch != b.branch)
      throw SimplicityError(
          "spectrum: both branches vanish at lambda=" +
          std::to_string(a.lambda) + " (k=" + std::to_string(sp.k) + ")");
  }
  for (const auto& r : sp.records)
    if (std::abs(r.lambda) < 1e-6)
      throw SolverError("spectrum: eigenvalue at 0 contradicts the zero "
                        "exclusion");
  // Eq1 root -> -lambda present as an Eq2 root when inside the window.
  for (const auto& r : sp.records) {
    if (r.branch != Branch::Eq1) continue;
    const double m = -r.lambda;
    if (m < sp.window.lo + kSymmetryTol || m > sp.window.hi - kSymmetryTol)
      continue;
    bool found = false;
    for (const auto& q : sp.records)
      if (q.branch == Branch::Eq2 &&
          std::abs(q.lambda - m) <= kSymmetryTol * (1.0 + std::abs(m)))
        found = true;
    if (!found)
      throw SolverError("spectrum: missing mirror root for lambda=" +
                        std::to_string(r.lambda));
  }
}

}  // namespace

AngularSpectrum spectrum(const AngularProblem& problem, Window window,
                         double scan_step) {
  AngularSpectrum sp;
  sp.k = problem.k;
  sp.omega = problem.omega;
  sp.window = window;
  auto r1 = find_roots(problem, Branch::Eq1, window, scan_step);
  auto r2 = find_roots(problem, Branch::Eq2, window, scan_step);
  sp.records.reserve(r1.size() + r2.size());
  sp.records.insert(sp.records.end(), r1.begin(), r1.end());
  sp.records.insert(sp.records.end(), r2.begin(), r2.end());
  std::sort(sp.records.begin(), sp.records.end(),
            [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
              return a.lambda < b.lambda;
            });
  check_postconditions(sp);
  return sp;
}

Spinor2 eigenfunction_value(const AngularProblem& problem, double lambda,
                            SpinorSign sign, double theta, double phi) {
  if (!(theta >= 1e-8 && theta <= problem.omega))
    throw std::domain_error(
        "eigenfunction: theta must lie in [1e-8, omega]");
  const double s = sign == SpinorSign::plus ? 1.0 : -1.0;
  const double deg = s * lambda - 1.0;
  const double ct = std::cos(theta);
  const int k = problem.k;
  const Complex e_k = std::polar(1.0, k * phi);
  const Complex e_k1 = std::polar(1.0, (k + 1) * phi);
  if (k >= 0) {
    return {ferrers_p(deg, -k, ct) * e_k,
            (k - s * lambda + 1.0) * ferrers_p(deg, -k - 1, ct) * e_k1};
  }
  return {(lambda + s * k) * ferrers_p(deg, k, ct) * e_k,
          s * ferrers_p(deg, k + 1, ct) * e_k1};
}

SpinorSample eigenfunction(const AngularProblem& problem,
                           const EigenvalueRecord& record, SpinorSign sign,
                           double theta, double phi) {
  return {theta, phi,
          eigenfunction_value(problem, record.lambda, sign, theta, phi)};
}

Spinor4 eigenfunction_psi(const AngularProblem& problem,
                          const EigenvalueRecord& record, SpinorSign sign,
                          double theta, double phi) {
  const Spinor2 f =
      eigenfunction_value(problem, record.lambda, sign, theta, phi);
  // Phi^s(omega) is the +i eigenvector of A_omega exactly when s*lambda
  // solves Eq1; the i-block then carries +i, otherwise -i.
  double c = sign == SpinorSign::plus ? 1.0 : -1.0;
  if (record.branch == Branch::Eq2) c = -c;
  const Complex ci(0.0, c);
  return {ci * f[0], ci * f[1], f[0], f[1]};
}

double spinor_intertwine_check(const AngularProblem& problem,
                               const EigenvalueRecord& record,
                               std::span<const double> theta_samples) {
  double worst = 0.0;
  for (double theta : theta_samples) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const Spinor2 fp = eigenfunction_value(problem, record.lambda,
                                           SpinorSign::plus, theta);
    const Spinor2 fm = eigenfunction_value(problem, record.lambda,
                                           SpinorSign::minus, theta);
    const Spinor2 rp = {ct * fp[0] + st * fp[1], st * fp[0] - ct * fp[1]};
    const Spinor2 rm = {ct * fm[0] + st * fm[1], st * fm[0] - ct * fm[1]};
    const double scale =
        1.0 + std::max(std::abs(fp[0]) + std::abs(fp[1]),
                       std::abs(fm[0]) + std::abs(fm[1]));
    const double d1 =
        std::max(std::abs(rp[0] - fm[0]), std::abs(rp[1] - fm[1]));
    const double d2 =
        std::max(std::abs(rm[0] - fp[0]), std::abs(rm[1] - fp[1]));
    worst = std::max(worst, std::max(d1, d2) / scale);
  }
  return worst;
}

GapReport gap_report(const AngularProblem& problem, Window window,
                     double scan_step) {
  if (!(window.lo < 0.0 && window.hi > 0.0))
    throw std::invalid_argument("gap_report: window must straddle 0");
  GapReport rep;
  const double alpha = problem.k + 0.5;
  double bound = 0.0;
  if (problem.omega < 0.5 * M_PI)
    bound = std::max(bound, M_PI / (4.0 * problem.omega) + 0.5);
  if (std::abs(alpha) >= 1.5)
    bound = std::max(bound, 0.5 * (std::sqrt(3.0) + 1.0));
  if (bound == 0.0) {
    bound = 0.5;
    rep.conjectured = true;
  }
  rep.bound = bound;

  const AngularSpectrum sp = spectrum(problem, window, scan_step);
  if (sp.records.empty()) {
    rep.censored = true;
    rep.min_abs_lambda = std::min(-window.lo, window.hi);
  } else {
    rep.min_abs_lambda = sp.min_abs_lambda();
  }
  rep.satisfied = rep.min_abs_lambda >= rep.bound - 1e-9;
  return rep;
}

}  // namespace conedirac::angular
