#include "conedirac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "conedirac/rootscan.hpp"

namespace conedirac::oracle {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order weights of the embedded pair (with the FSAL 7th stage).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

struct Rhs {
  double alpha;  // k + 1/2
  double lk;     // lambda + k
  double kl;     // k + 1 - lambda

  Vec2 operator()(double t, const Vec2& y) const {
    const double ct = 1.0 / std::tan(t);
    return {alpha * ct * y[0] + lk * y[1], kl * y[0] - alpha * ct * y[1]};
  }
};

Vec2 axpy(const Vec2& y, double h, const Vec2& k, double c) {
  return {y[0] + h * c * k[0], y[1] + h * c * k[1]};
}

}  // namespace

Vec2 regular_initial_data(int k, double lambda, double theta_start) {
  if (!(theta_start > 0.0 && theta_start <= 1e-3))
    throw std::invalid_argument(
        "regular_initial_data: theta_start must lie in (0, 1e-3]");
  if (k >= 0)
    return {1.0, (k - lambda + 1.0) * theta_start / (2.0 * (k + 1))};
  return {(lambda + k) * theta_start / (-2.0 * k), 1.0};
}

Vec2 integrate_fiber(int k, double lambda, double omega,
                     const ShootingConfig& config) {
  angular::AngularProblem problem(k, omega);  // validates omega
  if (!(config.rtol > 0.0 && config.atol > 0.0))
    throw std::invalid_argument("integrate_fiber: tolerances must be positive");
  const Rhs rhs{k + 0.5, lambda + k, k + 1.0 - lambda};

  double t = config.theta_start;
  Vec2 y = regular_initial_data(k, lambda, t);
  const double span = omega - t;
  double h = std::min({config.max_step, 0.1 * span, 0.5 * t});
  Vec2 k1 = rhs(t, y);

  while (t < omega) {
    if (t + h > omega) h = omega - t;
    const Vec2 k2 = rhs(t + c2 * h, axpy(y, h, k1, a21));
    Vec2 v = {y[0] + h * (a31 * k1[0] + a32 * k2[0]),
              y[1] + h * (a31 * k1[1] + a32 * k2[1])};
    const Vec2 k3 = rhs(t + c3 * h, v);
    v = {y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
         y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])};
    const Vec2 k4 = rhs(t + c4 * h, v);
    v = {y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
         y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])};
    const Vec2 k5 = rhs(t + c5 * h, v);
    v = {y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] +
                     a65 * k5[0]),
         y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] +
                     a65 * k5[1])};
    const Vec2 k6 = rhs(t + h, v);
    const Vec2 ynew = {
        y[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] +
                    b6 * k6[0]),
        y[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] +
                    b6 * k6[1])};
    const Vec2 k7 = rhs(t + h, ynew);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                            e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = config.atol +
                        config.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(0.5 * err);

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      const double m = std::max(std::abs(y[0]), std::abs(y[1]));
      if (m > 1e100) {  // solution is only needed up to scale
        y[0] /= m;
        y[1] /= m;
        k1 = rhs(t, y);
      }
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h = std::min(h * fac, config.max_step);
    if (h < 1e-14 * span)
      throw SolverError("integrate_fiber: step underflow near theta=" +
                        std::to_string(t));
  }
  return y;
}

MissValue boundary_miss(int k, double lambda, double omega,
                        const ShootingConfig& config) {
  const Vec2 y = integrate_fiber(k, lambda, omega, config);
  const auto bm = angular::BoundaryMatrix::make(omega);
  const double ny = std::hypot(y[0], y[1]);
  auto defect = [&](const std::array<double, 2>& xi) {
    const double det = y[0] * xi[1] - y[1] * xi[0];
    return det / (ny * std::hypot(xi[0], xi[1]));
  };
  return {lambda, std::abs(defect(bm.xi_plus)), std::abs(defect(bm.xi_minus))};
}

double boundary_miss_signed(int k, double lambda, double omega,
                            angular::Branch branch,
                            const ShootingConfig& config) {
  const Vec2 y = integrate_fiber(k, lambda, omega, config);
  const auto bm = angular::BoundaryMatrix::make(omega);
  const auto& xi =
      branch == angular::Branch::Eq1 ? bm.xi_plus : bm.xi_minus;
  const double det = y[0] * xi[1] - y[1] * xi[0];
  return det / (std::hypot(y[0], y[1]) * std::hypot(xi[0], xi[1]));
}

angular::AngularSpectrum oracle_spectrum(int k, double omega,
                                         angular::Window window,
                                         const ShootingConfig& config,
                                         double scan_step) {
  angular::AngularSpectrum sp;
  sp.k = k;
  sp.omega = omega;
  sp.window = window;
  for (auto branch : {angular::Branch::Eq1, angular::Branch::Eq2}) {
    auto f = [&](double lambda) {
      return boundary_miss_signed(k, lambda, omega, branch, config);
    };
    for (const auto& r :
         rootscan::scan(f, window.lo, window.hi, scan_step))
      sp.records.push_back({r.x, branch, r.residual});
  }
  std::sort(sp.records.begin(), sp.records.end(),
            [](const angular::EigenvalueRecord& a,
               const angular::EigenvalueRecord& b) {
              return a.lambda < b.lambda;
            });
  return sp;
}

}  // namespace conedirac::oracle
