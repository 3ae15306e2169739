#include "conedirac/halfline.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "conedirac/angular.hpp"
#include "conedirac/quadrature.hpp"
#include "conedirac/testfunctions.hpp"
#include "doctest.h"

using namespace conedirac;
using namespace conedirac::halfline;

TEST_CASE("classify: the deficiency-index table") {
  // |alpha| >= 1/2, finite endpoint -> (1,1)
  auto r = classify({0.5, 1.2});
  CHECK(r.n_plus == 1);
  CHECK(r.n_minus == 1);
  CHECK(!r.essentially_self_adjoint);

  // |alpha| >= 1/2, infinite endpoint -> essentially self-adjoint
  r = classify({1.5, kInfiniteEndpoint});
  CHECK(r.n_plus == 0);
  CHECK(r.n_minus == 0);
  CHECK(r.essentially_self_adjoint);
  CHECK(r.domain_note == "H1_0 half-line");

  r = classify({-0.5, kInfiniteEndpoint});
  CHECK(r.essentially_self_adjoint);
  CHECK(r.domain_note != "H1_0 half-line");  // the borderline coupling

  // |alpha| < 1/2, infinite endpoint -> (1,1)
  r = classify({0.2, kInfiniteEndpoint});
  CHECK(r.n_plus == 1);
  CHECK(r.n_minus == 1);
  CHECK(!r.essentially_self_adjoint);

  // |alpha| < 1/2, finite endpoint -> outside the table
  CHECK_THROWS_AS(classify({0.2, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(HalflineProblem(0.2, -1.0), std::invalid_argument);

  // indices come out equal in every classified case
  for (auto prob : std::vector<HalflineProblem>{
           {0.7, 2.0}, {3.0, kInfiniteEndpoint}, {-0.3, kInfiniteEndpoint}}) {
    const auto rep = classify(prob);
    CHECK(rep.n_plus == rep.n_minus);
  }
}

namespace {

// tau_alpha f - z f, first-order system residual by finite differences
double tau_residual(double alpha, SignPM sign, double x) {
  const double h = 1e-5;
  const auto f = deficiency_function(alpha, sign, x);
  const auto fp = deficiency_function(alpha, sign, x + h);
  const auto fm = deficiency_function(alpha, sign, x - h);
  const CVec2 d = {(fp[0] - fm[0]) / (2.0 * h), (fp[1] - fm[1]) / (2.0 * h)};
  const Complex z = sign == SignPM::plus ? Complex(0, 1) : Complex(0, -1);
  // rows of tau_alpha f: (f2' + a f2/x, -f1' + a f1/x)
  const Complex r1 = d[1] + alpha * f[1] / x - z * f[0];
  const Complex r2 = -d[0] + alpha * f[0] / x - z * f[1];
  const double scale = 1.0 + std::abs(f[0]) + std::abs(f[1]);
  return std::max(std::abs(r1), std::abs(r2)) / scale;
}

}  // namespace

TEST_CASE("deficiency_function: spans ker(T_alpha -+ i)") {
  for (double alpha : {-0.35, 0.0, 0.2, 0.45}) {
    for (auto sign : {SignPM::plus, SignPM::minus}) {
      for (int i = 0; i < 30; ++i) {
        const double x = 0.3 + 0.25 * i;
        CHECK(tau_residual(alpha, sign, x) <= 1e-5);
      }
    }
  }
  CHECK_THROWS_AS(deficiency_function(0.7, SignPM::plus, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(deficiency_function(0.2, SignPM::plus, -1.0),
                  std::domain_error);
}

TEST_CASE("deficiency_function: alpha = 0 has equal component moduli") {
  for (double x : {0.3, 1.0, 4.0}) {
    const auto f = deficiency_function(0.0, SignPM::plus, x);
    CHECK(std::abs(f[0]) == doctest::Approx(std::abs(f[1])).epsilon(1e-12));
  }
}

TEST_CASE("deficiency_function: L2 membership and exponential decay") {
  auto norm2 = [](double a, double b) {
    return quad::composite_quadrature(
        [&](double x) {
          const auto f = deficiency_function(0.2, SignPM::plus, x);
          return std::norm(f[0]) + std::norm(f[1]);
        },
        a, b, 32, 16);
  };
  const double bulk = norm2(1e-3, 20.0);
  const double tail = norm2(20.0, 30.0);
  CHECK(tail < 1e-10 * bulk);

  // |f(x)| <= C e^{-x/2} for x >= 5, with C calibrated at x = 5
  const auto f5 = deficiency_function(0.3, SignPM::minus, 5.0);
  const double C =
      std::max(std::abs(f5[0]), std::abs(f5[1])) / std::exp(-2.5);
  for (double x : {6.0, 8.0, 12.0, 20.0}) {
    const auto f = deficiency_function(0.3, SignPM::minus, x);
    CHECK(std::max(std::abs(f[0]), std::abs(f[1])) <=
          C * std::exp(-0.5 * x) * (1.0 + 1e-9));
  }
}

namespace {

RadialTestFunction from_scalar(const testfn::ScalarTestFunction& f) {
  return {[f](double x) { return f.value(x); },
          [f](double x) { return f.deriv(x); }, f.support_lo(),
          f.support_hi()};
}

}  // namespace

TEST_CASE("fiber_hardy_residual is non-negative") {
  // (lambda -+ 1/2)^2 coefficient vanishes at lambda = 1/2, sign plus
  const auto bump = from_scalar(testfn::ScalarTestFunction::bump(1.0, 3.0));
  CHECK(fiber_hardy_residual(0.5, SignPM::plus, bump) >= 0.0);
  CHECK(fiber_hardy_residual(2.0, SignPM::plus, bump) >= 0.0);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> da(0.1, 2.0);
  std::uniform_real_distribution<double> dw(0.5, 6.0);
  std::uniform_real_distribution<double> dc(-1.0, 1.0);
  const double lambdas[] = {-3.0, -1.5, -0.7, 0.7, 1.5, 3.0};
  for (int i = 0; i < 200; ++i) {
    const double a = da(rng);
    const double b = a + dw(rng);
    const auto f = from_scalar(testfn::ScalarTestFunction::poly_bump(
        a, b, {dc(rng), dc(rng), dc(rng)}));
    const double lambda = lambdas[i % 6];
    const auto sign = (i % 2) ? SignPM::plus : SignPM::minus;
    const double res = fiber_hardy_residual(lambda, sign, f);
    // scale: the energy integral itself
    const double scale = std::abs(res) + quad::composite_quadrature(
        [&](double x) {
          const double d = f.deriv(x) - (sign == SignPM::plus ? 1.0 : -1.0) *
                                            lambda * f.value(x) / x;
          return d * d;
        },
        a, b, 32, 8);
    CHECK(res >= -1e-9 * scale);
  }
}

TEST_CASE("dirac_fiber_apply: linearity, deficiency consistency, norm bound") {
  // zero in, zero out
  std::vector<double> grid;
  std::vector<CVec2> zero;
  for (double x = 0.5; x <= 8.0; x += 0.004) {
    grid.push_back(x);
    zero.push_back({0.0, 0.0});
  }
  for (const auto& v : dirac_fiber_apply(1.3, zero, grid)) {
    CHECK(std::abs(v[0]) == 0.0);
    CHECK(std::abs(v[1]) == 0.0);
  }

  // tau_alpha f = +-i f maps to d_{-alpha}(f2, f1) = +-i (f2, f1)
  const double alpha = 0.3;
  std::vector<CVec2> psi;
  for (double x : grid) {
    const auto f = deficiency_function(alpha, SignPM::plus, x);
    psi.push_back({f[1], f[0]});
  }
  const auto img = dirac_fiber_apply(-alpha, psi, grid);
  const Complex i1(0.0, 1.0);
  for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
    const double scale = 1.0 + std::abs(psi[j][0]) + std::abs(psi[j][1]);
    CHECK(std::abs(img[j][0] - i1 * psi[j][0]) / scale <= 1e-5);
    CHECK(std::abs(img[j][1] - i1 * psi[j][1]) / scale <= 1e-5);
  }

  // ||d_lambda psi||^2 >= (pi/(4w))^2 ||psi/x||^2 for lambda in Z_k, w < pi/2
  const double omega = M_PI / 3.0;
  const auto sp =
      angular::spectrum(angular::AngularProblem(0, omega), {-10.0, 10.0});
  REQUIRE(!sp.records.empty());
  const double lambda = sp.records.back().lambda;
  const auto c1 = testfn::ScalarTestFunction::poly_bump(0.8, 5.0, {1.0, 0.4});
  const auto c2 = testfn::ScalarTestFunction::bump(1.2, 6.0);
  auto energy = [&](double x) {
    const double d1 = c1.deriv(x) - lambda * c1.value(x) / x;
    const double d2 = -c2.deriv(x) - lambda * c2.value(x) / x;
    return d1 * d1 + d2 * d2;
  };
  auto weight = [&](double x) {
    return (c1.value(x) * c1.value(x) + c2.value(x) * c2.value(x)) / (x * x);
  };
  const double lhs = quad::composite_quadrature(energy, 0.8, 6.0, 32, 32);
  const double rhs = quad::composite_quadrature(weight, 0.8, 6.0, 32, 32);
  const double bound = std::pow(M_PI / (4.0 * omega), 2.0);
  CHECK(lhs >= bound * rhs * (1.0 - 1e-9));
}
