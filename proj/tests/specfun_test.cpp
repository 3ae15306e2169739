#include "conedirac/specfun.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

using namespace conedirac;
using namespace conedirac::specfun;

namespace {

// Classical associated Legendre recurrence (on-the-cut phase), used as an
// independent oracle for integer degrees.
double legendre_recurrence(int l, int m, double x) {
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2 * m + 1) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("gamma: factorials and half-integers") {
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  // recurrence Gamma(x+1) = x Gamma(x) from Gamma(1/2)
  const double g45 = 3.5 * 2.5 * 1.5 * 0.5 * std::sqrt(M_PI);
  CHECK(gamma_fn(4.5) == doctest::Approx(g45).epsilon(1e-13));
  CHECK(gamma_fn(4.5) == doctest::Approx(11.6317283965674).epsilon(1e-10));
  // reflection side
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("gamma: relative accuracy against recurrence over |x| <= 50") {
  // Gamma(n + 1/2) climbs exactly by the recurrence from Gamma(1/2).
  double exact = std::sqrt(M_PI);
  for (int n = 0; n < 50; ++n) {
    const double x = n + 0.5;
    CHECK(gamma_fn(x) == doctest::Approx(exact).epsilon(1e-12));
    exact *= x;
  }
}

TEST_CASE("hyp2f1: edge values and closed forms") {
  CHECK(hyp2f1(0.3, -2.1, 1.7, 0.0) == 1.0);
  // 2F1(1,1;2;z) = -log(1-z)/z
  CHECK(hyp2f1(1.0, 1.0, 2.0, 0.5) ==
        doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-12));
  // terminating polynomial: 2F1(-1,b;c;z) = 1 - (b/c) z
  CHECK(hyp2f1(-1.0, 2.5, 3.5, 0.4) ==
        doctest::Approx(1.0 - 2.5 / 3.5 * 0.4).epsilon(1e-14));
  CHECK_THROWS_AS(hyp2f1(0.3, 0.4, -2.0, 0.5), PoleError);
  CHECK_THROWS_AS(hyp2f1(0.3, 0.4, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(hyp2f1(0.3, 0.4, 1.0, -0.2), std::domain_error);
}

TEST_CASE("hyp2f1: geometric series at large z stays accurate") {
  // 2F1(1, b; b; z) = 1/(1-z) for any b
  for (double z : {0.5, 0.9, 0.99, 0.995}) {
    CHECK(hyp2f1(1.0, 3.25, 3.25, z) ==
          doctest::Approx(1.0 / (1.0 - z)).epsilon(1e-12));
  }
}

TEST_CASE("ferrers: trivial and closed-form values") {
  for (double x : {-0.9, -0.2, 0.4, 0.85}) {
    CHECK(ferrers_p(0.0, 0, x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ferrers_p(1.0, 0, x) == doctest::Approx(x).epsilon(1e-13));
  }
  // P_0^{-1}(cos w) = tan(w/2)
  const double w = M_PI / 3.0;
  CHECK(ferrers_p(0.0, -1, std::cos(w)) ==
        doctest::Approx(std::tan(0.5 * w)).epsilon(1e-12));
  CHECK(ferrers_p(0.0, -1, std::cos(w)) ==
        doctest::Approx(0.5773502692).epsilon(1e-9));
  // P_2(0.5) = (3 x^2 - 1)/2
  CHECK(ferrers_p(2.0, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-13));
  // critical-aperture zero of P_{1/2}
  CHECK(std::abs(ferrers_p(0.5, 0, std::cos(0.726 * M_PI))) < 1e-3);
  CHECK_THROWS_AS(ferrers_p(0.5, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ferrers_p(0.5, 0, -1.5), std::domain_error);
}

TEST_CASE("ferrers: degree reflection P_nu = P_{-nu-1}") {
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> dnu(-5.0, 5.0);
  std::uniform_real_distribution<double> dx(-0.95, 0.95);
  std::uniform_int_distribution<int> dmu(-3, 0);
  for (int i = 0; i < 200; ++i) {
    const double nu = dnu(rng);
    const double x = dx(rng);
    const int mu = dmu(rng);
    const double a = ferrers_p(nu, mu, x);
    const double b = ferrers_p(-nu - 1.0, mu, x);
    CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("ferrers: integer degrees match the classical recurrence") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dx(-0.95, 0.95);
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int rep = 0; rep < 5; ++rep) {
        const double x = dx(rng);
        const double ref = legendre_recurrence(n, m, x);
        CHECK(ferrers_p(n, m, x) ==
              doctest::Approx(ref).epsilon(1e-10).scale(1.0 + std::abs(ref)));
        // P_n^{-m} = (-1)^m (n-m)!/(n+m)! P_n^m
        const double refneg = (m % 2 ? -1.0 : 1.0) * factorial_d(n - m) /
                              factorial_d(n + m) * ref;
        CHECK(ferrers_p(n, -m, x) ==
              doctest::Approx(refneg).epsilon(1e-10).scale(1.0 + std::abs(refneg)));
      }
    }
  }
}

TEST_CASE("ferrers: gamma-pole limit returns the flagged zero") {
  // P_n^m vanishes identically for integer degrees n < m.
  const auto r = ferrers_p_ext(1.0, 3, 0.4);
  CHECK(r.pole_limit);
  CHECK(r.value == 0.0);
  const auto r2 = ferrers_p_ext(-2.0, 3, 0.4);  // reflects to degree 1
  CHECK(r2.pole_limit);
  CHECK(r2.value == 0.0);
}

namespace {

struct IdentityCase {
  FerrersIdentity id;
  // magnitude scale of the identity at (nu,mu,x), for relative tolerance
  double scale(double nu, int mu, double x) const {
    const double s = std::sqrt(1.0 - x * x);
    auto P = [&](double n, int m) { return std::abs(ferrers_p(n, m, x)); };
    switch (id) {
      case FerrersIdentity::GR8733_5:
        return P(nu, mu);
      case FerrersIdentity::GR8735_1:
      case FerrersIdentity::DLMF14_10_2:
        return std::abs(nu - mu + 1.0) * P(nu + 1.0, mu) +
               std::abs(nu + mu + 1.0) * P(nu, mu) + s * P(nu, mu + 1);
      case FerrersIdentity::GR8735_2:
        return std::abs(nu + mu) * P(nu - 1.0, mu) +
               std::abs(nu - mu) * P(nu, mu) + s * P(nu, mu + 1);
      case FerrersIdentity::GR8735_3:
        return P(nu - 1.0, mu) + P(nu, mu) +
               std::abs(nu - mu + 1.0) * s * P(nu, mu - 1);
      case FerrersIdentity::GR8735_4:
        return P(nu + 1.0, mu) + P(nu, mu) +
               std::abs(nu + mu) * s * P(nu, mu - 1);
      case FerrersIdentity::DLMF14_10_4:
        return std::abs(ferrers_p_derivative(nu, mu, x)) +
               std::abs(mu - nu - 1.0) * P(nu + 1.0, mu) +
               std::abs(nu + 1.0) * P(nu, mu);
    }
    return 1.0;
  }
};

}  // namespace

TEST_CASE("ferrers: recurrence identities over random admissible points") {
  const FerrersIdentity ids[] = {
      FerrersIdentity::GR8733_5,    FerrersIdentity::GR8735_1,
      FerrersIdentity::GR8735_2,    FerrersIdentity::GR8735_3,
      FerrersIdentity::GR8735_4,    FerrersIdentity::DLMF14_10_2,
      FerrersIdentity::DLMF14_10_4,
  };
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dnu(-4.5, 4.5);
  std::uniform_real_distribution<double> dx(-0.95, 0.95);
  std::uniform_int_distribution<int> dmu(-3, 2);
  for (auto id : ids) {
    for (int i = 0; i < 100; ++i) {
      const double nu = dnu(rng);
      const int mu = dmu(rng);
      const double x = dx(rng);
      const double res = ferrers_identity_residual(id, nu, mu, x);
      const double sc = 1.0 + IdentityCase{id}.scale(nu, mu, x);
      CHECK(res <= 1e-8 * sc);
    }
  }
  // the spec'd spot checks
  CHECK(ferrers_identity_residual(FerrersIdentity::GR8735_1, 1.7, -2, 0.4) <=
        1e-9);
  CHECK(ferrers_identity_residual(FerrersIdentity::DLMF14_10_2, 0.5, 0, 0.0) <=
        1e-9);
  CHECK(ferrers_identity_residual(FerrersIdentity::GR8733_5, 2.3, -1, -0.6) <=
        1e-9);
}

TEST_CASE("bessel: half-integer closed forms") {
  // K_{1/2}(x) = sqrt(pi/(2x)) exp(-x),  I_{1/2}(x) = sqrt(2/(pi x)) sinh x
  const double k_half = std::sqrt(M_PI / 2.0) * std::exp(-1.0);
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(k_half).epsilon(1e-10));
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685044).epsilon(1e-9));
  const double i_half = std::sqrt(2.0 / M_PI) * std::sinh(1.0);
  CHECK(bessel_i(0.5, 1.0) == doctest::Approx(i_half).epsilon(1e-10));
  CHECK(bessel_i(0.5, 1.0) == doctest::Approx(0.9376748882).epsilon(1e-9));
  CHECK_THROWS_AS(bessel_k(0.5, -1.0), std::domain_error);
}

TEST_CASE("bessel: quadrature self-convergence for K_0(2)") {
  const double coarse = bessel_k_panels(0.0, 2.0, 32);
  const double fine = bessel_k_panels(0.0, 2.0, 64);
  CHECK(std::abs(coarse - fine) <= 1e-8 * std::abs(fine));
  CHECK(bessel_k(0.0, 2.0) == doctest::Approx(fine).epsilon(1e-10));
}

TEST_CASE("bessel: Wronskian K I' - K' I = 1/x") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dnu(0.0, 3.0);
  std::uniform_real_distribution<double> dxv(0.2, 8.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = dnu(rng);
    const double x = dxv(rng);
    const double h = 1e-5 * x;
    const double ip = (bessel_i(nu, x + h) - bessel_i(nu, x - h)) / (2 * h);
    const double kp = (bessel_k(nu, x + h) - bessel_k(nu, x - h)) / (2 * h);
    const double wr = bessel_k(nu, x) * ip - kp * bessel_i(nu, x);
    CHECK(wr == doctest::Approx(1.0 / x).epsilon(1e-5));
  }
}

TEST_CASE("kernels are deterministic") {
  CHECK(ferrers_p(3.7, -2, 0.31) == ferrers_p(3.7, -2, 0.31));
  CHECK(hyp2f1(0.7, 1.3, 2.1, 0.77) == hyp2f1(0.7, 1.3, 2.1, 0.77));
  CHECK(bessel_k(1.3, 0.4) == bessel_k(1.3, 0.4));
  CHECK(gamma_fn(12.34) == gamma_fn(12.34));
}
