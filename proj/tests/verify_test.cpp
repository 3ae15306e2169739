#include "conedirac/verify.hpp"

#include <cmath>
#include <random>

#include "conedirac/quadrature.hpp"
#include "doctest.h"

using namespace conedirac;
using namespace conedirac::verify;

TEST_CASE("quadrature: closed forms and Gauss exactness") {
  CHECK(quad::quadrature([](double t) { return std::sin(t); }, 0.0, M_PI, 32) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // degree-2 polynomial is exact already at 2 nodes
  CHECK(quad::quadrature([](double x) { return x * x; }, 0.0, 1.0, 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("quadrature: graded panels resolve the 1/sin^2 weight") {
  const auto f = testfn::ScalarTestFunction::bump(0.05, 0.8);
  auto integrand = [&](double t) {
    const double v = f.value(t);
    return v * v / (std::sin(t) * std::sin(t));
  };
  const auto edges = quad::dyadic_edges(0.05, 0.8, 8);
  const double a = quad::composite_quadrature(integrand, edges, 32);
  const double b = quad::composite_quadrature(integrand, edges, 64);
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
}

TEST_CASE("angular_form_identity: random boundary-adapted spinors") {
  std::mt19937 rng(11);
  for (auto [k, omega] : std::vector<std::pair<int, double>>{
           {0, M_PI / 3.0}, {-2, 0.45 * M_PI}, {1, 0.8 * M_PI}}) {
    const auto bm = angular::BoundaryMatrix::make(omega);
    const angular::AngularProblem problem(k, omega);
    for (int rep = 0; rep < 5; ++rep) {
      const auto psi =
          testfn::SpinorTestFunction::random(bm, 0.1 * omega, rng);
      const auto report = angular_form_identity(problem, psi);
      CAPTURE(k);
      CAPTURE(omega);
      CHECK(report.passed);
      CHECK(report.max_residual <= 1e-6);
      CHECK(report.parameters.at("boundary_term") <= 1e-9);
    }
  }
}

TEST_CASE("interval_hardy_check: random bumps and endpoint-concentrated f") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dc(-1.0, 1.0);
  const double omega = 0.5 * M_PI;
  for (int rep = 0; rep < 100; ++rep) {
    const double a = 0.02 + 0.3 * (rep % 7) / 7.0;
    const double b = a + 0.2 + (omega - a - 0.2) * (rep % 11) / 11.0;
    const auto f = testfn::ScalarTestFunction::poly_bump(
        a, b, {dc(rng), dc(rng), dc(rng)});
    const auto rep_out = interval_hardy_check(omega, f);
    CHECK(rep_out.passed);
  }

  // free right endpoint, mass near theta = omega
  const double w4 = M_PI / 4.0;
  const auto g = testfn::ScalarTestFunction::ramp_poly(0.5 * w4, 0.9 * w4, w4,
                                                       {1.0, 0.3});
  const auto rep_out = interval_hardy_check(w4, g);
  CHECK(rep_out.passed);
  CHECK(rep_out.max_residual >= 0.0);

  CHECK_THROWS_AS(
      interval_hardy_check(0.6 * M_PI,
                           testfn::ScalarTestFunction::bump(0.1, 0.5)),
      std::invalid_argument);
}

TEST_CASE("hardy pointwise comparison bound") {
  for (double omega : {0.5 * M_PI, 0.4 * M_PI, 0.15 * M_PI}) {
    CHECK(hardy_pointwise_bound(omega).passed);
  }
}

TEST_CASE("cross_validate: agreement at 1e-5, forced failure at 1e-14") {
  const auto ok = cross_validate(0, M_PI / 3.0, {-10.0, 10.0}, 1e-5);
  CHECK(ok.passed);
  CHECK(ok.max_residual <= 1e-5);
  CHECK(ok.parameters.at("roots_transcendental") ==
        ok.parameters.at("roots_oracle"));

  // accuracy floor: the two solvers cannot agree to 1e-14
  const auto floor_rep = cross_validate(0, M_PI / 3.0, {0.5, 4.0}, 1e-14);
  CHECK(!floor_rep.passed);
  CHECK(!floor_rep.note.empty());
}

TEST_CASE("perturbation_budget thresholds") {
  const double w = M_PI / 4.0;  // budget pi/(4w) = 1
  CHECK(perturbation_budget(w, 0.9) == PerturbationVerdict::SelfAdjointClosure);
  CHECK(perturbation_budget(w, 1.0) ==
        PerturbationVerdict::EssentiallySelfAdjoint);
  CHECK(perturbation_budget(w, 1.1) == PerturbationVerdict::NoGuarantee);
  CHECK_THROWS_AS(perturbation_budget(0.6 * M_PI, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(perturbation_budget(w, -0.1), std::invalid_argument);
}

TEST_CASE("quantum_dot_matrix: values and the zig-zag exclusion") {
  const auto m0 = quantum_dot_matrix(0.0);
  CHECK(m0.equivalence == QuantumDotMatrix::Equivalence::MITplus);
  for (double d : m0.diag) CHECK(d == doctest::Approx(1.0).epsilon(1e-14));

  const auto mpi = quantum_dot_matrix(M_PI);
  CHECK(mpi.equivalence == QuantumDotMatrix::Equivalence::MITminus);
  for (double d : mpi.diag) CHECK(d == doctest::Approx(1.0).epsilon(1e-12));

  const auto m3 = quantum_dot_matrix(M_PI / 3.0);
  const double s = std::sin(M_PI / 3.0);
  CHECK(m3.diag[0] == doctest::Approx(std::sqrt(0.5 / (1.0 + s))).epsilon(1e-14));
  CHECK(m3.diag[2] == doctest::Approx(std::sqrt(0.5 / (1.0 - s))).epsilon(1e-14));
  CHECK(m3.equivalence == QuantumDotMatrix::Equivalence::MITplus);

  CHECK_THROWS_AS(quantum_dot_matrix(0.5 * M_PI), std::invalid_argument);
  CHECK_THROWS_AS(quantum_dot_matrix(1.5 * M_PI), std::invalid_argument);
  CHECK_THROWS_AS(quantum_dot_matrix(-0.1), std::invalid_argument);
}
