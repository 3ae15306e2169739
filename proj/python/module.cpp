// Python bindings for the main operations: special functions, fiber
// spectra, the shooting oracle, gap reports, half-line classification, and
// the closed-form matrices.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conedirac/angular.hpp"
#include "conedirac/halfline.hpp"
#include "conedirac/oracle.hpp"
#include "conedirac/specfun.hpp"
#include "conedirac/verify.hpp"
#include "conedirac/version.hpp"

namespace py = pybind11;
namespace cd = conedirac;

namespace {

cd::specfun::FerrersIdentity identity_from_name(const std::string& name) {
  using I = cd::specfun::FerrersIdentity;
  if (name == "GR8733_5") return I::GR8733_5;
  if (name == "GR8735_1") return I::GR8735_1;
  if (name == "GR8735_2") return I::GR8735_2;
  if (name == "GR8735_3") return I::GR8735_3;
  if (name == "GR8735_4") return I::GR8735_4;
  if (name == "DLMF14_10_2") return I::DLMF14_10_2;
  if (name == "DLMF14_10_4") return I::DLMF14_10_4;
  throw std::invalid_argument("unknown identity: " + name);
}

py::dict record_dict(const cd::angular::EigenvalueRecord& r) {
  py::dict d;
  d["lambda"] = r.lambda;
  d["branch"] = r.branch == cd::angular::Branch::Eq1 ? "Eq1" : "Eq2";
  d["residual"] = r.residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Fiber spectra of the spin-orbit operator for the bag-confined Dirac "
      "operator on a circular cone";
  m.attr("__version__") = cd::kVersion;

  // special functions
  m.def("gamma_fn", &cd::specfun::gamma_fn, py::arg("x"));
  m.def("hyp2f1", &cd::specfun::hyp2f1, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("z"));
  m.def("ferrers_p", py::overload_cast<double, int, double>(
                         &cd::specfun::ferrers_p),
        py::arg("degree"), py::arg("order"), py::arg("x"));
  m.def("ferrers_p_derivative", &cd::specfun::ferrers_p_derivative,
        py::arg("degree"), py::arg("order"), py::arg("x"));
  m.def(
      "ferrers_identity_residual",
      [](const std::string& id, double nu, int mu, double x) {
        return cd::specfun::ferrers_identity_residual(identity_from_name(id),
                                                      nu, mu, x);
      },
      py::arg("identity"), py::arg("degree"), py::arg("order"), py::arg("x"));
  m.def("bessel_k", &cd::specfun::bessel_k, py::arg("nu"), py::arg("x"));
  m.def("bessel_i", &cd::specfun::bessel_i, py::arg("nu"), py::arg("x"));

  // angular fiber spectra
  m.def(
      "char_fn",
      [](int k, double omega, double lam, const std::string& branch) {
        return cd::angular::char_fn(
            cd::angular::AngularProblem(k, omega), lam,
            branch == "Eq1" ? cd::angular::Branch::Eq1
                            : cd::angular::Branch::Eq2);
      },
      py::arg("k"), py::arg("omega"), py::arg("lambda"),
      py::arg("branch") = "Eq1");
  m.def(
      "spectrum",
      [](int k, double omega, double lo, double hi, double scan_step) {
        const auto sp = cd::angular::spectrum(
            cd::angular::AngularProblem(k, omega), {lo, hi}, scan_step);
        py::list out;
        for (const auto& r : sp.records) out.append(record_dict(r));
        return out;
      },
      py::arg("k"), py::arg("omega"), py::arg("lo") = -10.0,
      py::arg("hi") = 10.0, py::arg("scan_step") = 0.005);
  m.def(
      "oracle_spectrum",
      [](int k, double omega, double lo, double hi, double scan_step) {
        const auto sp =
            cd::oracle::oracle_spectrum(k, omega, {lo, hi}, {}, scan_step);
        py::list out;
        for (const auto& r : sp.records) out.append(record_dict(r));
        return out;
      },
      py::arg("k"), py::arg("omega"), py::arg("lo") = -10.0,
      py::arg("hi") = 10.0, py::arg("scan_step") = 0.01);
  m.def(
      "eigenfunction",
      [](int k, double omega, double lam, const std::string& sign,
         double theta, double phi) {
        return cd::angular::eigenfunction_value(
            cd::angular::AngularProblem(k, omega), lam,
            sign == "plus" ? cd::angular::SpinorSign::plus
                           : cd::angular::SpinorSign::minus,
            theta, phi);
      },
      py::arg("k"), py::arg("omega"), py::arg("lambda"), py::arg("sign"),
      py::arg("theta"), py::arg("phi") = 0.0);
  m.def(
      "gap_report",
      [](int k, double omega, double lo, double hi, double scan_step) {
        const auto g = cd::angular::gap_report(
            cd::angular::AngularProblem(k, omega), {lo, hi}, scan_step);
        py::dict d;
        d["min_abs_lambda"] = g.min_abs_lambda;
        d["bound"] = g.bound;
        d["satisfied"] = g.satisfied;
        d["censored"] = g.censored;
        d["conjectured"] = g.conjectured;
        return d;
      },
      py::arg("k"), py::arg("omega"), py::arg("lo") = -15.0,
      py::arg("hi") = 15.0, py::arg("scan_step") = 0.005);

  // half-line fiber machinery
  m.def(
      "classify_halfline",
      [](double alpha, double b) {
        const auto rep = cd::halfline::classify({alpha, b});
        py::dict d;
        d["indices"] = py::make_tuple(rep.n_plus, rep.n_minus);
        d["essentially_self_adjoint"] = rep.essentially_self_adjoint;
        d["domain_note"] = rep.domain_note;
        return d;
      },
      py::arg("alpha"),
      py::arg("b") = std::numeric_limits<double>::infinity());
  m.def(
      "deficiency_function",
      [](double alpha, const std::string& sign, double x) {
        return cd::halfline::deficiency_function(
            alpha,
            sign == "plus" ? cd::halfline::SignPM::plus
                           : cd::halfline::SignPM::minus,
            x);
      },
      py::arg("alpha"), py::arg("sign"), py::arg("x"));

  // closed-form classifications
  m.def(
      "perturbation_budget",
      [](double omega, double nu) {
        return cd::verify::to_string(
            cd::verify::perturbation_budget(omega, nu));
      },
      py::arg("omega"), py::arg("nu"));
  m.def(
      "quantum_dot_matrix",
      [](double theta) {
        const auto qd = cd::verify::quantum_dot_matrix(theta);
        py::dict d;
        d["diag"] = qd.diag;
        d["equivalence"] =
            qd.equivalence == cd::verify::QuantumDotMatrix::Equivalence::MITplus
                ? "MITplus"
                : "MITminus";
        return d;
      },
      py::arg("theta"));
}
