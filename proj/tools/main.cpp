// conedirac -- command-line surface for the cone spin-orbit spectral toolkit.
//
// Subcommands:
//   spectrum   fiber eigenvalues for given momentum indices and aperture
//   figure1    sweep of Z_0 over the aperture range with gap-bound curves
//   verify     the built-in verification matrix, JSON report
//   classify   half-line deficiency indices / perturbation budget /
//              quantum-dot equivalence matrix
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 numerical failure.  Output files are written all-or-nothing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conedirac/angular.hpp"
#include "conedirac/halfline.hpp"
#include "conedirac/oracle.hpp"
#include "conedirac/parallel.hpp"
#include "conedirac/specfun.hpp"
#include "conedirac/testfunctions.hpp"
#include "conedirac/verify.hpp"
#include "conedirac/version.hpp"
#include "json.hpp"

namespace cd = conedirac;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string branch_name(cd::angular::Branch b) {
  return b == cd::angular::Branch::Eq1 ? "Eq1" : "Eq2";
}

// All-or-nothing sink: the payload is assembled in memory and only touches
// the filesystem (or stdout) once the command has fully succeeded.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open output path: " + path);
  out << payload;
}

struct WindowOpt {
  double lo = -10.0;
  double hi = 10.0;
};

WindowOpt parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);  // skip a leading minus sign
  if (colon == std::string::npos)
    throw std::invalid_argument("window: expected lo:hi");
  WindowOpt w;
  try {
    w.lo = std::stod(s.substr(0, colon));
    w.hi = std::stod(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("window: expected numeric lo:hi");
  }
  if (!(w.hi > w.lo)) throw std::invalid_argument("window: need lo < hi");
  return w;
}

struct OmegaOpt {
  std::optional<double> radians;
  std::optional<double> pi_fraction;

  double resolve() const {
    if (radians && pi_fraction)
      throw std::invalid_argument("give either --omega or --omega-pi, not both");
    if (radians) return *radians;
    if (pi_fraction) return *pi_fraction * M_PI;
    throw std::invalid_argument("an aperture is required (--omega/--omega-pi)");
  }
};

ordered_json make_envelope(const std::string& command) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = ordered_json::object();
  j["results"] = ordered_json::array();
  j["reports"] = ordered_json::array();
  j["meta"] = {{"version", cd::kVersion}, {"wall_time", 0.0}};
  return j;
}

class WallClock {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// ------------------------------------------------------------------
// spectrum
// ------------------------------------------------------------------
struct SpectrumArgs {
  std::vector<int> ks;
  std::string k_range;
  OmegaOpt omega;
  std::string window_str = "-10:10";
  double scan_step = 0.005;
  std::string format = "csv";
  std::string output;
  int threads = 0;
};

int run_spectrum(const SpectrumArgs& args) {
  const WallClock clock;
  const double omega = args.omega.resolve();
  const WindowOpt w = parse_window(args.window_str);
  if (!(args.scan_step > 0.0))
    throw std::invalid_argument("scan step must be positive");

  std::vector<int> ks = args.ks;
  if (!args.k_range.empty()) {
    const auto colon = args.k_range.find(':', 1);
    if (colon == std::string::npos)
      throw std::invalid_argument("--k-range expects a:b");
    const int a = std::stoi(args.k_range.substr(0, colon));
    const int b = std::stoi(args.k_range.substr(colon + 1));
    if (b < a) throw std::invalid_argument("--k-range expects a <= b");
    for (int k = a; k <= b; ++k) ks.push_back(k);
  }
  if (ks.empty()) throw std::invalid_argument("at least one --k is required");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  const int threads = args.threads > 0 ? args.threads : cd::par::default_threads();
  std::vector<cd::angular::AngularSpectrum> spectra(ks.size());
  cd::par::parallel_for(static_cast<int>(ks.size()), threads, [&](int i) {
    const cd::angular::AngularProblem problem(ks[i], omega);
    spectra[i] = cd::angular::spectrum(problem, {w.lo, w.hi}, args.scan_step);
  });

  std::ostringstream csv;
  csv << "omega,k,lambda,branch,residual\n";
  ordered_json j = make_envelope("spectrum");
  j["config"] = {{"omega", omega},
                 {"k", ks},
                 {"window", {w.lo, w.hi}},
                 {"scan_step", args.scan_step},
                 {"threads", threads}};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (const auto& r : spectra[i].records) {
      csv << fmt17(omega) << ',' << ks[i] << ',' << fmt17(r.lambda) << ','
          << branch_name(r.branch) << ',' << fmt17(r.residual) << '\n';
      j["results"].push_back({{"omega", omega},
                              {"k", ks[i]},
                              {"lambda", r.lambda},
                              {"branch", branch_name(r.branch)},
                              {"residual", r.residual}});
    }
  }
  j["meta"]["wall_time"] = clock.seconds();
  emit(args.output, args.format == "json" ? j.dump(2) + "\n" : csv.str());
  return 0;
}

// ------------------------------------------------------------------
// figure1
// ------------------------------------------------------------------
struct Figure1Args {
  int samples = 200;
  double omega_min_pi = 0.05;
  double omega_max_pi = 0.95;
  double notch_pi = 0.01;
  std::string window_str = "-10:10";
  double scan_step = 0.005;
  std::string format = "csv";
  std::string output;
  std::string svg_path;
  int threads = 0;
};

std::vector<double> figure1_grid(const Figure1Args& args) {
  if (args.samples <= 0) throw std::invalid_argument("empty aperture grid");
  if (!(args.omega_min_pi > 0.0 && args.omega_max_pi < 1.0 &&
        args.omega_max_pi > args.omega_min_pi))
    throw std::invalid_argument("aperture grid must lie inside (0, pi)");
  std::vector<double> grid(args.samples);
  const double lo = args.omega_min_pi * M_PI;
  const double hi = args.omega_max_pi * M_PI;
  const double half_notch = 0.5 * args.notch_pi * M_PI;
  for (int i = 0; i < args.samples; ++i) {
    double om = lo + (hi - lo) * (i + 0.5) / args.samples;
    // samples inside the excluded notch move to its nearest edge
    if (std::abs(om - 0.5 * M_PI) < half_notch)
      om = om < 0.5 * M_PI ? 0.5 * M_PI - half_notch : 0.5 * M_PI + half_notch;
    grid[i] = om;
  }
  return grid;
}

std::string figure1_svg(const std::vector<double>& grid,
                        const std::vector<std::vector<double>>& lambdas,
                        double ylo, double yhi) {
  const int W = 800, H = 600;
  const double ml = 60, mr = 20, mt = 20, mb = 45;
  auto X = [&](double om) { return ml + (W - ml - mr) * (om / M_PI); };
  auto Y = [&](double l) { return mt + (H - mt - mb) * (yhi - l) / (yhi - ylo); };
  auto f2 = [](double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", v);
    return std::string(b);
  };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
    << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  s << "<line x1=\"" << f2(ml) << "\" y1=\"" << f2(Y(0)) << "\" x2=\""
    << f2(W - mr) << "\" y2=\"" << f2(Y(0))
    << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  s << "<line x1=\"" << f2(ml) << "\" y1=\"" << f2(mt) << "\" x2=\"" << f2(ml)
    << "\" y2=\"" << f2(H - mb) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double om = 0.25 * i * M_PI;
    s << "<line x1=\"" << f2(X(om)) << "\" y1=\"" << f2(H - mb) << "\" x2=\""
      << f2(X(om)) << "\" y2=\"" << f2(H - mb + 5) << "\" stroke=\"#444\"/>\n";
    s << "<text x=\"" << f2(X(om)) << "\" y=\"" << f2(H - mb + 20)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << f2(0.25 * i)
      << "&#960;</text>\n";
  }
  for (int l = static_cast<int>(std::ceil(ylo)); l <= yhi; l += 2) {
    s << "<line x1=\"" << f2(ml - 5) << "\" y1=\"" << f2(Y(l)) << "\" x2=\""
      << f2(ml) << "\" y2=\"" << f2(Y(l)) << "\" stroke=\"#444\"/>\n";
    s << "<text x=\"" << f2(ml - 10) << "\" y=\"" << f2(Y(l) + 4)
      << "\" font-size=\"12\" text-anchor=\"end\">" << l << "</text>\n";
  }
  s << "<text x=\"" << f2(0.5 * W) << "\" y=\"" << f2(H - 8)
    << "\" font-size=\"13\" text-anchor=\"middle\">aperture &#969;</text>\n";
  s << "<text x=\"15\" y=\"" << f2(0.5 * H)
    << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
    << f2(0.5 * H) << ")\">&#955;</text>\n";

  // dashed half-lines at +-1/2
  for (double l : {0.5, -0.5}) {
    s << "<line x1=\"" << f2(X(grid.front())) << "\" y1=\"" << f2(Y(l))
      << "\" x2=\"" << f2(X(grid.back())) << "\" y2=\"" << f2(Y(l))
      << "\" stroke=\"red\" stroke-width=\"1\" stroke-dasharray=\"8,4\"/>\n";
  }
  // dotted gap-bound curves on the convex side
  for (int sgn : {1, -1}) {
    std::ostringstream pts;
    bool first = true;
    for (double om : grid) {
      if (om >= 0.5 * M_PI) continue;
      const double l = sgn * (M_PI / (4.0 * om) + 0.5);
      if (l < ylo || l > yhi) continue;
      pts << (first ? "" : " ") << f2(X(om)) << ',' << f2(Y(l));
      first = false;
    }
    s << "<polyline fill=\"none\" stroke=\"green\" stroke-width=\"1\" "
         "stroke-dasharray=\"2,3\" points=\""
      << pts.str() << "\"/>\n";
  }
  // the eigenvalue set, black points
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (double l : lambdas[i])
      s << "<circle cx=\"" << f2(X(grid[i])) << "\" cy=\"" << f2(Y(l))
        << "\" r=\"1.4\" fill=\"black\"/>\n";
  s << "</svg>\n";
  return s.str();
}

int run_figure1(const Figure1Args& args) {
  const WallClock clock;
  const WindowOpt w = parse_window(args.window_str);
  const auto grid = figure1_grid(args);
  const int threads = args.threads > 0 ? args.threads : cd::par::default_threads();

  std::vector<std::vector<double>> lambdas(grid.size());
  cd::par::parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
    const cd::angular::AngularProblem problem(0, grid[i]);
    const auto sp = cd::angular::spectrum(problem, {w.lo, w.hi}, args.scan_step);
    for (const auto& r : sp.records) lambdas[i].push_back(r.lambda);
  });

  std::ostringstream csv;
  csv << "series,omega,lambda\n";
  ordered_json j = make_envelope("figure1");
  j["config"] = {{"samples", args.samples},
                 {"omega_min_pi", args.omega_min_pi},
                 {"omega_max_pi", args.omega_max_pi},
                 {"notch_pi", args.notch_pi},
                 {"window", {w.lo, w.hi}},
                 {"scan_step", args.scan_step},
                 {"threads", threads}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    j["results"].push_back({{"omega", grid[i]}, {"lambda", lambdas[i]}});
    for (double l : lambdas[i])
      csv << "Z0," << fmt17(grid[i]) << ',' << fmt17(l) << '\n';
  }
  for (double om : grid) {
    if (om < 0.5 * M_PI) {
      const double b = M_PI / (4.0 * om) + 0.5;
      csv << "bound_upper," << fmt17(om) << ',' << fmt17(b) << '\n';
      csv << "bound_lower," << fmt17(om) << ',' << fmt17(-b) << '\n';
    }
    csv << "half_upper," << fmt17(om) << ",0.5\n";
    csv << "half_lower," << fmt17(om) << ",-0.5\n";
  }
  j["meta"]["wall_time"] = clock.seconds();

  emit(args.output, args.format == "json" ? j.dump(2) + "\n" : csv.str());
  if (!args.svg_path.empty())
    emit(args.svg_path, figure1_svg(grid, lambdas, w.lo, w.hi));
  return 0;
}

// ------------------------------------------------------------------
// verify
// ------------------------------------------------------------------
struct VerifyArgs {
  std::string only;
  double tol = 1e-5;  // cross-validation tolerance
  std::string output;
};

ordered_json report_json(const cd::verify::VerificationReport& r) {
  ordered_json j = {{"check_id", r.check_id},
                    {"max_residual", r.max_residual},
                    {"passed", r.passed}};
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int run_verify(const VerifyArgs& args) {
  const WallClock clock;
  std::vector<cd::verify::VerificationReport> reports;
  auto want = [&](const std::string& id) {
    return args.only.empty() || id.find(args.only) != std::string::npos;
  };

  // Ferrers identity suite
  {
    using cd::specfun::FerrersIdentity;
    const std::pair<FerrersIdentity, std::string> ids[] = {
        {FerrersIdentity::GR8733_5, "GR8733_5"},
        {FerrersIdentity::GR8735_1, "GR8735_1"},
        {FerrersIdentity::GR8735_2, "GR8735_2"},
        {FerrersIdentity::GR8735_3, "GR8735_3"},
        {FerrersIdentity::GR8735_4, "GR8735_4"},
        {FerrersIdentity::DLMF14_10_2, "DLMF14_10_2"},
        {FerrersIdentity::DLMF14_10_4, "DLMF14_10_4"},
    };
    std::mt19937 rng(420);
    std::uniform_real_distribution<double> dnu(-4.5, 4.5);
    std::uniform_real_distribution<double> dx(-0.95, 0.95);
    std::uniform_int_distribution<int> dmu(-3, 2);
    for (const auto& [id, name] : ids) {
      const std::string check = "ferrers_identity/" + name;
      if (!want(check)) continue;
      cd::verify::VerificationReport rep;
      rep.check_id = check;
      rep.passed = true;
      for (int i = 0; i < 40; ++i) {
        const double nu = dnu(rng);
        const int mu = dmu(rng);
        const double x = dx(rng);
        const double res = cd::specfun::ferrers_identity_residual(id, nu, mu, x);
        rep.max_residual = std::max(rep.max_residual, res);
        if (res > 1e-7) rep.passed = false;
      }
      reports.push_back(rep);
    }
  }

  // angular quadratic-form identity
  {
    std::mt19937 rng(77);
    for (auto [k, omega] : std::vector<std::pair<int, double>>{
             {0, M_PI / 3.0}, {-2, 0.45 * M_PI}, {1, 0.8 * M_PI}}) {
      const std::string check = "form_identity/k" + std::to_string(k);
      if (!want(check)) continue;
      const auto bm = cd::angular::BoundaryMatrix::make(omega);
      cd::verify::VerificationReport agg;
      agg.check_id = check;
      agg.passed = true;
      agg.parameters["k"] = k;
      agg.parameters["omega"] = omega;
      for (int rep = 0; rep < 5; ++rep) {
        const auto psi = cd::testfn::SpinorTestFunction::random(bm, 0.1 * omega, rng);
        const auto r = cd::verify::angular_form_identity(
            cd::angular::AngularProblem(k, omega), psi);
        agg.max_residual = std::max(agg.max_residual, r.max_residual);
        agg.passed = agg.passed && r.passed;
      }
      reports.push_back(agg);
    }
  }

  // interval Hardy
  if (want("hardy")) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dc(-1.0, 1.0);
    for (double omega : {0.25 * M_PI, 0.5 * M_PI}) {
      cd::verify::VerificationReport agg;
      agg.check_id = "hardy/omega=" + std::to_string(omega);
      agg.passed = true;
      agg.parameters["omega"] = omega;
      for (int rep = 0; rep < 50; ++rep) {
        const double a = omega * (0.05 + 0.4 * (rep % 5) / 5.0);
        const double b = a + (omega - a) * (0.3 + 0.7 * (rep % 7) / 7.0);
        const auto f = cd::testfn::ScalarTestFunction::poly_bump(
            a, b, {dc(rng), dc(rng), dc(rng)});
        const auto r = cd::verify::interval_hardy_check(omega, f);
        agg.passed = agg.passed && r.passed;
      }
      reports.push_back(agg);
    }
    reports.push_back(cd::verify::hardy_pointwise_bound(0.4 * M_PI));
  }

  // dual-solver agreement
  for (auto [k, omega] : std::vector<std::pair<int, double>>{
           {0, M_PI / 3.0}, {-1, 0.6 * M_PI}}) {
    const std::string check = "cross_validate/k" + std::to_string(k);
    if (!want(check)) continue;
    auto r = cd::verify::cross_validate(k, omega, {-8.0, 8.0}, args.tol);
    r.check_id = check;
    reports.push_back(r);
  }

  // half-line classification table
  if (want("halfline")) {
    cd::verify::VerificationReport rep;
    rep.check_id = "halfline/classification";
    using cd::halfline::classify;
    using cd::halfline::kInfiniteEndpoint;
    bool ok = true;
    ok = ok && classify({0.5, 1.0}).n_plus == 1;
    ok = ok && classify({-2.0, 3.0}).n_plus == 1;
    ok = ok && classify({1.5, kInfiniteEndpoint}).essentially_self_adjoint;
    ok = ok && classify({1.5, kInfiniteEndpoint}).domain_note == "H1_0 half-line";
    ok = ok && classify({0.2, kInfiniteEndpoint}).n_plus == 1;
    try {
      classify({0.2, 1.0});
      ok = false;
    } catch (const std::invalid_argument&) {
    }
    rep.passed = ok;
    reports.push_back(rep);

    cd::verify::VerificationReport ode;
    ode.check_id = "halfline/deficiency_ode";
    for (double alpha : {-0.35, 0.2}) {
      for (int i = 1; i <= 30; ++i) {
        const double x = 0.25 * i;
        const double h = 1e-5;
        const auto f =
            cd::halfline::deficiency_function(alpha, cd::halfline::SignPM::plus, x);
        const auto fp = cd::halfline::deficiency_function(
            alpha, cd::halfline::SignPM::plus, x + h);
        const auto fm = cd::halfline::deficiency_function(
            alpha, cd::halfline::SignPM::plus, x - h);
        const std::complex<double> z(0.0, 1.0);
        const auto d1 = (fp[1] - fm[1]) / (2.0 * h);
        const auto r1 = d1 + alpha * f[1] / x - z * f[0];
        const double scale = 1.0 + std::abs(f[0]) + std::abs(f[1]);
        ode.max_residual = std::max(ode.max_residual, std::abs(r1) / scale);
      }
    }
    ode.passed = ode.max_residual <= 1e-5;
    reports.push_back(ode);
  }

  // gap reports on a small matrix
  if (want("gap")) {
    cd::verify::VerificationReport rep;
    rep.check_id = "gap/bounds";
    rep.passed = true;
    for (auto [k, omega] : std::vector<std::pair<int, double>>{
             {0, 0.3 * M_PI}, {-1, 0.25 * M_PI}, {2, 0.8 * M_PI}}) {
      const auto g = cd::angular::gap_report(cd::angular::AngularProblem(k, omega),
                                             {-12.0, 12.0}, 0.01);
      rep.passed = rep.passed && g.satisfied;
      rep.max_residual = std::max(rep.max_residual, g.bound - g.min_abs_lambda);
    }
    reports.push_back(rep);
  }

  // spot checks of the matrix-level results
  if (want("quantumdot")) {
    cd::verify::VerificationReport rep;
    rep.check_id = "quantumdot/matrix";
    const auto m = cd::verify::quantum_dot_matrix(M_PI / 3.0);
    rep.passed =
        m.equivalence == cd::verify::QuantumDotMatrix::Equivalence::MITplus &&
        m.diag[0] > 0 && m.diag[2] > 0;
    reports.push_back(rep);
  }
  if (want("perturbation")) {
    cd::verify::VerificationReport rep;
    rep.check_id = "perturbation/budget";
    using cd::verify::PerturbationVerdict;
    rep.passed = cd::verify::perturbation_budget(M_PI / 4.0, 0.9) ==
                     PerturbationVerdict::SelfAdjointClosure &&
                 cd::verify::perturbation_budget(M_PI / 4.0, 1.0) ==
                     PerturbationVerdict::EssentiallySelfAdjoint &&
                 cd::verify::perturbation_budget(M_PI / 4.0, 1.1) ==
                     PerturbationVerdict::NoGuarantee;
    reports.push_back(rep);
  }

  ordered_json j = make_envelope("verify");
  j["config"] = {{"only", args.only}, {"tol", args.tol}};
  bool all_passed = true;
  for (const auto& r : reports) {
    j["reports"].push_back(report_json(r));
    all_passed = all_passed && r.passed;
  }
  j["meta"]["wall_time"] = clock.seconds();
  emit(args.output, j.dump(2) + "\n");
  return all_passed ? 0 : 1;
}

// ------------------------------------------------------------------
// classify
// ------------------------------------------------------------------
int run_classify_halfline(double alpha, const std::string& b,
                          const std::string& output) {
  const WallClock clock;
  double endpoint;
  if (b == "inf" || b == "infinity") {
    endpoint = cd::halfline::kInfiniteEndpoint;
  } else {
    try {
      endpoint = std::stod(b);
    } catch (const std::exception&) {
      throw std::invalid_argument("--b expects a number or 'inf'");
    }
  }
  const auto rep = cd::halfline::classify({alpha, endpoint});
  ordered_json j = make_envelope("classify halfline");
  j["config"] = {{"alpha", alpha}, {"b", b}};
  j["results"].push_back(
      {{"indices", {rep.n_plus, rep.n_minus}},
       {"essentially_self_adjoint", rep.essentially_self_adjoint},
       {"domain_note", rep.domain_note}});
  j["meta"]["wall_time"] = clock.seconds();
  emit(output, j.dump(2) + "\n");
  return 0;
}

int run_classify_perturbation(double omega, double nu,
                              const std::string& output) {
  const WallClock clock;
  const auto verdict = cd::verify::perturbation_budget(omega, nu);
  ordered_json j = make_envelope("classify perturbation");
  j["config"] = {{"omega", omega}, {"nu", nu}};
  j["results"].push_back({{"verdict", cd::verify::to_string(verdict)},
                          {"budget", M_PI / (4.0 * omega)}});
  j["meta"]["wall_time"] = clock.seconds();
  emit(output, j.dump(2) + "\n");
  return 0;
}

int run_classify_quantumdot(double theta, const std::string& output) {
  const WallClock clock;
  const auto m = cd::verify::quantum_dot_matrix(theta);
  ordered_json j = make_envelope("classify quantumdot");
  j["config"] = {{"theta", theta}};
  j["results"].push_back(
      {{"diag", m.diag},
       {"equivalence",
        m.equivalence == cd::verify::QuantumDotMatrix::Equivalence::MITplus
            ? "MITplus"
            : "MITminus"}});
  j["meta"]["wall_time"] = clock.seconds();
  emit(output, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber spectra and verification checks for the bag-confined "
               "Dirac operator on a circular cone"};
  app.require_subcommand(1);

  SpectrumArgs sp;
  auto* sp_cmd =
      app.add_subcommand("spectrum", "fiber eigenvalues for given k and omega");
  sp_cmd->add_option("--k", sp.ks, "momentum index (repeatable)");
  sp_cmd->add_option("--k-range", sp.k_range, "inclusive index range a:b");
  sp_cmd->add_option("--omega", sp.omega.radians, "half-aperture in radians");
  sp_cmd->add_option("--omega-pi", sp.omega.pi_fraction,
                     "half-aperture as a fraction of pi");
  sp_cmd->add_option("--window", sp.window_str, "lambda window lo:hi");
  sp_cmd->add_option("--scan-step", sp.scan_step, "scan resolution in lambda");
  sp_cmd->add_option("--format", sp.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sp_cmd->add_option("--output,-o", sp.output, "output path (default stdout)");
  sp_cmd->add_option("--threads", sp.threads, "worker threads");

  Figure1Args fg;
  auto* fg_cmd = app.add_subcommand(
      "figure1", "sweep Z_0 over the aperture range with bound curves");
  fg_cmd->add_option("--samples", fg.samples, "number of aperture samples");
  fg_cmd->add_option("--omega-min-pi", fg.omega_min_pi, "grid start (x pi)");
  fg_cmd->add_option("--omega-max-pi", fg.omega_max_pi, "grid end (x pi)");
  fg_cmd->add_option("--notch-pi", fg.notch_pi,
                     "width of the excluded notch at pi/2 (x pi)");
  fg_cmd->add_option("--window", fg.window_str, "lambda window lo:hi");
  fg_cmd->add_option("--scan-step", fg.scan_step, "scan resolution in lambda");
  fg_cmd->add_option("--format", fg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  fg_cmd->add_option("--output,-o", fg.output, "output path (default stdout)");
  fg_cmd->add_option("--svg", fg.svg_path, "also render an SVG plot here");
  fg_cmd->add_option("--threads", fg.threads, "worker threads");

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand("verify", "run the verification matrix (JSON)");
  vf_cmd->add_option("--only", vf.only, "filter checks by substring");
  vf_cmd->add_option("--tol", vf.tol, "cross-validation tolerance");
  vf_cmd->add_option("--output,-o", vf.output, "output path (default stdout)");

  auto* cl_cmd = app.add_subcommand("classify", "closed-form classifications");
  cl_cmd->require_subcommand(1);
  double cl_alpha = 0.0;
  std::string cl_b = "inf";
  std::string cl_out;
  auto* cl_half = cl_cmd->add_subcommand(
      "halfline", "deficiency indices of the half-line operator");
  cl_half->add_option("--alpha", cl_alpha, "coupling")->required();
  cl_half->add_option("--b", cl_b, "endpoint (number or 'inf')");
  cl_half->add_option("--output,-o", cl_out, "output path (default stdout)");

  OmegaOpt cl_omega;
  double cl_nu = 0.0;
  std::string cl_pert_out;
  auto* cl_pert = cl_cmd->add_subcommand(
      "perturbation", "self-adjointness budget for Coulomb-like potentials");
  cl_pert->add_option("--omega", cl_omega.radians, "half-aperture in radians");
  cl_pert->add_option("--omega-pi", cl_omega.pi_fraction,
                      "half-aperture as a fraction of pi");
  cl_pert->add_option("--nu", cl_nu, "sup |x||V(x)|")->required();
  cl_pert->add_option("--output,-o", cl_pert_out, "output path (default stdout)");

  double cl_theta = 0.0;
  std::string cl_qd_out;
  auto* cl_qd = cl_cmd->add_subcommand(
      "quantumdot", "equivalence matrix for quantum-dot boundary conditions");
  cl_qd->add_option("--theta", cl_theta, "boundary parameter in [0, 2pi)")
      ->required();
  cl_qd->add_option("--output,-o", cl_qd_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sp_cmd->parsed()) return run_spectrum(sp);
    if (fg_cmd->parsed()) return run_figure1(fg);
    if (vf_cmd->parsed()) return run_verify(vf);
    if (cl_half->parsed()) return run_classify_halfline(cl_alpha, cl_b, cl_out);
    if (cl_pert->parsed())
      return run_classify_perturbation(cl_omega.resolve(), cl_nu, cl_pert_out);
    if (cl_qd->parsed()) return run_classify_quantumdot(cl_theta, cl_qd_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
