#include "conedirac/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "conedirac/quadrature.hpp"

namespace conedirac::specfun {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-16;

// ---------------------------------------------------------------------
// Minimal double-double arithmetic for the 2F1 accumulation.  Only the
// operations the series loop needs.
// ---------------------------------------------------------------------
struct DD {
  double hi;
  double lo;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = dd_add(a, dd_mul(b, -q1));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_mul(b, -q2));
  double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return dd_add(q, DD{q3, 0.0});
}

inline bool is_integer(double x) { return x == std::rint(x); }

// ---------------------------------------------------------------------
// Lanczos gamma, g = 607/128, 15 coefficients (Godfrey).
// ---------------------------------------------------------------------
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double gamma_positive(double x) {
  // x >= 0.5
  double s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (x - 1.0 + k);
  const double t = x - 0.5 + kLanczosG;
  return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * s;
}

}  // namespace

double sin_pi(double x) {
  const double n = std::rint(x);
  const double r = x - n;  // exact, |r| <= 1/2
  const double s = std::sin(M_PI * r);
  return (std::fmod(n, 2.0) != 0.0) ? -s : s;
}

double gamma_fn(double x) {
  if (x <= 0.0 && is_integer(x))
    throw PoleError("gamma_fn: pole at non-positive integer x=" +
                    std::to_string(x));
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

namespace {

// Core 2F1 series.  Parameters held as exact double-double sums so the
// per-term relative error stays ~1e-31 even after thousands of updates.
double hyp2f1_series(double a, double b, double c, double z) {
  DD sum{1.0, 0.0};
  DD term{1.0, 0.0};
  int below = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    DD num = dd_mul(two_sum(a, n), two_sum(b, n));
    DD den = dd_mul(two_sum(c, n), DD{static_cast<double>(n) + 1.0, 0.0});
    term = dd_mul(dd_div(dd_mul(term, num), den), z);
    sum = dd_add(sum, term);
    if (term.hi == 0.0) return sum.hi + sum.lo;  // terminating polynomial
    if (std::abs(term.hi) <= kTermTol * std::abs(sum.hi)) {
      if (++below >= 2) return sum.hi + sum.lo;
    } else {
      below = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series cap reached at z=" +
                         std::to_string(z));
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (!(z >= 0.0 && z < 1.0))
    throw std::domain_error("hyp2f1: z must lie in [0,1)");
  if (c <= 0.0 && is_integer(c))
    throw PoleError("hyp2f1: c is a non-positive integer");
  if (z == 0.0) return 1.0;
  return hyp2f1_series(a, b, c, z);
}

FerrersArgs::FerrersArgs(double degree_, int order_, double x_)
    : degree(degree_), order(order_), x(x_) {
  if (!(x > -1.0 && x < 1.0))
    throw std::domain_error("FerrersArgs: x must lie strictly inside (-1,1)");
  if (!std::isfinite(degree))
    throw std::domain_error("FerrersArgs: degree must be finite");
}

namespace {

double factorial(int m) {
  double f = 1.0;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

// P_nu^{-m}(x), m >= 0, via the single-branch hypergeometric route.
double ferrers_neg_order(double nu, int m, double x) {
  const double t = 0.5 * (1.0 - x);
  const double w = std::pow((1.0 - x) / (1.0 + x), 0.5 * m) / factorial(m);
  return w * hyp2f1_series(-nu, nu + 1.0, 1.0 + m, t);
}

// d/dx of the above.
double ferrers_neg_order_derivative(double nu, int m, double x) {
  const double t = 0.5 * (1.0 - x);
  const double w = std::pow((1.0 - x) / (1.0 + x), 0.5 * m) / factorial(m);
  const double f = hyp2f1_series(-nu, nu + 1.0, 1.0 + m, t);
  const double fp = hyp2f1_series(1.0 - nu, nu + 2.0, 2.0 + m, t);
  return -m * w * f / (1.0 - x * x) +
         nu * (nu + 1.0) / (2.0 * (1.0 + m)) * w * fp;
}

double canonical_degree(double nu) { return nu < -0.5 ? -nu - 1.0 : nu; }

}  // namespace

FerrersEval ferrers_p_ext(double degree, int order, double x) {
  FerrersArgs args(degree, order, x);  // validates
  const double nu = canonical_degree(args.degree);
  if (order <= 0) return {ferrers_neg_order(nu, -order, x), false};

  const int m = order;
  const double d = nu - m + 1.0;
  if (d <= 0.0 && is_integer(d)) {
    // Gamma(nu-m+1) pole with finite product limit: P_n^m = 0 for
    // integer n < m.
    return {0.0, true};
  }
  const double ratio = gamma_fn(nu + m + 1.0) / gamma_fn(d);
  const double phase = (m % 2 == 0) ? 1.0 : -1.0;
  return {phase * ratio * ferrers_neg_order(nu, m, x), false};
}

double ferrers_p(double degree, int order, double x) {
  return ferrers_p_ext(degree, order, x).value;
}

double ferrers_p(const FerrersArgs& args) {
  return ferrers_p_ext(args.degree, args.order, args.x).value;
}

double ferrers_p_derivative(double degree, int order, double x) {
  FerrersArgs args(degree, order, x);
  const double nu = canonical_degree(args.degree);
  if (order <= 0) return ferrers_neg_order_derivative(nu, -order, x);

  const int m = order;
  const double d = nu - m + 1.0;
  if (d <= 0.0 && is_integer(d)) return 0.0;  // P_n^m vanishes identically
  const double ratio = gamma_fn(nu + m + 1.0) / gamma_fn(d);
  const double phase = (m % 2 == 0) ? 1.0 : -1.0;
  return phase * ratio * ferrers_neg_order_derivative(nu, m, x);
}

double ferrers_identity_residual(FerrersIdentity id, double degree, int order,
                                 double x) {
  const double nu = degree;
  const double mu = order;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  auto P = [&](double n, int m) { return ferrers_p(n, m, x); };
  switch (id) {
    case FerrersIdentity::GR8733_5:
      return std::abs(P(nu, order) - P(-nu - 1.0, order));
    case FerrersIdentity::GR8735_1:
      return std::abs((nu - mu + 1.0) * P(nu + 1.0, order) -
                      (nu + mu + 1.0) * x * P(nu, order) -
                      s * P(nu, order + 1));
    case FerrersIdentity::GR8735_2:
      return std::abs((nu + mu) * P(nu - 1.0, order) -
                      (nu - mu) * x * P(nu, order) + s * P(nu, order + 1));
    case FerrersIdentity::GR8735_3:
      return std::abs(P(nu - 1.0, order) - x * P(nu, order) -
                      (nu - mu + 1.0) * s * P(nu, order - 1));
    case FerrersIdentity::GR8735_4:
      return std::abs(P(nu + 1.0, order) - x * P(nu, order) +
                      (nu + mu) * s * P(nu, order - 1));
    case FerrersIdentity::DLMF14_10_2:
      return std::abs(s * P(nu, order + 1) - (nu - mu + 1.0) * P(nu + 1.0, order) +
                      (nu + mu + 1.0) * x * P(nu, order));
    case FerrersIdentity::DLMF14_10_4:
      return std::abs((1.0 - x * x) * ferrers_p_derivative(nu, order, x) -
                      (mu - nu - 1.0) * P(nu + 1.0, order) -
                      (nu + 1.0) * x * P(nu, order));
  }
  throw std::invalid_argument("ferrers_identity_residual: unknown identity");
}

// ---------------------------------------------------------------------
// Modified Bessel functions.
// ---------------------------------------------------------------------

double bessel_k_panels(double nu, double x, int panels) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
  if (!(nu >= 0.0)) throw std::domain_error("bessel_k: nu must be >= 0");
  if (x > 650.0) throw std::overflow_error("bessel_k: exp(-x) underflows");
  // Truncation point: integrand below ~1e-22 * exp(-x) past T.
  double T = 2.0;
  while (x * (std::cosh(T) - 1.0) - nu * T < 50.0 && T < 80.0) T += 0.5;
  auto f = [nu, x](double t) {
    return std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
  };
  return quad::composite_quadrature(f, 0.0, T, 32, panels);
}

double bessel_k(double nu, double x) {
  double prev = bessel_k_panels(nu, x, 8);
  for (int panels = 16; panels <= 256; panels *= 2) {
    const double cur = bessel_k_panels(nu, x, panels);
    if (std::abs(cur - prev) <= 1e-13 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

double bessel_i(double nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_i: x must be > 0");
  if (!(nu >= 0.0)) throw std::domain_error("bessel_i: nu must be >= 0");
  const double lead = std::pow(0.5 * x, nu);
  if (!std::isfinite(lead) || x > 650.0)
    throw std::overflow_error("bessel_i: argument out of range");
  const double q = 0.25 * x * x;
  double term = 1.0 / gamma_fn(nu + 1.0);
  double sum = term;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (term <= 1e-17 * sum) return lead * sum;
  }
  throw ConvergenceError("bessel_i: series cap reached");
}

}  // namespace conedirac::specfun
