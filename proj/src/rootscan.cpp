#include "conedirac/rootscan.hpp"

#include <cmath>
#include <stdexcept>

namespace conedirac::rootscan {

namespace {

// Bisect [a, b] (f(a), f(b) of opposite sign) to width opt.bisect_width,
// then polish with derivative-free secant steps that are only accepted
// while they stay inside the bracket and shrink |f|.
Root refine(const std::function<double(double)>& f, double a, double fa,
            double b, double fb, const Options& opt, Diagnostics* diag) {
  while (b - a > opt.bisect_width) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;  // ran out of representable midpoints
    const double fm = f(m);
    if (!std::isfinite(fm)) {
      // barrier inside the bracket: refinement stalls, report it
      if (diag) ++diag->unresolved_brackets;
      break;
    }
    if (fm == 0.0) {
      a = b = m;
      fa = fb = 0.0;
      break;
    }
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }

  double x0 = a, f0 = fa;
  double x1 = b, f1 = fb;
  double best_x = std::abs(f0) < std::abs(f1) ? x0 : x1;
  double best_f = std::min(std::abs(f0), std::abs(f1));
  for (int it = 0; it < opt.secant_steps; ++it) {
    const double denom = f1 - f0;
    if (denom == 0.0) break;
    const double x2 = x1 - f1 * (x1 - x0) / denom;
    if (!std::isfinite(x2)) break;
    const double f2 = f(x2);
    if (!std::isfinite(f2)) break;
    if (std::abs(f2) < best_f) {
      best_f = std::abs(f2);
      best_x = x2;
    }
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }
  return {best_x, best_f};
}

}  // namespace

std::vector<Root> scan(const std::function<double(double)>& f, double lo,
                       double hi, double step, const Options& opt,
                       Diagnostics* diag) {
  if (!(hi > lo) || !(step > 0.0) || !((hi - lo) >= step))
    throw std::invalid_argument("rootscan: degenerate window");

  std::vector<Root> roots;
  const long n = static_cast<long>(std::ceil((hi - lo) / step));
  bool have_prev = false;
  double xp = 0.0, fp = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + i * step;
    if (i == n && x <= xp) break;
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      if (diag) diag->barriers.push_back(x);
      have_prev = false;
      continue;
    }
    if (fx == 0.0) {
      // exact grid hit: shrink a tiny interval around it
      const double d = step * 1e-6;
      roots.push_back(refine(f, x - d, f(x - d), x + d, f(x + d), opt, diag));
      have_prev = false;
      continue;
    }
    if (have_prev && (fp < 0.0) != (fx < 0.0))
      roots.push_back(refine(f, xp, fp, x, fx, opt, diag));
    xp = x;
    fp = fx;
    have_prev = true;
  }
  return roots;
}

}  // namespace conedirac::rootscan
