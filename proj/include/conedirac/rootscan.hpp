#ifndef CONEDIRAC_ROOTSCAN_HPP
#define CONEDIRAC_ROOTSCAN_HPP

// Scan-bracket-refine protocol shared by the transcendental eigenvalue
// solver and the shooting oracle: sample a scalar function on a uniform
// grid, bracket sign changes, refine by bisection plus a few secant steps.
// Non-finite samples act as bracketing barriers, never as roots.

#include <functional>
#include <vector>

namespace conedirac::rootscan {

struct Options {
  double bisect_width = 1e-12;  // bracket width at which bisection stops
  int secant_steps = 3;         // derivative-free polish after bisection
};

struct Root {
  double x;
  double residual;  // |f| at the refined abscissa
};

struct Diagnostics {
  int unresolved_brackets = 0;       // refinement stalls, reported not dropped
  std::vector<double> barriers;      // grid points with non-finite samples
};

// All sign changes of f on the grid lo, lo+step, ..., hi, refined.
// Roots landing exactly on grid points are kept via interval shrinkage.
// Throws std::invalid_argument for a degenerate window.
std::vector<Root> scan(const std::function<double(double)>& f, double lo,
                       double hi, double step, const Options& opt = {},
                       Diagnostics* diag = nullptr);

}  // namespace conedirac::rootscan

#endif
