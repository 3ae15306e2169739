#ifndef CONEDIRAC_QUADRATURE_HPP
#define CONEDIRAC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace conedirac::quad {

// n-point Gauss-Legendre rule on [-1, 1].  Nodes by Newton iteration on
// the Legendre recurrence; cached per n (thread-local, so reentrant).
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const Rule& gauss_legendre_rule(int n);

// Single-panel n-point Gauss-Legendre value of int_a^b f.
// Exact for polynomials of degree <= 2n-1 (n >= 2 enforced).
double quadrature(const std::function<double(double)>& f, double a, double b,
                  int nodes);

// Composite rule over equal panels.
double composite_quadrature(const std::function<double(double)>& f, double a,
                            double b, int nodes_per_panel, int panels);

// Composite rule over explicit panel edges (ascending).
double composite_quadrature(const std::function<double(double)>& f,
                            const std::vector<double>& edges,
                            int nodes_per_panel);

// Panel edges graded dyadically toward `a`; levels+1 edges spanning [a, b].
// Suits integrands with an inverse-power weight concentrated at the left
// end of the support.
std::vector<double> dyadic_edges(double a, double b, int levels);

}  // namespace conedirac::quad

#endif
