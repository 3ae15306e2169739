#include "conedirac/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace conedirac::quad {

namespace {

Rule compute_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one clean-up step
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        x -= p1 / pp;
        break;
      }
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const Rule& gauss_legendre_rule(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre_rule: need n >= 2");
  thread_local std::map<int, Rule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double quadrature(const std::function<double(double)>& f, double a, double b,
                  int nodes) {
  const Rule& r = gauss_legendre_rule(nodes);
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < nodes; ++i) s += r.weights[i] * f(mid + hw * r.nodes[i]);
  return hw * s;
}

double composite_quadrature(const std::function<double(double)>& f, double a,
                            double b, int nodes_per_panel, int panels) {
  if (panels < 1) throw std::invalid_argument("composite_quadrature: panels >= 1");
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double pa = a + (b - a) * p / panels;
    const double pb = a + (b - a) * (p + 1) / panels;
    s += quadrature(f, pa, pb, nodes_per_panel);
  }
  return s;
}

double composite_quadrature(const std::function<double(double)>& f,
                            const std::vector<double>& edges,
                            int nodes_per_panel) {
  if (edges.size() < 2)
    throw std::invalid_argument("composite_quadrature: need >= 2 edges");
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p)
    s += quadrature(f, edges[p], edges[p + 1], nodes_per_panel);
  return s;
}

std::vector<double> dyadic_edges(double a, double b, int levels) {
  if (!(b > a) || levels < 1)
    throw std::invalid_argument("dyadic_edges: need b > a, levels >= 1");
  std::vector<double> edges;
  edges.push_back(a);
  // sub-interval widths double away from a: a + (b-a)/2^k
  for (int k = levels - 1; k >= 1; --k)
    edges.push_back(a + (b - a) / std::pow(2.0, k));
  edges.push_back(b);
  return edges;
}

}  // namespace conedirac::quad
