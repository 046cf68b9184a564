#include "spectral/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectral {

GaussLegendreRule gauss_legendre(unsigned n) {
  if (n == 0) throw std::domain_error("gauss_legendre: n must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const unsigned m = (n + 1) / 2;
  for (unsigned i = 0; i < m; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

const GaussLegendreRule& rule64() {
  static const GaussLegendreRule r = gauss_legendre(64);
  return r;
}

double panel(const std::function<double(double)>& fn, double lo, double hi) {
  const auto& r = rule64();
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * fn(c + h * r.nodes[i]);
  return h * sum;
}

double adapt(const std::function<double(double)>& fn, double lo, double hi, double whole,
             double rel_tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = panel(fn, lo, mid), right = panel(fn, mid, hi);
  const double refined = left + right;
  const double scale = std::abs(refined) + 1e-300;
  if (depth <= 0 || std::abs(refined - whole) <= rel_tol * scale) return refined;
  return adapt(fn, lo, mid, left, rel_tol, depth - 1) +
         adapt(fn, mid, hi, right, rel_tol, depth - 1);
}

}  // namespace

double integrate_panel(const std::function<double(double)>& fn, double lo, double hi) {
  return panel(fn, lo, hi);
}

double integrate(const std::function<double(double)>& fn, double lo, double hi, double rel_tol) {
  return adapt(fn, lo, hi, panel(fn, lo, hi), rel_tol, 8);
}

double chebyshev_gauss_mean(const std::function<double(double)>& h, unsigned n) {
  if (n == 0) throw std::domain_error("chebyshev_gauss_mean: n must be positive");
  double sum = 0.0;
  for (unsigned m = 1; m <= n; ++m)
    sum += h(std::cos((2.0 * m - 1.0) * std::numbers::pi / (2.0 * n)));
  return sum / n;
}

}  // namespace spectral
