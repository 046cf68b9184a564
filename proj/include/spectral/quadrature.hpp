#pragma once

#include <functional>
#include <vector>

namespace spectral {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computes the n-point Gauss-Legendre rule by Newton iteration on the
/// three-term Legendre recurrence.
GaussLegendreRule gauss_legendre(unsigned n);

/// Integral of fn over [lo, hi] with a fixed 64-node Gauss-Legendre panel.
double integrate_panel(const std::function<double(double)>& fn, double lo, double hi);

/// Adaptive integral of fn over [lo, hi]: 64-node panels, bisected while the
/// two-panel refinement disagrees with the parent beyond rel_tol (bounded depth).
double integrate(const std::function<double(double)>& fn, double lo, double hi,
                 double rel_tol = 1e-12);

/// Chebyshev-Gauss quadrature: (1/pi) * integral_0^pi h(cos t) dt with an
/// n-node midpoint-cosine rule, exact for polynomial h of degree < 2n.
double chebyshev_gauss_mean(const std::function<double(double)>& h, unsigned n);

}  // namespace spectral
