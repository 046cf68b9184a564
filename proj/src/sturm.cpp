#include "spectral/sturm.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spectral/parallel.hpp"
#include "spectral/summation.hpp"
#include "spectral/theory.hpp"

namespace spectral {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

void check_finite(std::span<const double> xs, const char* who) {
  for (double x : xs)
    if (!std::isfinite(x)) throw std::domain_error(std::string(who) + ": non-finite entry");
}

inline double guarded(double t, double floor_mag) {
  // An exact zero pivot means sigma hits an eigenvalue of the leading minor;
  // closed (<=) counting continues as if sigma were approached from above.
  if (t == 0.0) return -floor_mag;
  if (std::abs(t) < floor_mag) return std::signbit(t) ? -floor_mag : floor_mag;
  return t;
}

}  // namespace

std::size_t sturm_count_squared(std::span<const double> diag,
                                std::span<const double> offdiag_sq, double sigma) {
  if (!std::isfinite(sigma)) throw std::domain_error("sturm_count: non-finite sigma");
  if (diag.empty()) throw std::domain_error("sturm_count: empty matrix");
  check_finite(diag, "sturm_count");
  check_finite(offdiag_sq, "sturm_count");
  if (offdiag_sq.size() + 1 != diag.size())
    throw std::domain_error("sturm_count: off-diagonal length must be n - 1");
  const std::size_t n = diag.size();
  std::size_t count = 0;
  double t = diag[0] - sigma;
  if (t <= 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = offdiag_sq[i - 1];
    const double floor_mag = kEps * (std::abs(diag[i]) + std::abs(sigma) + e) + kTiny;
    t = diag[i] - sigma - e / guarded(t, floor_mag);
    if (t <= 0.0) ++count;
  }
  return count;
}

std::size_t sturm_count(const TridiagonalSymmetric& t, double sigma) {
  if (!std::isfinite(sigma)) throw std::domain_error("sturm_count: non-finite sigma");
  check_finite(t.diag, "sturm_count");
  check_finite(t.offdiag, "sturm_count");
  if (t.diag.empty()) throw std::domain_error("sturm_count: empty matrix");
  if (t.offdiag.size() + 1 != t.diag.size())
    throw std::domain_error("sturm_count: off-diagonal length must be n - 1");
  const std::size_t n = t.size();
  std::size_t count = 0;
  double p = t.diag[0] - sigma;
  if (p <= 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = t.offdiag[i - 1] * t.offdiag[i - 1];
    const double floor_mag = kEps * (std::abs(t.diag[i]) + std::abs(sigma) + e) + kTiny;
    p = t.diag[i] - sigma - e / guarded(p, floor_mag);
    if (p <= 0.0) ++count;
  }
  return count;
}

std::size_t count_in_interval(const TridiagonalSymmetric& t, double lo, double hi) {
  if (!(lo <= hi)) throw std::domain_error("count_in_interval: lo must not exceed hi");
  return sturm_count(t, hi) - sturm_count(t, lo);
}

SpectralHistogram histogram(const TridiagonalSymmetric& t, std::vector<double> edges) {
  if (edges.size() < 2) throw std::domain_error("histogram: need at least two edges");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i - 1] < edges[i]))
      throw std::domain_error("histogram: edges must be strictly increasing");
  SpectralHistogram h;
  h.n = t.size();
  std::vector<std::size_t> cumulative(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) cumulative[i] = sturm_count(t, edges[i]);
  h.counts.resize(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    h.counts[i] = cumulative[i + 1] - cumulative[i];
  h.below_first = cumulative.front();
  h.above_last = h.n - cumulative.back();
  h.edges = std::move(edges);
  return h;
}

double theoretical_count_deviation(double lo, double hi) {
  if (!(lo <= hi)) throw std::domain_error("theoretical_count_deviation: lo must not exceed hi");
  if (!(lo >= -1.0 && hi <= 1.0))
    throw std::domain_error("theoretical_count_deviation: interval must lie in [-1, 1]");
  double v = (std::asin(hi) - std::asin(lo)) / (2.0 * std::numbers::pi);
  if (lo <= 1.0 && 1.0 <= hi) v -= 0.25;
  if (lo <= -1.0 && -1.0 <= hi) v -= 0.25;
  return v;
}

namespace {

// Sturm count for the beta = infinity Hermite matrix without materializing
// it: diag = 0, offdiag_sq[i-1] = (n - i) / (4n).
std::size_t hermite_infinity_count(std::size_t n, double sigma) {
  const double inv4n = 1.0 / (4.0 * static_cast<double>(n));
  std::size_t count = 0;
  double t = -sigma;
  if (t <= 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = static_cast<double>(n - i) * inv4n;
    const double floor_mag = kEps * (std::abs(sigma) + e) + kTiny;
    t = -sigma - e / guarded(t, floor_mag);
    if (t <= 0.0) ++count;
  }
  return count;
}

}  // namespace

DeviationReport deviation_experiment(std::size_t n_start, std::size_t n_count, double lo,
                                     double hi, unsigned workers) {
  if (n_start == 0 || n_count == 0)
    throw std::domain_error("deviation_experiment: n_start and n_count must be positive");
  DeviationReport report;
  report.lo = lo;
  report.hi = hi;
  report.n_start = n_start;
  report.theoretical = theoretical_count_deviation(lo, hi);
  const double mass = theory::semicircle_mass(lo, hi);
  report.per_n.resize(n_count);
  parallel_for(n_count, workers, [&](std::size_t idx) {
    const std::size_t n = n_start + idx;
    const std::size_t inside = hermite_infinity_count(n, hi) - hermite_infinity_count(n, lo);
    report.per_n[idx] = static_cast<double>(inside) - static_cast<double>(n) * mass;
  });
  KahanAccumulator acc;
  for (double d : report.per_n) acc.add(d);
  report.mean_deviation = acc.value() / static_cast<double>(n_count);
  return report;
}

}  // namespace spectral
