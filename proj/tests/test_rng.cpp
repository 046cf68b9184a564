#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spectral/rng.hpp"

using spectral::RngStream;

namespace {

// Regularized lower incomplete gamma P(a, x) for half-integer a, built from
// the exact P(1/2, x) = erf(sqrt(x)) by the forward recurrence
// P(a+1, x) = P(a, x) - x^a e^-x / Gamma(a+1).  Exact oracle, no quadrature.
double gamma_cdf_half_integer(double a, double x) {
  if (x <= 0.0) return 0.0;
  double aa = std::fmod(a, 1.0) == 0.5 ? 0.5 : 1.0;
  double p = aa == 0.5 ? std::erf(std::sqrt(x)) : -std::expm1(-x);
  while (aa + 1.0 <= a + 1e-12) {
    p -= std::exp(aa * std::log(x) - x - std::lgamma(aa + 1.0));
    aa += 1.0;
  }
  return p;
}

double ks_distance(std::vector<double> sample, double shape) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = gamma_cdf_half_integer(shape, sample[i]);
    worst = std::max(worst, std::abs(cdf - static_cast<double>(i) / n));
    worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - cdf));
  }
  return worst;
}

}  // namespace

TEST_CASE("streams replay bit for bit and differ across ids") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool same_c = true, same_d = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t v = a.next_u64();
    CHECK(v == b.next_u64());
    same_c = same_c && v == c.next_u64();
    same_d = same_d && v == d.next_u64();
  }
  CHECK_FALSE(same_c);
  CHECK_FALSE(same_d);
}

TEST_CASE("normal cache does not break replay under interleaving") {
  RngStream a(9, 0), b(9, 0);
  (void)a.next_normal();  // leaves the polar partner cached
  (void)b.next_normal();
  CHECK(a.next_u64() == b.next_u64());
  CHECK(a.next_normal() == b.next_normal());
}

TEST_CASE("next_double lies in [0,1)") {
  RngStream rng(1, 0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.next_double();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(lo < 0.005);  // coverage of both ends
  CHECK(hi > 0.995);
}

TEST_CASE("normal moments") {
  RngStream rng(1234, 0);
  const int n = 200000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_normal();
    s1 += x;
    s2 += x * x;
    s3 += x * x * x;
    s4 += x * x * x * x;
  }
  const double inv = 1.0 / n;
  // 4-sigma bands on the standard error of each moment estimate
  CHECK(std::abs(s1 * inv) < 4.0 / std::sqrt(n));
  CHECK(std::abs(s2 * inv - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(s3 * inv) < 4.0 * std::sqrt(15.0 / n));
  CHECK(std::abs(s4 * inv - 3.0) < 4.0 * std::sqrt(96.0 / n));
}

TEST_CASE("gamma variates pass a KS test against the exact CDF") {
  const int n = 20000;
  const double critical = 1.63 / std::sqrt(static_cast<double>(n));  // alpha ~ 0.01
  for (double shape : {0.5, 2.0, 3.5}) {
    RngStream rng(77, static_cast<std::uint64_t>(shape * 2));
    std::vector<double> xs(n);
    for (double& x : xs) x = rng.next_gamma(shape);
    CHECK(ks_distance(std::move(xs), shape) < critical);
  }
}

TEST_CASE("chi variates match the exact chi mean and variance") {
  const int n = 100000;
  for (double r : {1.0, 3.0, 17.5, 240.0}) {
    RngStream rng(5150, static_cast<std::uint64_t>(r));
    double s1 = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
      const double x = rng.next_chi(r);
      s1 += x;
      s2 += x * x;
    }
    const double mean = std::sqrt(2.0) * std::exp(std::lgamma(0.5 * (r + 1)) - std::lgamma(0.5 * r));
    const double var = r - mean * mean;
    CHECK(s1 / n == doctest::Approx(mean).epsilon(4.0 * std::sqrt(var / n) / mean));
    CHECK(s2 / n == doctest::Approx(r).epsilon(4.0 * std::sqrt(2.0 * r / n) / r));
  }
}

TEST_CASE("chi rejects nonpositive degrees of freedom") {
  RngStream rng(3, 0);
  CHECK_THROWS(rng.next_chi(0.0));
  CHECK_THROWS(rng.next_chi(-1.0));
}
