#include "spectral/mc.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "spectral/parallel.hpp"
#include "spectral/paths.hpp"
#include "spectral/sturm.hpp"
#include "spectral/summation.hpp"
#include "spectral/theory.hpp"
#include "spectral/traces.hpp"

namespace spectral::mc {
namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<double>(cols, 0.0));
}

// Mean, covariance, and jackknife covariance SEs from the retained samples.
// Everything runs serially in trial order so the report does not depend on
// the worker count used for sampling.
void finalize_statistics(FluctuationReport& report) {
  const std::size_t k = report.kmax;
  const std::size_t t_count = report.trials;

  report.mean.assign(k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    KahanAccumulator acc;
    for (std::size_t t = 0; t < t_count; ++t) acc.add(report.samples[t][a]);
    report.mean[a] = acc.value() / static_cast<double>(t_count);
  }

  report.cov = zeros(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      KahanAccumulator acc;
      for (std::size_t t = 0; t < t_count; ++t)
        acc.add((report.samples[t][a] - report.mean[a]) *
                (report.samples[t][b] - report.mean[b]));
      const double c = acc.value() / static_cast<double>(t_count - 1);
      report.cov[a][b] = c;
      report.cov[b][a] = c;
    }

  report.mean_se.assign(k, 0.0);
  for (std::size_t a = 0; a < k; ++a)
    report.mean_se[a] = std::sqrt(report.cov[a][a] / static_cast<double>(t_count));

  report.cov_se = zeros(k, k);
  if (t_count < 3) return;  // cannot block; SEs stay zero

  const std::size_t blocks = std::min<std::size_t>(100, t_count);
  // Raw per-block sums S1 and S2, combined into leave-one-block-out
  // covariance estimates.
  Matrix s1(blocks, std::vector<double>(k, 0.0));
  std::vector<Matrix> s2(blocks, zeros(k, k));
  std::vector<double> block_size(blocks, 0.0);
  for (std::size_t t = 0; t < t_count; ++t) {
    const std::size_t b = t * blocks / t_count;
    block_size[b] += 1.0;
    for (std::size_t a = 0; a < k; ++a) {
      s1[b][a] += report.samples[t][a];
      for (std::size_t c = a; c < k; ++c)
        s2[b][a][c] += report.samples[t][a] * report.samples[t][c];
    }
  }
  std::vector<double> full_s1(k, 0.0);
  Matrix full_s2 = zeros(k, k);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t a = 0; a < k; ++a) {
      full_s1[a] += s1[b][a];
      for (std::size_t c = a; c < k; ++c) full_s2[a][c] += s2[b][a][c];
    }

  std::vector<Matrix> theta(blocks, zeros(k, k));
  for (std::size_t b = 0; b < blocks; ++b) {
    const double m = static_cast<double>(t_count) - block_size[b];
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t c = a; c < k; ++c) {
        const double sum1a = full_s1[a] - s1[b][a];
        const double sum1c = full_s1[c] - s1[b][c];
        const double sum2 = full_s2[a][c] - s2[b][a][c];
        theta[b][a][c] = (sum2 - sum1a * sum1c / m) / (m - 1.0);
      }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a; c < k; ++c) {
      double mean_theta = 0.0;
      for (std::size_t b = 0; b < blocks; ++b) mean_theta += theta[b][a][c];
      mean_theta /= static_cast<double>(blocks);
      double ss = 0.0;
      for (std::size_t b = 0; b < blocks; ++b) {
        const double d = theta[b][a][c] - mean_theta;
        ss += d * d;
      }
      const double se = std::sqrt(ss * (static_cast<double>(blocks) - 1.0) /
                                  static_cast<double>(blocks));
      report.cov_se[a][c] = se;
      report.cov_se[c][a] = se;
    }
}

void check_run_args(std::size_t kmax, std::size_t trials) {
  if (kmax == 0) throw std::domain_error("run_trials: kmax must be positive");
  if (trials < 2) throw std::domain_error("run_trials: need at least 2 trials");
}

}  // namespace

FluctuationReport run_trials(const EnsembleSpec& spec, std::size_t kmax,
                             std::size_t trials, std::uint64_t seed, unsigned workers) {
  spec.validate();
  check_run_args(kmax, trials);
  if (!spec.scaled)
    throw std::domain_error("run_trials: centered statistics require the scaled ensemble");
  const auto start = std::chrono::steady_clock::now();

  FluctuationReport report;
  report.model = spec;
  report.n = spec.n;
  report.kmax = kmax;
  report.trials = trials;
  report.seed = seed;
  report.samples.assign(trials, std::vector<double>(kmax, 0.0));

  const double beta = spec.beta;
  const double gamma = spec.family == Family::laguerre ? spec.laguerre_gamma() : 0.0;
  parallel_for(trials, workers, [&](std::size_t t) {
    RngStream rng(seed, t);
    if (spec.family == Family::hermite) {
      const TridiagonalSymmetric m = sample_hermite(spec, rng);
      report.samples[t] = centered_hermite(m, kmax, beta);
    } else {
      const LowerBidiagonal b = sample_laguerre_factor(spec, rng);
      report.samples[t] = centered_laguerre(gram_tridiagonal(b), kmax, beta, gamma);
    }
  });

  finalize_statistics(report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

FluctuationReport run_trials_general(const GeneralModelSpec& spec, std::size_t n,
                                     std::size_t kmax, std::size_t trials,
                                     std::uint64_t seed, unsigned workers) {
  spec.validate();
  check_run_args(kmax, trials);
  if (n == 0) throw std::domain_error("run_trials_general: n must be positive");
  const auto start = std::chrono::steady_clock::now();

  // Centering constants once; general_deviation enforces the enumeration
  // order limit.
  std::vector<double> center(kmax, 0.0);
  for (std::size_t i = 1; i <= kmax; ++i)
    center[i - 1] = static_cast<double>(n) * paths::general_moment(static_cast<int>(i), spec) +
                    paths::general_deviation(static_cast<int>(i), spec);

  FluctuationReport report;
  report.model = spec;
  report.n = n;
  report.kmax = kmax;
  report.trials = trials;
  report.seed = seed;
  report.samples.assign(trials, std::vector<double>(kmax, 0.0));

  parallel_for(trials, workers, [&](std::size_t t) {
    RngStream rng(seed, t);
    std::vector<double> traces;
    if (spec.kind == GeneralKind::tridiagonal) {
      traces = trace_powers(sample_general_tridiagonal(spec, n, rng), kmax);
    } else {
      traces = trace_powers(gram_tridiagonal(sample_general_bidiagonal(spec, n, rng)), kmax);
    }
    for (std::size_t i = 0; i < kmax; ++i) report.samples[t][i] = traces[i] - center[i];
  });

  finalize_statistics(report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GaussianityReport gaussianity(const FluctuationReport& report) {
  const std::size_t k = report.kmax;
  const std::size_t t_count = report.trials;
  if (report.samples.size() != t_count || t_count < 2)
    throw std::domain_error("gaussianity: report must retain per-trial samples");

  // Standardize with the sample mean/sd of each coordinate.
  Matrix z = zeros(t_count, k);
  for (std::size_t a = 0; a < k; ++a) {
    const double sd = std::sqrt(report.cov[a][a]);
    if (!(sd > 0.0) || !std::isfinite(sd))
      throw std::domain_error("gaussianity: degenerate variance in coordinate " +
                              std::to_string(a + 1));
    for (std::size_t t = 0; t < t_count; ++t)
      z[t][a] = (report.samples[t][a] - report.mean[a]) / sd;
  }

  auto moment_with_se = [&](auto&& summand) -> std::pair<double, double> {
    KahanAccumulator acc;
    for (std::size_t t = 0; t < t_count; ++t) acc.add(summand(t));
    const double m = acc.value() / static_cast<double>(t_count);
    KahanAccumulator ss;
    for (std::size_t t = 0; t < t_count; ++t) {
      const double d = summand(t) - m;
      ss.add(d * d);
    }
    const double se = std::sqrt(ss.value() / static_cast<double>(t_count - 1) /
                                static_cast<double>(t_count));
    return {m, se};
  };

  GaussianityReport out;
  out.skewness.resize(k);
  out.skewness_se.resize(k);
  out.excess_kurtosis.resize(k);
  out.excess_kurtosis_se.resize(k);
  out.fifth_moment.resize(k);
  out.fifth_moment_se.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    auto [m3, se3] = moment_with_se([&](std::size_t t) {
      const double v = z[t][a];
      return v * v * v;
    });
    out.skewness[a] = m3;
    out.skewness_se[a] = se3;
    auto [m4, se4] = moment_with_se([&](std::size_t t) {
      const double v = z[t][a] * z[t][a];
      return v * v;
    });
    out.excess_kurtosis[a] = m4 - 3.0;
    out.excess_kurtosis_se[a] = se4;
    auto [m5, se5] = moment_with_se([&](std::size_t t) {
      const double v = z[t][a];
      const double v2 = v * v;
      return v2 * v2 * v;
    });
    out.fifth_moment[a] = m5;
    out.fifth_moment_se[a] = se5;
  }

  out.wick_fourth = zeros(k, k);
  out.wick_expected = zeros(k, k);
  out.wick_se = zeros(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      auto [m, se] = moment_with_se(
          [&](std::size_t t) { return z[t][a] * z[t][a] * z[t][b] * z[t][b]; });
      const double rho =
          report.cov[a][b] / std::sqrt(report.cov[a][a] * report.cov[b][b]);
      out.wick_fourth[a][b] = out.wick_fourth[b][a] = m;
      out.wick_expected[a][b] = out.wick_expected[b][a] = 1.0 + 2.0 * rho * rho;
      out.wick_se[a][b] = out.wick_se[b][a] = se;
    }
  return out;
}

double lln_check(const EnsembleSpec& spec, unsigned bins, std::uint64_t seed) {
  spec.validate();
  if (bins == 0) throw std::domain_error("lln_check: need at least one bin");
  if (!spec.scaled)
    throw std::domain_error("lln_check: density comparison requires the scaled ensemble");

  RngStream rng(seed, 0);
  double lo = 0.0, hi = 0.0, gamma = 0.0;
  TridiagonalSymmetric matrix;
  if (spec.family == Family::hermite) {
    lo = -1.0;
    hi = 1.0;
    matrix = sample_hermite(spec, rng);
  } else {
    gamma = spec.laguerre_gamma();
    lo = theory::mp_lower_edge(gamma);
    hi = theory::mp_upper_edge(gamma);
    matrix = gram_tridiagonal(sample_laguerre_factor(spec, rng));
  }

  std::vector<double> edges(bins + 1);
  for (unsigned b = 0; b <= bins; ++b)
    edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  const SpectralHistogram hist = histogram(matrix, std::move(edges));

  const double n = static_cast<double>(spec.n);
  KahanAccumulator l1;
  for (unsigned b = 0; b < bins; ++b) {
    const double expected =
        spec.family == Family::hermite
            ? theory::semicircle_mass(hist.edges[b], hist.edges[b + 1])
            : theory::mp_mass(hist.edges[b], hist.edges[b + 1], gamma);
    l1.add(std::abs(static_cast<double>(hist.counts[b]) / n - expected));
  }
  // The law puts no mass outside [lo, hi]; stray eigenvalues there are pure
  // distance.
  l1.add(static_cast<double>(hist.below_first + hist.above_last) / n);
  return l1.value();
}

std::vector<std::vector<double>> compare_to_theory(
    const FluctuationReport& report, const std::vector<std::vector<double>>& theory,
    double beta) {
  const std::size_t k = report.kmax;
  if (theory.size() != k)
    throw std::invalid_argument("compare_to_theory: dimension mismatch");
  for (const auto& row : theory)
    if (row.size() != k) throw std::invalid_argument("compare_to_theory: dimension mismatch");
  const double scale = 2.0 / beta;
  Matrix z = zeros(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const double diff = report.cov[a][b] - scale * theory[a][b];
      z[a][b] = diff == 0.0 ? 0.0 : diff / report.cov_se[a][b];
    }
  return z;
}

double max_abs_z(const std::vector<std::vector<double>>& z) {
  double best = 0.0;
  for (const auto& row : z)
    for (double v : row) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace spectral::mc
