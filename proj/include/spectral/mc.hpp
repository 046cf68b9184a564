#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "spectral/ensembles.hpp"

namespace spectral::mc {

// Means and covariances of the centered trace statistics X_1..X_kmax over
// independent trials.  Per-trial rows are retained in `samples` so the
// Gaussianity diagnostics can run on the same data.  cov_se comes from a
// block jackknife and collapses to zero when there are too few trials to
// block (fewer than 3).
struct FluctuationReport {
  std::variant<EnsembleSpec, GeneralModelSpec> model;
  std::size_t n = 0;
  std::size_t kmax = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> mean;
  std::vector<double> mean_se;
  std::vector<std::vector<double>> cov;
  std::vector<std::vector<double>> cov_se;
  std::vector<std::vector<double>> samples;  // trials x kmax
  double wall_seconds = 0.0;
};

// Per-coordinate normality diagnostics on standardized samples plus the
// Wick-pairing check on fourth mixed moments: for jointly Gaussian
// coordinates E[z_a^2 z_b^2] = 1 + 2 rho_ab^2.  SEs are empirical
// (sample standard deviation of the moment summand / sqrt(trials)).
struct GaussianityReport {
  std::vector<double> skewness, skewness_se;
  std::vector<double> excess_kurtosis, excess_kurtosis_se;
  std::vector<double> fifth_moment, fifth_moment_se;
  std::vector<std::vector<double>> wick_fourth;    // E[z_a^2 z_b^2] sample
  std::vector<std::vector<double>> wick_expected;  // 1 + 2 rho^2
  std::vector<std::vector<double>> wick_se;
};

// Samples `trials` matrices on per-trial RNG substreams (stream id = trial
// index) and reduces in trial order, so the report is bit-identical for any
// worker count.  The ensemble must be scaled; beta may be infinite, in which
// case every trial is the same deterministic matrix.
FluctuationReport run_trials(const EnsembleSpec& spec, std::size_t kmax,
                             std::size_t trials, std::uint64_t seed,
                             unsigned workers = 0);

// Same harness for the profile models; centering uses the path-expansion
// moments m_k and deviation mu_k, so kmax is bounded by the enumeration
// limits (12 tridiagonal, 10 bidiagonal).
FluctuationReport run_trials_general(const GeneralModelSpec& spec, std::size_t n,
                                     std::size_t kmax, std::size_t trials,
                                     std::uint64_t seed, unsigned workers = 0);

GaussianityReport gaussianity(const FluctuationReport& report);

// L1 distance between the normalized Sturm histogram of one sampled spectrum
// (bins equal-width across the limiting support) and the limiting law's
// per-bin mass; eigenvalues outside the support count toward the distance.
double lln_check(const EnsembleSpec& spec, unsigned bins, std::uint64_t seed);

// Entrywise z-scores (cov - (2/beta) * theory) / cov_se.
std::vector<std::vector<double>> compare_to_theory(
    const FluctuationReport& report, const std::vector<std::vector<double>>& theory,
    double beta);

double max_abs_z(const std::vector<std::vector<double>>& z);

}  // namespace spectral::mc
