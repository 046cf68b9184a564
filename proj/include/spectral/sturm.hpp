#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral/tridiagonal.hpp"

namespace spectral {

/// Number of eigenvalues of T less than or equal to sigma, counted by the
/// Sturm sign recurrence t_i = d_i - sigma - e_{i-1}/t_{i-1} (e = offdiag^2)
/// with an epsilon pivot floor: whenever a pivot underflows below
/// eps * (|d_i| + |sigma| + e_{i-1}) it is replaced by a signed floor of that
/// magnitude.  O(n) time, O(1) space.  Throws std::domain_error on non-finite
/// entries or sigma.
std::size_t sturm_count(const TridiagonalSymmetric& t, double sigma);

/// Same recurrence with the off-diagonal squares supplied directly.
std::size_t sturm_count_squared(std::span<const double> diag,
                                std::span<const double> offdiag_sq, double sigma);

/// Eigenvalues in (lo, hi]: sturm_count(hi) - sturm_count(lo).  Needs lo <= hi.
std::size_t count_in_interval(const TridiagonalSymmetric& t, double lo, double hi);

struct SpectralHistogram {
  std::vector<double> edges;          // strictly increasing, >= 2 entries
  std::vector<std::size_t> counts;    // per bin (edges[j], edges[j+1]]
  std::size_t below_first = 0;        // eigenvalues <= edges.front()
  std::size_t above_last = 0;         // eigenvalues > edges.back()
  std::size_t n = 0;
};

/// Bin counts via one Sturm pass per edge; counts always total n.
SpectralHistogram histogram(const TridiagonalSymmetric& t, std::vector<double> edges);

/// Closed-form count deviation over [lo, hi] inside [-1, 1] for the scaled
/// Hermite limit: (asin(hi) - asin(lo)) / (2 pi), minus 1/4 for each support
/// endpoint +-1 contained in the closed interval.
double theoretical_count_deviation(double lo, double hi);

struct DeviationReport {
  double lo = 0.0, hi = 0.0;
  std::size_t n_start = 0;
  std::vector<double> per_n;      // deviation at n = n_start + index
  double mean_deviation = 0.0;
  double theoretical = 0.0;
};

/// For n = n_start .. n_start + n_count - 1, counts eigenvalues of the
/// beta = infinity Hermite matrix in (lo, hi] (off-diagonal squares generated
/// on the fly; no matrix is materialized) and subtracts n times the
/// semicircle mass of the interval.
DeviationReport deviation_experiment(std::size_t n_start, std::size_t n_count, double lo,
                                     double hi, unsigned workers = 0);

}  // namespace spectral
