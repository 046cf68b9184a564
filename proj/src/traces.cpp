#include "spectral/traces.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spectral/summation.hpp"
#include "spectral/theory.hpp"

namespace spectral {

TridiagonalSymmetric gram_tridiagonal(const LowerBidiagonal& factor) {
  const std::size_t n = factor.size();
  if (n == 0) throw std::domain_error("gram_tridiagonal: empty factor");
  if (factor.subdiag.size() + 1 != n)
    throw std::invalid_argument("gram_tridiagonal: subdiagonal length mismatch");

  TridiagonalSymmetric gram;
  gram.diag.resize(n);
  gram.offdiag.resize(n - 1);
  // Row i of B is (s_{i-1}, b_i), so (B B^T)_{ii} = b_i^2 + s_{i-1}^2 and
  // (B B^T)_{i,i+1} = s_i b_i.
  gram.diag[0] = factor.diag[0] * factor.diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double b = factor.diag[i];
    const double s = factor.subdiag[i - 1];
    gram.diag[i] = b * b + s * s;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    gram.offdiag[i] = factor.subdiag[i] * factor.diag[i];
  return gram;
}

std::vector<double> trace_powers(const TridiagonalSymmetric& matrix,
                                 std::size_t k_max) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::domain_error("trace_powers: empty matrix");
  if (matrix.offdiag.size() + 1 != n)
    throw std::invalid_argument("trace_powers: off-diagonal length mismatch");
  if (k_max == 0) return {};

  const std::vector<double>& d = matrix.diag;
  const std::vector<double>& e = matrix.offdiag;

  // bands[b][i] holds (T^k)_{i,i+b}; symmetry supplies the lower triangle.
  // T^k has bandwidth k, capped at n-1 once the power fills the matrix.
  const std::size_t max_band = std::min(k_max, n - 1);
  std::vector<std::vector<double>> bands(max_band + 1);
  std::vector<std::vector<double>> next(max_band + 1);
  for (std::size_t b = 0; b <= max_band; ++b) {
    bands[b].assign(n - b, 0.0);
    next[b].assign(n - b, 0.0);
  }
  bands[0] = d;  // T^1
  if (max_band >= 1) bands[1] = e;

  std::vector<double> traces(k_max);
  traces[0] = kahan_sum(d);

  auto band_entry = [&](std::size_t power_band, std::size_t i,
                        std::ptrdiff_t b) -> double {
    // (T^k)_{i,i+b} with negative b folded by symmetry; zero outside the band.
    std::size_t row = i;
    std::size_t col = i + static_cast<std::size_t>(b >= 0 ? b : 0);
    if (b < 0) {
      row = i - static_cast<std::size_t>(-b);
      col = i;
    }
    const std::size_t width = col - row;
    if (width > power_band || width > max_band) return 0.0;
    return bands[width][row];
  };

  for (std::size_t k = 2; k <= k_max; ++k) {
    const std::size_t prev_band = std::min(k - 1, n - 1);
    const std::size_t cur_band = std::min(k, n - 1);
    // (P T)_{i,i+b} = P_{i,i+b-1} e_{i+b-1} + P_{i,i+b} d_{i+b} + P_{i,i+b+1} e_{i+b}
    for (std::size_t b = 0; b <= cur_band; ++b) {
      const std::size_t rows = n - b;
      for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t j = i + b;
        double sum = band_entry(prev_band, i, static_cast<std::ptrdiff_t>(b)) * d[j];
        if (j >= 1)
          sum += band_entry(prev_band, i, static_cast<std::ptrdiff_t>(b) - 1) *
                 e[j - 1];
        if (j + 1 < n)
          sum += band_entry(prev_band, i, static_cast<std::ptrdiff_t>(b) + 1) * e[j];
        next[b][i] = sum;
      }
    }
    for (std::size_t b = 0; b <= cur_band; ++b) bands[b].swap(next[b]);
    traces[k - 1] = kahan_sum(bands[0]);
  }
  return traces;
}

std::vector<double> centered_hermite(const TridiagonalSymmetric& scaled,
                                     std::size_t k_max, double beta) {
  if (beta <= 0.0) throw std::domain_error("centered_hermite: beta must be positive");
  const double n = static_cast<double>(scaled.size());
  const double alpha = 2.0 / beta;
  std::vector<double> stats = trace_powers(scaled, k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double mean = n * theory::semicircle_moment(k) +
                        (alpha - 1.0) * theory::dev_moment_hermite(k);
    stats[k - 1] -= mean;
  }
  return stats;
}

std::vector<double> centered_laguerre(const TridiagonalSymmetric& scaled_gram,
                                      std::size_t k_max, double beta,
                                      double gamma) {
  if (beta <= 0.0) throw std::domain_error("centered_laguerre: beta must be positive");
  const double n = static_cast<double>(scaled_gram.size());
  const double alpha = 2.0 / beta;
  std::vector<double> stats = trace_powers(scaled_gram, k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double mean = n * theory::mp_moment(k, gamma) +
                        (alpha - 1.0) * theory::dev_moment_laguerre(k, gamma);
    stats[k - 1] -= mean;
  }
  return stats;
}

}  // namespace spectral
