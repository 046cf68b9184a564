#pragma once

#include <cstddef>
#include <vector>

#include "spectral/tridiagonal.hpp"

namespace spectral {

// Gram matrix L = B * B^T of a lower bidiagonal factor. L is symmetric
// tridiagonal, so it fits back into the same storage.
TridiagonalSymmetric gram_tridiagonal(const LowerBidiagonal& factor);

// tr(T^k) for k = 1..k_max, computed by iterating the banded product
// P <- P * T. A power of a tridiagonal matrix has bandwidth k, so only the
// diagonals 0..min(k, n-1) are stored and the cost is O(n * k_max^2).
// Traces are accumulated with compensated summation.
std::vector<double> trace_powers(const TridiagonalSymmetric& matrix,
                                 std::size_t k_max);

// Centered linear statistics X_k = tr(T^k) - n m_k - mu_k for the scaled
// Hermite model, where m_k is the semicircle moment and mu_k the O(1)
// deviation term at inverse temperature beta. Index 0 of the result is X_1.
std::vector<double> centered_hermite(const TridiagonalSymmetric& scaled,
                                     std::size_t k_max, double beta);

// Same for the scaled Laguerre model with Marchenko-Pastur moments.
std::vector<double> centered_laguerre(const TridiagonalSymmetric& scaled_gram,
                                      std::size_t k_max, double beta,
                                      double gamma);

}  // namespace spectral
