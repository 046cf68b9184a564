#pragma once

#include <cstddef>
#include <vector>

namespace spectral {

/// Symmetric tridiagonal matrix stored as its diagonal (n entries) and
/// first off-diagonal (n-1 entries).
struct TridiagonalSymmetric {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

/// Lower bidiagonal matrix stored as its diagonal (n entries) and
/// subdiagonal (n-1 entries).  Entry (i+1, i) is subdiag[i].
struct LowerBidiagonal {
  std::vector<double> diag;
  std::vector<double> subdiag;

  std::size_t size() const { return diag.size(); }
};

}  // namespace spectral
