#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>

#include "spectral/family.hpp"
#include "spectral/rng.hpp"
#include "spectral/tridiagonal.hpp"

namespace spectral {

/// Chi variate with r > 0 degrees of freedom (module-level convenience).
double sample_chi(double r, RngStream& rng);

/// Parameters of a beta-Hermite or beta-Laguerre tridiagonal/bidiagonal model.
///
/// Hermite (unscaled): diag ~ N(0,1), offdiag_i = chi_{(n-i) beta} / sqrt(2);
/// scaled divides by sqrt(2 n beta).
/// Laguerre factor (unscaled): diag_i = chi_{2a-(i-1) beta},
/// subdiag_i = chi_{(n-i) beta}; scaled multiplies by sqrt(gamma/(n beta)).
/// For Laguerre exactly one of {a, gamma} is supplied; the other follows from
/// a = n beta / (2 gamma).  beta = +infinity dispatches to the deterministic
/// limiting matrices and requires scaled = true.
struct EnsembleSpec {
  Family family = Family::hermite;
  double beta = 2.0;
  std::size_t n = 1;
  std::optional<double> a;
  std::optional<double> gamma;
  bool scaled = true;

  bool beta_infinite() const { return std::isinf(beta); }
  double laguerre_gamma() const;
  double laguerre_a() const;
  void validate() const;
};

/// Draw order: all diagonal entries first, then the off-diagonal ones, so a
/// replayed stream reproduces the matrix bit for bit.
TridiagonalSymmetric sample_hermite(const EnsembleSpec& spec, RngStream& rng);
LowerBidiagonal sample_laguerre_factor(const EnsembleSpec& spec, RngStream& rng);

/// beta = infinity Hermite limit: zero diagonal,
/// offdiag_i = sqrt(n-i) / (2 sqrt(n)); eigenvalues are the Hermite
/// polynomial roots scaled by 1/sqrt(2n).
TridiagonalSymmetric hermite_beta_infinity(std::size_t n);

/// beta = infinity Laguerre factor: sqrt(gamma/n) * bidiag(sqrt(n/gamma - i + 1);
/// sqrt(n - i)); the Gram matrix eigenvalues are scaled Laguerre polynomial
/// roots.
LowerBidiagonal laguerre_beta_infinity(std::size_t n, double gamma);

// ---------------------------------------------------------------------------
// Generalized profile models M = F + R / sqrt(n)
// ---------------------------------------------------------------------------

enum class GeneralKind { tridiagonal, bidiagonal };

/// Deterministic profiles f (diagonal) and g (off/sub-diagonal) on [0, 1]
/// plus independent centered noise of variance sigma2 (diagonal) and eta2
/// (off-diagonal).  Row i of n carries f((n-i+1)/n); the off-diagonal entry
/// below it carries g((n-i)/n).  `noise` draws a unit-variance variate and
/// defaults to a standard normal.  f_prime / g_prime are optional analytic
/// derivatives; when absent the moment machinery falls back to high-order
/// finite differences of the squared profiles.
struct GeneralModelSpec {
  GeneralKind kind = GeneralKind::tridiagonal;
  std::function<double(double)> f;
  std::function<double(double)> g;
  std::function<double(double)> f_prime;
  std::function<double(double)> g_prime;
  double sigma2 = 0.0;
  double eta2 = 0.0;
  std::function<double(RngStream&)> noise;

  void validate() const;
};

TridiagonalSymmetric sample_general_tridiagonal(const GeneralModelSpec& spec, std::size_t n,
                                                RngStream& rng);
LowerBidiagonal sample_general_bidiagonal(const GeneralModelSpec& spec, std::size_t n,
                                          RngStream& rng);

/// Hermite scaling limit as a profile model: f = 0, g = sqrt(x)/2,
/// sigma2 = 1/(2 beta), eta2 = 1/(8 beta).
GeneralModelSpec hermite_general_model(double beta);

/// Laguerre scaling limit as a profile model: f = sqrt(1 - gamma + gamma x),
/// g = sqrt(gamma x), sigma2 = eta2 = gamma/(2 beta).  The Gram matrix of the
/// sampled factor matches the scaled beta-Laguerre ensemble, so the model
/// moments are the Marchenko-Pastur ones.
GeneralModelSpec laguerre_general_model(double beta, double gamma);

}  // namespace spectral
