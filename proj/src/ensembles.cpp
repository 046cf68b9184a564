#include "spectral/ensembles.hpp"

#include <cmath>
#include <stdexcept>

namespace spectral {

double sample_chi(double r, RngStream& rng) { return rng.next_chi(r); }

double EnsembleSpec::laguerre_gamma() const {
  if (gamma) return *gamma;
  if (a) return static_cast<double>(n) * beta / (2.0 * *a);
  throw std::domain_error("EnsembleSpec: Laguerre needs one of {a, gamma}");
}

double EnsembleSpec::laguerre_a() const {
  if (a) return *a;
  if (gamma) return static_cast<double>(n) * beta / (2.0 * *gamma);
  throw std::domain_error("EnsembleSpec: Laguerre needs one of {a, gamma}");
}

void EnsembleSpec::validate() const {
  if (n == 0) throw std::domain_error("EnsembleSpec: n must be positive");
  if (!(beta > 0.0)) throw std::domain_error("EnsembleSpec: beta must be positive");
  if (beta_infinite() && !scaled)
    throw std::domain_error("EnsembleSpec: beta = infinity exists only in the scaled limit");
  if (family == Family::hermite) {
    if (a || gamma)
      throw std::domain_error("EnsembleSpec: {a, gamma} are Laguerre-only parameters");
    return;
  }
  if (a.has_value() == gamma.has_value())
    throw std::domain_error("EnsembleSpec: Laguerre needs exactly one of {a, gamma}");
  if (gamma && !(*gamma > 0.0 && *gamma <= 1.0))
    throw std::domain_error("EnsembleSpec: gamma must lie in (0, 1]");
  if (beta_infinite()) {
    if (!gamma) throw std::domain_error("EnsembleSpec: beta = infinity Laguerre needs gamma");
    return;
  }
  const double shape = laguerre_a();
  if (!(shape > (static_cast<double>(n) - 1.0) * beta / 2.0))
    throw std::domain_error("EnsembleSpec: Laguerre needs a > (n-1) beta / 2");
}

TridiagonalSymmetric sample_hermite(const EnsembleSpec& spec, RngStream& rng) {
  if (spec.family != Family::hermite)
    throw std::domain_error("sample_hermite: spec is not a Hermite ensemble");
  spec.validate();
  if (spec.beta_infinite()) return hermite_beta_infinity(spec.n);
  const std::size_t n = spec.n;
  TridiagonalSymmetric t;
  t.diag.resize(n);
  t.offdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = rng.next_normal();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 1; i < n; ++i)
    t.offdiag[i - 1] = rng.next_chi(static_cast<double>(n - i) * spec.beta) * inv_sqrt2;
  if (spec.scaled) {
    const double s = 1.0 / std::sqrt(2.0 * static_cast<double>(n) * spec.beta);
    for (auto& v : t.diag) v *= s;
    for (auto& v : t.offdiag) v *= s;
  }
  return t;
}

LowerBidiagonal sample_laguerre_factor(const EnsembleSpec& spec, RngStream& rng) {
  if (spec.family != Family::laguerre)
    throw std::domain_error("sample_laguerre_factor: spec is not a Laguerre ensemble");
  spec.validate();
  if (spec.beta_infinite()) return laguerre_beta_infinity(spec.n, spec.laguerre_gamma());
  const std::size_t n = spec.n;
  const double a = spec.laguerre_a();
  LowerBidiagonal b;
  b.diag.resize(n);
  b.subdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i)
    b.diag[i] = rng.next_chi(2.0 * a - static_cast<double>(i) * spec.beta);
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.subdiag[i] = rng.next_chi(static_cast<double>(n - 1 - i) * spec.beta);
  if (spec.scaled) {
    const double s = std::sqrt(spec.laguerre_gamma() / (static_cast<double>(n) * spec.beta));
    for (auto& v : b.diag) v *= s;
    for (auto& v : b.subdiag) v *= s;
  }
  return b;
}

TridiagonalSymmetric hermite_beta_infinity(std::size_t n) {
  if (n == 0) throw std::domain_error("hermite_beta_infinity: n must be positive");
  TridiagonalSymmetric t;
  t.diag.assign(n, 0.0);
  t.offdiag.resize(n - 1);
  const double denom = 2.0 * std::sqrt(static_cast<double>(n));
  for (std::size_t i = 1; i < n; ++i)
    t.offdiag[i - 1] = std::sqrt(static_cast<double>(n - i)) / denom;
  return t;
}

LowerBidiagonal laguerre_beta_infinity(std::size_t n, double gamma) {
  if (n == 0) throw std::domain_error("laguerre_beta_infinity: n must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("laguerre_beta_infinity: gamma must lie in (0, 1]");
  LowerBidiagonal b;
  b.diag.resize(n);
  b.subdiag.resize(n - 1);
  const double s = std::sqrt(gamma / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    b.diag[i] = s * std::sqrt(static_cast<double>(n) / gamma - static_cast<double>(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.subdiag[i] = s * std::sqrt(static_cast<double>(n - 1 - i));
  return b;
}

void GeneralModelSpec::validate() const {
  if (!f || !g) throw std::domain_error("GeneralModelSpec: f and g profiles are required");
  if (!(sigma2 >= 0.0) || !(eta2 >= 0.0))
    throw std::domain_error("GeneralModelSpec: noise variances must be nonnegative");
}

namespace {

double draw_noise(const GeneralModelSpec& spec, RngStream& rng) {
  return spec.noise ? spec.noise(rng) : rng.next_normal();
}

}  // namespace

TridiagonalSymmetric sample_general_tridiagonal(const GeneralModelSpec& spec, std::size_t n,
                                                RngStream& rng) {
  spec.validate();
  if (spec.kind != GeneralKind::tridiagonal)
    throw std::domain_error("sample_general_tridiagonal: spec is bidiagonal");
  if (n == 0) throw std::domain_error("sample_general_tridiagonal: n must be positive");
  const double nn = static_cast<double>(n);
  const double sd = std::sqrt(spec.sigma2 / nn), ed = std::sqrt(spec.eta2 / nn);
  TridiagonalSymmetric t;
  t.diag.resize(n);
  t.offdiag.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    t.diag[i] = spec.f((nn - static_cast<double>(i)) / nn) +
                (sd > 0.0 ? sd * draw_noise(spec, rng) : 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    t.offdiag[i] = spec.g((nn - 1.0 - static_cast<double>(i)) / nn) +
                   (ed > 0.0 ? ed * draw_noise(spec, rng) : 0.0);
  return t;
}

LowerBidiagonal sample_general_bidiagonal(const GeneralModelSpec& spec, std::size_t n,
                                          RngStream& rng) {
  spec.validate();
  if (spec.kind != GeneralKind::bidiagonal)
    throw std::domain_error("sample_general_bidiagonal: spec is tridiagonal");
  if (n == 0) throw std::domain_error("sample_general_bidiagonal: n must be positive");
  const double nn = static_cast<double>(n);
  const double sd = std::sqrt(spec.sigma2 / nn), ed = std::sqrt(spec.eta2 / nn);
  LowerBidiagonal b;
  b.diag.resize(n);
  b.subdiag.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    b.diag[i] = spec.f((nn - static_cast<double>(i)) / nn) +
                (sd > 0.0 ? sd * draw_noise(spec, rng) : 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.subdiag[i] = spec.g((nn - 1.0 - static_cast<double>(i)) / nn) +
                   (ed > 0.0 ? ed * draw_noise(spec, rng) : 0.0);
  return b;
}

GeneralModelSpec hermite_general_model(double beta) {
  if (!(beta > 0.0)) throw std::domain_error("hermite_general_model: beta must be positive");
  GeneralModelSpec spec;
  spec.kind = GeneralKind::tridiagonal;
  spec.f = [](double) { return 0.0; };
  spec.g = [](double x) { return 0.5 * std::sqrt(x); };
  spec.f_prime = [](double) { return 0.0; };
  spec.g_prime = [](double x) { return 0.25 / std::sqrt(x); };
  spec.sigma2 = 1.0 / (2.0 * beta);
  spec.eta2 = 1.0 / (8.0 * beta);
  return spec;
}

GeneralModelSpec laguerre_general_model(double beta, double gamma) {
  if (!(beta > 0.0)) throw std::domain_error("laguerre_general_model: beta must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("laguerre_general_model: gamma must lie in (0, 1]");
  GeneralModelSpec spec;
  spec.kind = GeneralKind::bidiagonal;
  // Squared profiles 1 - gamma + gamma x and gamma x: the Gram matrix of this
  // model is the scaled Laguerre matrix itself, so its moments are the
  // Marchenko-Pastur ones.  Stripping the sqrt(gamma) factors off f and g
  // instead would demand sigma2 = eta2 = 1/(2 beta) and rescale the k-th
  // moment by gamma^-k.
  spec.f = [gamma](double x) { return std::sqrt(1.0 - gamma + gamma * x); };
  spec.g = [gamma](double x) { return std::sqrt(gamma * x); };
  spec.f_prime = [gamma](double x) { return 0.5 * gamma / std::sqrt(1.0 - gamma + gamma * x); };
  spec.g_prime = [gamma](double x) { return 0.5 * gamma / std::sqrt(gamma * x); };
  spec.sigma2 = gamma / (2.0 * beta);
  spec.eta2 = gamma / (2.0 * beta);
  return spec;
}

}  // namespace spectral
