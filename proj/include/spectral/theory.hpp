#pragma once

#include "spectral/family.hpp"

namespace spectral::theory {

// ---------------------------------------------------------------------------
// Limit-law moments
// ---------------------------------------------------------------------------

/// k-th moment of the semicircle law on [-1, 1] with density (2/pi)sqrt(1-x^2):
/// C(k, k/2) / ((k/2 + 1) 4^(k/2)) for even k, 0 for odd k.
double semicircle_moment(unsigned k);

/// k-th moment of the Marchenko-Pastur law with ratio gamma in (0, 1],
/// normalized to mean 1: sum_r Narayana(k, r+1) gamma^r.
double mp_moment(unsigned k, double gamma);

// ---------------------------------------------------------------------------
// Deviation-measure moments (the O(1) correction laws)
// ---------------------------------------------------------------------------

/// Moment of mu_H = (1/4)(delta_1 + delta_-1) - arcsine part:
/// 1/2 - C(k, k/2)/2^(k+1) for even k, 0 for odd k.
double dev_moment_hermite(unsigned k);

/// Moment of mu_L^gamma = (1/4)(delta_a + delta_b) - arcsine part on [a, b],
/// a = (1-sqrt(gamma))^2, b = (1+sqrt(gamma))^2.  Computed from an exact
/// rational polynomial in gamma (power-sum recurrence for a^k + b^k plus
/// Wallis factors for the arcsine moments), so small orders are exact:
/// k=1 -> 0, k=2 -> gamma, k=3 -> 3 gamma (gamma + 1).
double dev_moment_laguerre(unsigned k, double gamma);

/// Same moment computed by Chebyshev-Gauss quadrature against the arcsine
/// weight; used as an independent cross-check of the rational expansion.
double dev_moment_laguerre_quadrature(unsigned k, double gamma);

// ---------------------------------------------------------------------------
// Limiting covariances of the centered trace vector Y (X_k => sqrt(2/beta) Y_k)
// ---------------------------------------------------------------------------

/// Hermite limit covariance Cov(Y_i, Y_j); zero for mixed parity.
double cov_hermite(unsigned i, unsigned j);

/// Diagonal of the Hermite covariance in its standalone closed form
/// (k/2^(2k+2) C(k,k/2)^2 for even k, k/2^(2k) C(k-1,(k-1)/2)^2 for odd k).
double sigma_k_squared(unsigned k);

/// Laguerre limit covariance exactly as printed (T_D + T_S with the inner
/// summation index disambiguated).  Known to disagree with sampling: at
/// i = j = 1 it yields gamma + gamma^2/2 while the exact chi-square identity
/// gives gamma.  Kept verbatim for documentation; downstream comparisons use
/// Monte Carlo estimates plus the exact (1,1) identity instead.
double cov_laguerre_printed(unsigned i, unsigned j, double gamma);
double cov_laguerre_td(unsigned i, unsigned j, double gamma);
double cov_laguerre_ts(unsigned i, unsigned j, double gamma);

/// Exact all-n identity Var(tr of scaled Laguerre) = 2 gamma / beta,
/// i.e. Cov(Y_1, Y_1) = gamma.
double cov_laguerre_exact_11(double gamma);

// ---------------------------------------------------------------------------
// Finite-n mean trace references, (1/n) E[tr M^k] as a polynomial in 1/n
// with alpha = 2/beta
// ---------------------------------------------------------------------------

/// Supported orders: Hermite k in {2, 4, 6} (odd k returns 0 by symmetry),
/// Laguerre k in {1, 2, 3}.  Anything else throws std::invalid_argument.
double finite_n_reference(Family family, unsigned k, double n, double alpha, double gamma = 0.0);

/// The O(1/n) coefficient of the same polynomial; equals
/// (alpha - 1) * dev_moment for every supported order.
double finite_n_deviation_coefficient(Family family, unsigned k, double alpha,
                                      double gamma = 0.0);

// ---------------------------------------------------------------------------
// Limit laws (densities, CDFs, interval masses) and support edges
// ---------------------------------------------------------------------------

double semicircle_density(double x);
double semicircle_cdf(double x);
/// Semicircle mass of [lo, hi] in closed form (arguments clamped to [-1, 1]).
double semicircle_mass(double lo, double hi);

double mp_lower_edge(double gamma);  // (1 - sqrt(gamma))^2
double mp_upper_edge(double gamma);  // (1 + sqrt(gamma))^2
double mp_density(double x, double gamma);
/// Marchenko-Pastur mass of [lo, hi] via the angular substitution
/// x = c + d cos(theta) (smooth integrand, Gauss-Legendre panels).
double mp_mass(double lo, double hi, double gamma);

// ---------------------------------------------------------------------------
// Stieltjes transforms of the limit laws with their 1/n corrections:
// m(n, x) ~ m0(x) - m1(x)/n.  Branches are chosen so m0 ~ 1/x at infinity
// on the right of the support and by sign continuation on the left.
// ---------------------------------------------------------------------------

/// order 0 -> m0(x) = 2(x - sqrt(x^2-1)), order 1 -> m1(x); requires |x| > 1.
double stieltjes_hermite(int order, double x);
double stieltjes_hermite_m0_prime(double x);

/// order 0 -> m0, order 1 -> m1 for the Laguerre law with ratio gamma;
/// requires x outside [a, b] and x != 0.
double stieltjes_laguerre(int order, double x, double gamma);
double stieltjes_laguerre_m0_prime(double x, double gamma);

}  // namespace spectral::theory
