#include "spectral/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spectral/quadrature.hpp"
#include "spectral/rational.hpp"

namespace spectral::theory {

namespace {

using Poly = std::vector<Rational>;  // coefficients in ascending powers of gamma

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  Poly out = a;
  for (auto& v : out) v *= c;
  return out;
}

double poly_eval(const Poly& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].to_double();
  return acc;
}

void check_order(unsigned k, unsigned limit, const char* who) {
  if (k > limit) throw std::invalid_argument(std::string(who) + ": order too large");
}

// (j-1)!!/j!! for even j, i.e. the arcsine moment E[cos^j] = C(j, j/2)/2^j.
Rational wallis(unsigned j) {
  Rational two_j(1);
  for (unsigned i = 0; i < j; ++i) two_j *= Rational(2);
  return binomial(static_cast<int>(j), static_cast<int>(j / 2)) / two_j;
}

// Exact coefficients (in gamma) of the k-th moment of mu_L^gamma.
// a = (1-sqrt(g))^2 and b = (1+sqrt(g))^2 enter only through the symmetric
// combinations a+b = 2(1+g), ab = (g-1)^2, and even powers of b-a = 4 sqrt(g),
// so the result is a polynomial in g with rational coefficients.
Poly dev_laguerre_poly(unsigned k) {
  const Poly one_plus_g{Rational(1), Rational(1)};
  // Power sums p_m = a^m + b^m via p_m = 2(1+g) p_{m-1} - (g-1)^2 p_{m-2}.
  Poly p_prev{Rational(2)};                       // p_0
  Poly p_cur{Rational(2), Rational(2)};           // p_1
  const Poly ab{Rational(1), Rational(-2), Rational(1)};
  if (k == 0) p_cur = p_prev;
  for (unsigned m = 2; m <= k; ++m) {
    Poly next = poly_add(poly_mul(poly_scale(one_plus_g, Rational(2)), p_cur),
                         poly_scale(poly_mul(ab, p_prev), Rational(-1)));
    p_prev = p_cur;
    p_cur = next;
  }
  Poly result = poly_scale(p_cur, Rational(1, 4));
  // Arcsine part: (1/2) sum_{j even} C(k,j) c^(k-j) d^j W(j) with c = 1+g,
  // d^j = (4g)^(j/2).
  for (unsigned j = 0; j <= k; j += 2) {
    Poly term{Rational(1)};
    for (unsigned i = 0; i < k - j; ++i) term = poly_mul(term, one_plus_g);
    Rational coeff = binomial(static_cast<int>(k), static_cast<int>(j)) * wallis(j) *
                     Rational(-1, 2);
    for (unsigned i = 0; i < j / 2; ++i) coeff *= Rational(4);
    Poly dpow(j / 2 + 1, Rational(0));
    dpow[j / 2] = coeff;
    result = poly_add(result, poly_mul(term, dpow));
  }
  return result;
}

void check_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw std::domain_error(std::string(who) + ": gamma must lie in (0, 1]");
}

}  // namespace

double semicircle_moment(unsigned k) {
  check_order(k, 30, "semicircle_moment");
  if (k % 2 == 1) return 0.0;
  const int h = static_cast<int>(k / 2);
  Rational four_h(1);
  for (int i = 0; i < h; ++i) four_h *= Rational(4);
  return (binomial(static_cast<int>(k), h) / (Rational(h + 1) * four_h)).to_double();
}

double mp_moment(unsigned k, double gamma) {
  check_order(k, 30, "mp_moment");
  check_gamma(gamma, "mp_moment");
  if (k == 0) return 1.0;
  // Horner over the Narayana coefficients N(k, r+1) = C(k,r) C(k-1,r)/(r+1).
  double acc = 0.0;
  for (unsigned r = k; r-- > 0;) {
    const Rational narayana = binomial(static_cast<int>(k), static_cast<int>(r)) *
                              binomial(static_cast<int>(k) - 1, static_cast<int>(r)) /
                              Rational(static_cast<int>(r) + 1);
    acc = acc * gamma + narayana.to_double();
  }
  return acc;
}

double dev_moment_hermite(unsigned k) {
  check_order(k, 30, "dev_moment_hermite");
  if (k % 2 == 1) return 0.0;
  Rational two_k1(1);
  for (unsigned i = 0; i < k + 1; ++i) two_k1 *= Rational(2);
  return (Rational(1, 2) - binomial(static_cast<int>(k), static_cast<int>(k / 2)) / two_k1)
      .to_double();
}

double dev_moment_laguerre(unsigned k, double gamma) {
  check_order(k, 30, "dev_moment_laguerre");
  check_gamma(gamma, "dev_moment_laguerre");
  return poly_eval(dev_laguerre_poly(k), gamma);
}

double dev_moment_laguerre_quadrature(unsigned k, double gamma) {
  check_order(k, 30, "dev_moment_laguerre_quadrature");
  check_gamma(gamma, "dev_moment_laguerre_quadrature");
  const double a = mp_lower_edge(gamma), b = mp_upper_edge(gamma);
  const double c = 0.5 * (a + b), d = 0.5 * (b - a);
  const double arcsine_part =
      chebyshev_gauss_mean([&](double t) { return std::pow(c + d * t, k); }, k / 2 + 2);
  return 0.25 * (std::pow(a, k) + std::pow(b, k)) - 0.5 * arcsine_part;
}

double cov_hermite(unsigned i, unsigned j) {
  if (i == 0 || j == 0) throw std::invalid_argument("cov_hermite: orders start at 1");
  check_order(i, 30, "cov_hermite");
  check_order(j, 30, "cov_hermite");
  if ((i + j) % 2 == 1) return 0.0;
  const Rational harmonic = Rational(2) * Rational(static_cast<int>(i)) *
                            Rational(static_cast<int>(j)) /
                            Rational(static_cast<int>(i + j));
  Rational pow2(1);
  for (unsigned t = 0; t < i + j; ++t) pow2 *= Rational(2);
  if (i % 2 == 1) {
    return (harmonic / pow2 *
            binomial(static_cast<int>(i) - 1, (static_cast<int>(i) - 1) / 2) *
            binomial(static_cast<int>(j) - 1, (static_cast<int>(j) - 1) / 2))
        .to_double();
  }
  return (harmonic / (pow2 * Rational(4)) *
          binomial(static_cast<int>(i), static_cast<int>(i) / 2) *
          binomial(static_cast<int>(j), static_cast<int>(j) / 2))
      .to_double();
}

double sigma_k_squared(unsigned k) {
  if (k == 0) throw std::invalid_argument("sigma_k_squared: order starts at 1");
  check_order(k, 30, "sigma_k_squared");
  Rational pow2(1);
  for (unsigned t = 0; t < 2 * k; ++t) pow2 *= Rational(2);
  if (k % 2 == 1) {
    const Rational c = binomial(static_cast<int>(k) - 1, (static_cast<int>(k) - 1) / 2);
    return (Rational(static_cast<int>(k)) * c * c / pow2).to_double();
  }
  const Rational c = binomial(static_cast<int>(k), static_cast<int>(k) / 2);
  return (Rational(static_cast<int>(k)) * c * c / (pow2 * Rational(4))).to_double();
}

double cov_laguerre_td(unsigned i, unsigned j, double gamma) {
  if (i == 0 || j == 0) throw std::invalid_argument("cov_laguerre_td: orders start at 1");
  check_order(i + j, 24, "cov_laguerre_td");
  check_gamma(gamma, "cov_laguerre_td");
  const int I = static_cast<int>(i), J = static_cast<int>(j);
  double total = 0.0;
  for (int q = 1; q <= I + J - 1; ++q) {
    double inner = 0.0;
    for (int l = q + 1; l <= I + J; ++l) {
      Rational pairs(0);
      for (int r = 1; r <= I; ++r) {
        const int s = l - r;
        if (s < 1 || s > J) continue;
        pairs += Rational(r) * Rational(s) * binomial(I, r) * binomial(I, r) * binomial(J, s) *
                 binomial(J, s);
      }
      inner += (l % 2 == 0 ? 1.0 : -1.0) * (pairs / binomial(I + J - 1, l - 1)).to_double();
    }
    const double sign = (q % 2 == 1) ? 1.0 : -1.0;
    total += sign * std::pow(gamma, I + J - q) *
             (binomial(I + J, q) / Rational(I + J)).to_double() * inner;
  }
  return total;
}

double cov_laguerre_ts(unsigned i, unsigned j, double gamma) {
  if (i == 0 || j == 0) throw std::invalid_argument("cov_laguerre_ts: orders start at 1");
  check_order(i + j, 24, "cov_laguerre_ts");
  check_gamma(gamma, "cov_laguerre_ts");
  const int I = static_cast<int>(i), J = static_cast<int>(j);
  double total = 0.0;
  for (int q = 0; q <= I + J - 2; ++q) {
    double inner = 0.0;
    for (int l = q; l <= I + J - 2; ++l) {
      Rational pairs(0);
      for (int r = 0; r <= I - 1; ++r) {
        const int s = l - r;
        if (s < 0 || s > J - 1) continue;
        pairs += Rational(I - r) * Rational(J - s) * binomial(I, r) * binomial(I, r) *
                 binomial(J, s) * binomial(J, s);
      }
      inner += (l % 2 == 0 ? 1.0 : -1.0) * (pairs / binomial(I + J - 1, l)).to_double();
    }
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    total += sign * std::pow(gamma, I + J - q) *
             (binomial(I + J, q) / Rational(I + J)).to_double() * inner;
  }
  return total;
}

double cov_laguerre_printed(unsigned i, unsigned j, double gamma) {
  return cov_laguerre_td(i, j, gamma) + cov_laguerre_ts(i, j, gamma);
}

double cov_laguerre_exact_11(double gamma) {
  check_gamma(gamma, "cov_laguerre_exact_11");
  return gamma;
}

namespace {

// (1/n) E[tr] coefficient tables in ascending powers of 1/n; each coefficient
// is a polynomial in alpha (Hermite) or alpha with a fixed gamma power
// (Laguerre), assembled exactly.
std::vector<double> hermite_reference_coeffs(unsigned k, double alpha) {
  const double a = alpha;
  switch (k) {
    case 2:
      return {0.25, (a - 1.0) / 4.0};
    case 4:
      return {2.0 / 16.0, (5.0 * a - 5.0) / 16.0, (3.0 * a * a - 5.0 * a + 3.0) / 16.0};
    case 6:
      return {5.0 / 64.0, (11.0 * a - 11.0) / 32.0,
              (16.0 * a * a - 27.0 * a + 16.0) / 32.0,
              (15.0 * a * a * a - 32.0 * a * a + 32.0 * a - 15.0) / 64.0};
    default:
      if (k % 2 == 1) return {0.0};
      throw std::invalid_argument("finite_n_reference: unsupported Hermite order");
  }
}

std::vector<double> laguerre_reference_coeffs(unsigned k, double alpha, double gamma) {
  const double a = alpha, g = gamma;
  switch (k) {
    case 1:
      return {1.0};
    case 2:
      return {1.0 + g, g * (a - 1.0)};
    case 3:
      return {1.0 + 3.0 * g + g * g, 3.0 * g * (g + 1.0) * (a - 1.0),
              g * g * (2.0 * a * a - 3.0 * a + 2.0)};
    default:
      throw std::invalid_argument("finite_n_reference: unsupported Laguerre order");
  }
}

std::vector<double> reference_coeffs(Family family, unsigned k, double alpha, double gamma) {
  if (family == Family::laguerre) {
    check_gamma(gamma, "finite_n_reference");
    return laguerre_reference_coeffs(k, alpha, gamma);
  }
  return hermite_reference_coeffs(k, alpha);
}

}  // namespace

double finite_n_reference(Family family, unsigned k, double n, double alpha, double gamma) {
  if (!(n > 0.0)) throw std::domain_error("finite_n_reference: n must be positive");
  const auto coeffs = reference_coeffs(family, k, alpha, gamma);
  double acc = 0.0;
  const double inv_n = 1.0 / n;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * inv_n + coeffs[i];
  return acc;
}

double finite_n_deviation_coefficient(Family family, unsigned k, double alpha, double gamma) {
  const auto coeffs = reference_coeffs(family, k, alpha, gamma);
  return coeffs.size() > 1 ? coeffs[1] : 0.0;
}

double semicircle_density(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return (2.0 / std::numbers::pi) * std::sqrt(1.0 - x * x);
}

double semicircle_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / std::numbers::pi;
}

double semicircle_mass(double lo, double hi) {
  if (!(lo <= hi)) throw std::domain_error("semicircle_mass: lo must not exceed hi");
  return semicircle_cdf(hi) - semicircle_cdf(lo);
}

double mp_lower_edge(double gamma) {
  check_gamma(gamma, "mp_lower_edge");
  const double s = 1.0 - std::sqrt(gamma);
  return s * s;
}

double mp_upper_edge(double gamma) {
  check_gamma(gamma, "mp_upper_edge");
  const double s = 1.0 + std::sqrt(gamma);
  return s * s;
}

double mp_density(double x, double gamma) {
  const double a = mp_lower_edge(gamma), b = mp_upper_edge(gamma);
  if (x <= a || x >= b) return 0.0;
  return std::sqrt((x - a) * (b - x)) / (2.0 * std::numbers::pi * gamma * x);
}

double mp_mass(double lo, double hi, double gamma) {
  if (!(lo <= hi)) throw std::domain_error("mp_mass: lo must not exceed hi");
  const double a = mp_lower_edge(gamma), b = mp_upper_edge(gamma);
  const double c = 0.5 * (a + b), d = 0.5 * (b - a);
  const double xlo = std::max(lo, a), xhi = std::min(hi, b);
  if (xlo >= xhi) return 0.0;
  auto angle = [&](double x) { return std::acos(std::clamp((x - c) / d, -1.0, 1.0)); };
  const double th_hi = angle(xhi), th_lo = angle(xlo);  // th_hi <= th_lo
  auto integrand = [&](double th) {
    const double s = std::sin(th);
    return s * s / (c + d * std::cos(th));
  };
  return d * d / (2.0 * std::numbers::pi * gamma) * integrate(integrand, th_hi, th_lo, 1e-13);
}

double stieltjes_hermite(int order, double x) {
  if (order != 0 && order != 1) throw std::invalid_argument("stieltjes_hermite: order is 0 or 1");
  if (!(std::abs(x) > 1.0)) throw std::domain_error("stieltjes_hermite: need |x| > 1");
  const double s = (x > 0.0 ? 1.0 : -1.0) * std::sqrt(x * x - 1.0);
  if (order == 0) return 2.0 * (x - s);
  return (x - s) / (2.0 * (x * x - 1.0));
}

double stieltjes_hermite_m0_prime(double x) {
  if (!(std::abs(x) > 1.0))
    throw std::domain_error("stieltjes_hermite_m0_prime: need |x| > 1");
  const double s = (x > 0.0 ? 1.0 : -1.0) * std::sqrt(x * x - 1.0);
  return 2.0 * (1.0 - x / s);
}

namespace {

double laguerre_signed_root(double x, double gamma, const char* who) {
  const double a = mp_lower_edge(gamma), b = mp_upper_edge(gamma);
  if (!(x < a || x > b))
    throw std::domain_error(std::string(who) + ": x must lie outside the support");
  if (x == 0.0) throw std::domain_error(std::string(who) + ": x must be nonzero");
  const double sf = (x > b) ? 1.0 : -1.0;
  return sf * std::sqrt((x - a) * (x - b));
}

}  // namespace

double stieltjes_laguerre(int order, double x, double gamma) {
  if (order != 0 && order != 1)
    throw std::invalid_argument("stieltjes_laguerre: order is 0 or 1");
  check_gamma(gamma, "stieltjes_laguerre");
  const double S = laguerre_signed_root(x, gamma, "stieltjes_laguerre");
  if (order == 0) return (x + gamma - 1.0 - S) / (2.0 * gamma * x);
  const double a = mp_lower_edge(gamma), b = mp_upper_edge(gamma);
  return (x - gamma - 1.0 - S) / (2.0 * (x - a) * (x - b));
}

double stieltjes_laguerre_m0_prime(double x, double gamma) {
  check_gamma(gamma, "stieltjes_laguerre_m0_prime");
  const double S = laguerre_signed_root(x, gamma, "stieltjes_laguerre_m0_prime");
  const double S_prime = (x - 1.0 - gamma) / S;
  return (S - x * S_prime + (1.0 - gamma)) / (2.0 * gamma * x * x);
}

}  // namespace spectral::theory
