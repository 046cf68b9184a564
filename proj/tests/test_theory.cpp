#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spectral/quadrature.hpp"
#include "spectral/theory.hpp"

using namespace spectral;
using namespace spectral::theory;

TEST_CASE("semicircle moments are Catalan(k/2) / 4^(k/2)") {
  CHECK(semicircle_moment(0) == 1.0);
  CHECK(semicircle_moment(1) == 0.0);
  CHECK(semicircle_moment(2) == 0.25);
  CHECK(semicircle_moment(3) == 0.0);
  CHECK(semicircle_moment(4) == 0.125);
  CHECK(semicircle_moment(6) == doctest::Approx(5.0 / 64).epsilon(1e-15));
  CHECK(semicircle_moment(8) == doctest::Approx(14.0 / 256).epsilon(1e-15));
  // against direct quadrature of the density
  for (unsigned k = 0; k <= 10; ++k) {
    const double direct = integrate(
        [&](double x) {
          return std::pow(x, k) * semicircle_density(x);
        },
        -1.0, 1.0, 1e-13);
    CHECK(semicircle_moment(k) == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("Marchenko-Pastur moments via Narayana polynomials") {
  for (double g : {0.25, 0.5, 1.0}) {
    CHECK(mp_moment(0, g) == 1.0);
    CHECK(mp_moment(1, g) == 1.0);
    CHECK(mp_moment(2, g) == doctest::Approx(1.0 + g).epsilon(1e-15));
    CHECK(mp_moment(3, g) == doctest::Approx(1.0 + 3.0 * g + g * g).epsilon(1e-15));
  }
  // gamma = 1 collapses to Catalan numbers
  CHECK(mp_moment(4, 1.0) == doctest::Approx(14.0).epsilon(1e-15));
  CHECK(mp_moment(5, 1.0) == doctest::Approx(42.0).epsilon(1e-15));
}

TEST_CASE("Hermite deviation moments") {
  CHECK(dev_moment_hermite(1) == 0.0);
  CHECK(dev_moment_hermite(2) == 0.25);
  CHECK(dev_moment_hermite(4) == 0.3125);
  CHECK(dev_moment_hermite(6) == 11.0 / 32);
  CHECK(dev_moment_hermite(0) == 0.0);  // the deviation measure has zero mass
}

TEST_CASE("Laguerre deviation moments: closed form vs quadrature") {
  for (double g : {0.25, 0.5, 1.0}) {
    CHECK(dev_moment_laguerre(0, g) == 0.0);
    CHECK(dev_moment_laguerre(1, g) == 0.0);
    CHECK(dev_moment_laguerre(2, g) == g);
    CHECK(dev_moment_laguerre(3, g) == 3.0 * g * (g + 1.0));
    for (unsigned k = 0; k <= 8; ++k)
      CHECK(dev_moment_laguerre(k, g) ==
            doctest::Approx(dev_moment_laguerre_quadrature(k, g)).epsilon(1e-11));
  }
}

TEST_CASE("Hermite covariance table") {
  // Var(tr of scaled Hermite) = 1/(2 beta) for every n, so Cov(Y_1,Y_1) = 1/4.
  CHECK(cov_hermite(1, 1) == 0.25);
  CHECK(cov_hermite(2, 2) == 0.125);
  // mixed parity vanishes
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = 1; j <= 6; ++j) {
      if ((i + j) % 2 == 1) CHECK(cov_hermite(i, j) == 0.0);
      CHECK(cov_hermite(i, j) == cov_hermite(j, i));
    }
  for (unsigned k = 1; k <= 8; ++k)
    CHECK(cov_hermite(k, k) == doctest::Approx(sigma_k_squared(k)).epsilon(1e-15));
}

TEST_CASE("Laguerre covariance: printed series vs exact (1,1) identity") {
  for (double g : {0.25, 0.5, 1.0}) {
    CHECK(cov_laguerre_exact_11(g) == g);
    CHECK(cov_laguerre_printed(1, 1, g) == doctest::Approx(g + g * g / 2).epsilon(1e-13));
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned j = i; j <= 4; ++j) {
        CHECK(cov_laguerre_printed(i, j, g) ==
              doctest::Approx(cov_laguerre_td(i, j, g) + cov_laguerre_ts(i, j, g))
                  .epsilon(1e-13));
        CHECK(cov_laguerre_printed(i, j, g) ==
              doctest::Approx(cov_laguerre_printed(j, i, g)).epsilon(1e-13));
      }
  }
}

TEST_CASE("finite-n reference polynomials") {
  // limits recover the law moments
  for (unsigned k : {2u, 4u, 6u})
    CHECK(finite_n_reference(Family::hermite, k, 1e12, 1.7) ==
          doctest::Approx(semicircle_moment(k)).epsilon(1e-9));
  for (unsigned k : {1u, 2u, 3u})
    for (double g : {0.25, 0.5})
      CHECK(finite_n_reference(Family::laguerre, k, 1e12, 1.7, g) ==
            doctest::Approx(mp_moment(k, g)).epsilon(1e-9));

  // the O(1/n) coefficient is (alpha - 1) times the deviation moment
  for (double alpha : {0.0, 1.0, 2.0}) {
    for (unsigned k : {2u, 4u, 6u})
      CHECK(finite_n_deviation_coefficient(Family::hermite, k, alpha) ==
            doctest::Approx((alpha - 1.0) * dev_moment_hermite(k)).epsilon(1e-13));
    for (unsigned k : {1u, 2u, 3u})
      CHECK(finite_n_deviation_coefficient(Family::laguerre, k, alpha, 0.5) ==
            doctest::Approx((alpha - 1.0) * dev_moment_laguerre(k, 0.5)).epsilon(1e-13));
  }

  // exact small-order identities: E[tr]/n
  CHECK(finite_n_reference(Family::hermite, 2, 50.0, 2.0) ==
        doctest::Approx(0.25 + 1.0 / (4 * 50.0)).epsilon(1e-15));
  CHECK(finite_n_reference(Family::laguerre, 1, 50.0, 2.0, 0.5) == 1.0);

  // odd Hermite orders vanish identically at every n
  CHECK(finite_n_reference(Family::hermite, 3, 10.0, 1.0) == 0.0);
  CHECK_THROWS_AS(finite_n_reference(Family::hermite, 8, 10.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(finite_n_reference(Family::laguerre, 4, 10.0, 1.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("interval masses integrate the densities") {
  CHECK(semicircle_mass(-1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(semicircle_mass(-2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(semicircle_mass(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(semicircle_mass(0.2, 0.8) ==
        doctest::Approx(integrate([](double x) { return semicircle_density(x); }, 0.2, 0.8,
                                  1e-13))
            .epsilon(1e-10));
  for (double g : {0.25, 0.5, 1.0}) {
    const double a = mp_lower_edge(g), b = mp_upper_edge(g);
    CHECK(mp_mass(a, b, g) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(mp_mass(a - 1.0, b + 1.0, g) == doctest::Approx(1.0).epsilon(1e-10));
    const double lo = a + 0.1 * (b - a), hi = b - 0.2 * (b - a);
    CHECK(mp_mass(lo, hi, g) ==
          doctest::Approx(integrate([&](double x) { return mp_density(x, g); }, lo, hi, 1e-13))
              .epsilon(1e-9));
  }
}

TEST_CASE("Stieltjes transforms match their moment series") {
  // m0(x) = sum_k m_k / x^(k+1); m1(x) = sum_k dev_k / x^(k+1)
  {
    const double x = 3.0;
    double s0 = 0.0, s1 = 0.0;
    for (unsigned k = 0; k <= 30; ++k) {
      s0 += semicircle_moment(k) / std::pow(x, k + 1);
      s1 += dev_moment_hermite(k) / std::pow(x, k + 1);
    }
    CHECK(stieltjes_hermite(0, x) == doctest::Approx(s0).epsilon(1e-12));
    CHECK(stieltjes_hermite(1, x) == doctest::Approx(s1).epsilon(1e-12));
  }
  {
    const double x = 8.0, g = 0.5;
    double s0 = 0.0, s1 = 0.0;
    for (unsigned k = 0; k <= 30; ++k) {
      s0 += mp_moment(k, g) / std::pow(x, k + 1);
      s1 += dev_moment_laguerre_quadrature(k, g) / std::pow(x, k + 1);
    }
    CHECK(stieltjes_laguerre(0, x, g) == doctest::Approx(s0).epsilon(1e-9));
    CHECK(stieltjes_laguerre(1, x, g) == doctest::Approx(s1).epsilon(1e-9));
  }
}

TEST_CASE("Stieltjes branch and domain handling") {
  // decay like 1/x on the right, continuation on the left
  CHECK(stieltjes_hermite(0, 50.0) == doctest::Approx(1.0 / 50.0).epsilon(0.01));
  CHECK(stieltjes_hermite(0, -50.0) == doctest::Approx(-1.0 / 50.0).epsilon(0.01));
  CHECK(stieltjes_hermite(0, -2.0) == doctest::Approx(-stieltjes_hermite(0, 2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(stieltjes_hermite(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(stieltjes_laguerre(0, 1.0, 0.5), std::domain_error);  // inside [a, b]
  CHECK(stieltjes_laguerre(0, 50.0, 0.5) == doctest::Approx(1.0 / 50.0).epsilon(0.02));
  // left of the support the transform is negative (mass sits to the right)
  CHECK(stieltjes_laguerre(0, 0.01, 0.5) < 0.0);
}

TEST_CASE("derivatives of m0 by finite differences") {
  const double h = 1e-6;
  for (double x : {1.5, 2.0, 3.0, -2.0}) {
    const double fd = (stieltjes_hermite(0, x + h) - stieltjes_hermite(0, x - h)) / (2 * h);
    CHECK(stieltjes_hermite_m0_prime(x) == doctest::Approx(fd).epsilon(1e-7));
  }
  for (double g : {0.25, 0.5})
    for (double x : {3.5, 4.0}) {
      const double fd =
          (stieltjes_laguerre(0, x + h, g) - stieltjes_laguerre(0, x - h, g)) / (2 * h);
      CHECK(stieltjes_laguerre_m0_prime(x, g) == doctest::Approx(fd).epsilon(1e-7));
    }
}
