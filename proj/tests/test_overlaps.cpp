#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "photsub/errors.hpp"
#include "photsub/overlaps.hpp"
#include "photsub/units.hpp"
#include "test_helpers.hpp"

using namespace photsub;
using photsub::test::max_abs;
using photsub::test::max_abs_diff;

namespace {
const double tau9 = 5.07841784171607267657387e-13;
const double omega0 = vacuum_angular_frequency(1560e-9);
double nm(double v) { return wavelength_fwhm_to_angular(1560e-9, v * 1e-9); }
}

TEST_SUITE("overlaps") {

TEST_CASE("identity filter gives the identity matrix") {
  const auto basis = build_basis(tau9, omega0, 40, default_grid(omega0, tau9, 40));
  const auto gamma = gamma_quadrature(basis, FilterProfile::identity());
  CHECK(max_abs_diff(gamma.values, Eigen::MatrixXd::Identity(40, 40)) < 1e-10);
}

TEST_CASE("rectangular filter: odd k+n entries vanish") {
  const auto grid = band_aligned_grid(omega0, nm(5.0), 4097);
  const auto modes = sample_hermite_modes(tau9, omega0, 24, grid);
  const auto gamma = gamma_quadrature(modes, grid, FilterProfile::rectangular(omega0, nm(5.0)));
  double worst = 0.0;
  for (int k = 0; k < 24; ++k)
    for (int n = 0; n < 24; ++n)
      if ((k + n) % 2 == 1) worst = std::max(worst, std::abs(gamma.values(k, n)));
  CHECK(worst < 1e-12);
}

TEST_CASE("wide Gaussian filter approaches the identity") {
  const int n_modes = 8;
  const double mode_width = matched_lo_fwhm(tau9);  // psi_0 amplitude FWHM
  const auto gamma = gamma_gaussian_analytic(tau9, n_modes, 100.0 * mode_width);
  CHECK(max_abs_diff(gamma.values, Eigen::MatrixXd::Identity(n_modes, n_modes)) < 1e-3);
}

TEST_CASE("analytic Gaussian gamma_00 = tau_s/taubar") {
  const auto gamma = gamma_gaussian_analytic(tau9, 4, nm(1.0));
  CHECK(gamma.values(0, 0) == doctest::Approx(0.16464716006392034).epsilon(1e-12));
  for (int k = 0; k < 4; ++k)
    for (int n = 0; n < 4; ++n)
      if ((k + n) % 2 == 1) CHECK(gamma.values(k, n) == 0.0);
}

TEST_CASE("analytic and quadrature Gaussian gamma agree to 1e-8 at N=40") {
  const auto basis = build_basis(tau9, omega0, 40,
                                 default_grid(omega0, tau9, 40, {nm(5.0)}));
  for (double fw : {1.0, 5.0}) {
    const auto analytic = gamma_gaussian_analytic(tau9, 40, nm(fw));
    const auto quad = gamma_quadrature(basis, FilterProfile::gaussian(omega0, nm(fw)));
    CHECK(max_abs_diff(analytic.values, quad.values) < 1e-8);
  }
}

TEST_CASE("analytic and quadrature rectangular gamma agree to 1e-8 at N=40") {
  for (double fw : {1.0, 5.0}) {
    const auto grid = band_aligned_grid(omega0, nm(fw), 16385);
    const auto modes = sample_hermite_modes(tau9, omega0, 40, grid);
    const auto quad = gamma_quadrature(modes, grid, FilterProfile::rectangular(omega0, nm(fw)));
    const auto analytic = gamma_rectangular_analytic(tau9, 40, nm(fw));
    CHECK(max_abs_diff(analytic.values, quad.values) < 1e-8);
  }
}

TEST_CASE("rectangular gamma_00 at half-width x = 1 equals erf(1)") {
  const auto gamma = gamma_rectangular_analytic(tau9, 2, 2.0 / tau9);
  CHECK(gamma.values(0, 0) == doctest::Approx(0.8427007929497149).epsilon(1e-12));
}

TEST_CASE("very wide rectangular filter recovers orthonormality") {
  const auto gamma = gamma_rectangular_analytic(tau9, 20, 80.0 / tau9);
  CHECK(max_abs_diff(gamma.values, Eigen::MatrixXd::Identity(20, 20)) < 1e-10);
}

TEST_CASE("gamma matrices are positive semidefinite") {
  const auto basis = build_basis(tau9, omega0, 30, default_grid(omega0, tau9, 30));
  for (const auto& gamma :
       {gamma_quadrature(basis, FilterProfile::gaussian(omega0, nm(1.0))),
        gamma_rectangular_analytic(tau9, 30, nm(1.0)),
        gamma_rectangular_analytic(tau9, 30, nm(5.0))}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gamma.values);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    for (int k = 0; k < gamma.n_modes; ++k) {
      CHECK(gamma.values(k, k) >= 0.0);
      CHECK(gamma.values(k, k) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("Gaussian diagonal entries grow with filter width") {
  const int n_modes = 10;
  Eigen::VectorXd prev = Eigen::VectorXd::Zero(n_modes);
  for (double fw : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto gamma = gamma_gaussian_analytic(tau9, n_modes, nm(fw));
    for (int k = 0; k < n_modes; ++k) {
      CHECK(gamma.values(k, k) >= prev[k] - 1e-14);
      prev[k] = gamma.values(k, k);
    }
  }
}

TEST_CASE("matched LO projects onto psi_0 alone") {
  const auto basis = build_basis(tau9, omega0, 40, default_grid(omega0, tau9, 40));
  const auto lo = lo_coefficients(basis, matched_lo_fwhm(tau9));
  CHECK(std::abs(lo.c[0] - 1.0) < 1e-8);
  for (int k = 1; k < 40; ++k) CHECK(std::abs(lo.c[k]) < 1e-8);
  CHECK(lo.residual < 1e-10);
  CHECK(!lo.leaky);
}

TEST_CASE("centered Gaussian LO has no odd components") {
  const auto basis = build_basis(tau9, omega0, 41, default_grid(omega0, tau9, 41));
  const auto lo = lo_coefficients(basis, 1.7 * matched_lo_fwhm(tau9));
  for (int k = 1; k < 41; k += 2) CHECK(std::abs(lo.c[k]) < 1e-12);
}

TEST_CASE("LO capture is complete for moderate width ratios at N=60") {
  // Two-scale Hermite expansions converge geometrically with ratio
  // rho = |1-r^2|/(1+r^2); sixty modes capture ratios in [0.4, 2.5] below
  // 1e-6. Wider mismatches leak (see the leaky-flag case below).
  const double matched = matched_lo_fwhm(tau9);
  const auto basis = build_basis(
      tau9, omega0, 60, default_grid(omega0, tau9, 60, {2.5 * matched}));
  for (double ratio : {0.4, 0.7, 1.0, 1.6, 2.5}) {
    const auto lo = lo_coefficients(basis, ratio * matched);
    CHECK(lo.residual < 1e-6);
  }
}

TEST_CASE("an extreme LO/mode mismatch sets the leaky flag") {
  const double matched = matched_lo_fwhm(tau9);
  const auto basis = build_basis(
      tau9, omega0, 60, default_grid(omega0, tau9, 60, {8.0 * matched}));
  const auto lo = lo_coefficients(basis, 8.0 * matched);
  CHECK(lo.residual > 0.01);
  CHECK(lo.leaky);
  // renormalization still leaves a unit vector
  CHECK(lo.c.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));

  // a 5x mismatch leaks measurably but below the warning threshold
  const auto mild = lo_coefficients(
      build_basis(tau9, omega0, 60, default_grid(omega0, tau9, 60, {5.0 * matched})),
      5.0 * matched);
  CHECK(mild.residual > 1e-4);
  CHECK(mild.residual < 0.01);
}

TEST_CASE("lo_mode_floor covers the sweep range") {
  const double matched = matched_lo_fwhm(tau9);
  CHECK(lo_mode_floor(tau9, matched) <= 8);
  CHECK(lo_mode_floor(tau9, 5.0 * matched) > 60);
  CHECK(lo_mode_floor(tau9, 5.0 * matched) <= 200);
}

TEST_CASE("delta-limit gamma is rejected") {
  const auto basis = build_basis(tau9, omega0, 4, default_grid(omega0, tau9, 4));
  CHECK_THROWS_AS(gamma_quadrature(basis, FilterProfile::delta_limit(omega0)),
                  unsupported_error);
}

}  // TEST_SUITE
