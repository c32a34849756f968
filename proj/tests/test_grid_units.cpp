#include <doctest.h>

#include <cmath>

#include "photsub/errors.hpp"
#include "photsub/spectral_grid.hpp"
#include "photsub/units.hpp"

using namespace photsub;

TEST_SUITE("grid_units") {

TEST_CASE("wavelength FWHM conversion hits the telecom reference points") {
  // 5 nm at 1560 nm is the paper-style "~600 GHz" filter.
  const double w5 = wavelength_fwhm_to_angular(1560e-9, 5e-9);
  CHECK(w5 / (2.0 * M_PI * 1e9) == doctest::Approx(615.9443992439185).epsilon(1e-12));
  CHECK(std::lround(w5 / (2.0 * M_PI * 1e9)) == 616);

  const double w1 = wavelength_fwhm_to_angular(1560e-9, 1e-9);
  CHECK(w1 / (2.0 * M_PI * 1e9) == doctest::Approx(123.1888798487837).epsilon(1e-12));

  CHECK(wavelength_fwhm_to_angular(1560e-9, 0.0) == 0.0);
  CHECK_THROWS_AS(wavelength_fwhm_to_angular(0.0, 1e-9), domain_error);
  CHECK_THROWS_AS(wavelength_fwhm_to_angular(-1560e-9, 1e-9), domain_error);
}

TEST_CASE("conversion round trip holds to 12 significant digits") {
  const double fwhm = 5e-9;
  const double back =
      angular_fwhm_to_wavelength(1560e-9, wavelength_fwhm_to_angular(1560e-9, fwhm));
  CHECK(back == doctest::Approx(fwhm).epsilon(1e-12));
}

TEST_CASE("BandwidthSpec derives the angular width") {
  const auto spec = BandwidthSpec::from_wavelength(780e-9, 0.5e-9);
  CHECK(spec.fwhm_angular_frequency ==
        doctest::Approx(wavelength_fwhm_to_angular(780e-9, 0.5e-9)));
  CHECK_THROWS_AS(BandwidthSpec::from_wavelength(780e-9, 0.0), domain_error);
}

TEST_CASE("grids sample symmetrically around an exact centre") {
  const double c = 1.2e15, d = 3e12;
  const auto g3 = make_grid(c, d, 3);
  CHECK(g3.samples()[0] == doctest::Approx(c - d));
  CHECK(g3.samples()[1] == c);
  CHECK(g3.samples()[2] == doctest::Approx(c + d));

  CHECK_THROWS_AS(make_grid(c, d, 4), argument_error);
  CHECK_THROWS_AS(make_grid(c, 0.0, 3), argument_error);

  const auto g = make_grid(c, d, 1001);
  CHECK(g.step() == doctest::Approx(d / 500.0));
  CHECK(g.samples()[500] == c);
  for (int i = 1; i < g.n_points(); ++i) CHECK(g.samples()[i] > g.samples()[i - 1]);
  for (int i = 0; i < g.n_points(); ++i) {
    const double lo = g.samples()[i] - c;
    const double hi = g.samples()[g.n_points() - 1 - i] - c;
    CHECK(lo == doctest::Approx(-hi).epsilon(1e-12).scale(d));
  }
}

TEST_CASE("default grid covers high orders and wide filters") {
  const double tau = 5.078417841716073e-13;
  const double hs = default_half_span(tau, 60, {wavelength_fwhm_to_angular(1560e-9, 5e-9)});
  CHECK(hs >= (std::sqrt(119.0) + 8.0) / tau);
  const auto grid = default_grid(1.2e15, tau, 60);
  CHECK(grid.n_points() == default_grid_points);
}

}  // TEST_SUITE
