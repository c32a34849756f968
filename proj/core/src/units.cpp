#include "photsub/units.hpp"

#include <cmath>
#include <numbers>

#include "photsub/errors.hpp"

namespace photsub {

double wavelength_fwhm_to_angular(double carrier_wavelength, double fwhm_wavelength) {
  if (carrier_wavelength <= 0.0)
    throw domain_error("carrier wavelength must be positive");
  if (fwhm_wavelength < 0.0)
    throw domain_error("bandwidth must be non-negative");
  return 2.0 * std::numbers::pi * speed_of_light * fwhm_wavelength /
         (carrier_wavelength * carrier_wavelength);
}

double angular_fwhm_to_wavelength(double carrier_wavelength, double fwhm_angular) {
  if (carrier_wavelength <= 0.0)
    throw domain_error("carrier wavelength must be positive");
  return fwhm_angular * carrier_wavelength * carrier_wavelength /
         (2.0 * std::numbers::pi * speed_of_light);
}

double vacuum_angular_frequency(double wavelength) {
  if (wavelength <= 0.0) throw domain_error("wavelength must be positive");
  return 2.0 * std::numbers::pi * speed_of_light / wavelength;
}

BandwidthSpec BandwidthSpec::from_wavelength(double carrier, double fwhm) {
  if (fwhm <= 0.0) throw domain_error("bandwidth must be positive");
  BandwidthSpec spec;
  spec.carrier_wavelength = carrier;
  spec.fwhm_wavelength = fwhm;
  spec.fwhm_angular_frequency = wavelength_fwhm_to_angular(carrier, fwhm);
  return spec;
}

}  // namespace photsub
