#ifndef PHOTSUB_UNITS_HPP
#define PHOTSUB_UNITS_HPP

namespace photsub {

inline constexpr double speed_of_light = 299792458.0;  // m/s

// All internal computation is in angular frequency (rad/s); wavelengths
// appear only at I/O boundaries.

// FWHM conversion for a narrow band centred at `carrier_wavelength`:
// d(omega) = 2 pi c dlambda / lambda^2.
double wavelength_fwhm_to_angular(double carrier_wavelength, double fwhm_wavelength);
double angular_fwhm_to_wavelength(double carrier_wavelength, double fwhm_angular);

// Carrier wavelength -> angular frequency 2 pi c / lambda.
double vacuum_angular_frequency(double wavelength);

struct BandwidthSpec {
  double carrier_wavelength = 0.0;       // m
  double fwhm_wavelength = 0.0;          // m
  double fwhm_angular_frequency = 0.0;   // rad/s, derived

  static BandwidthSpec from_wavelength(double carrier, double fwhm);
};

}  // namespace photsub

#endif
