#ifndef PHOTSUB_FILTERS_HPP
#define PHOTSUB_FILTERS_HPP

#include <string>

namespace photsub {

enum class FilterKind { Identity, Rectangular, Gaussian, DeltaLimit };

// Heralding-path transmission profile t(omega), real, 0 <= t <= 1,
// with r = sqrt(1 - t^2). DeltaLimit is a tagged analytic case and is
// never sampled; callers must use the closed-form narrowband results.
struct FilterProfile {
  FilterKind kind = FilterKind::Identity;
  double center = 0.0;  // rad/s
  double fwhm = 0.0;    // rad/s; unused for Identity/DeltaLimit

  static FilterProfile identity();
  static FilterProfile rectangular(double center, double fwhm);
  static FilterProfile gaussian(double center, double fwhm);
  static FilterProfile delta_limit(double center);

  double transmission(double omega) const;
  double reflection(double omega) const;

  // True where t is identically zero (outside a rectangular band).
  bool blocks(double omega) const;
};

std::string to_string(FilterKind kind);

}  // namespace photsub

#endif
