#include "photsub/filters.hpp"

#include <cmath>
#include <numbers>

#include "photsub/errors.hpp"

namespace photsub {

FilterProfile FilterProfile::identity() { return {FilterKind::Identity, 0.0, 0.0}; }

FilterProfile FilterProfile::rectangular(double center, double fwhm) {
  if (fwhm <= 0.0) throw domain_error("rectangular filter needs positive FWHM");
  return {FilterKind::Rectangular, center, fwhm};
}

FilterProfile FilterProfile::gaussian(double center, double fwhm) {
  if (fwhm <= 0.0) throw domain_error("Gaussian filter needs positive FWHM");
  return {FilterKind::Gaussian, center, fwhm};
}

FilterProfile FilterProfile::delta_limit(double center) {
  return {FilterKind::DeltaLimit, center, 0.0};
}

double FilterProfile::transmission(double omega) const {
  switch (kind) {
    case FilterKind::Identity:
      return 1.0;
    case FilterKind::Rectangular:
      return std::abs(omega - center) <= 0.5 * fwhm ? 1.0 : 0.0;
    case FilterKind::Gaussian: {
      const double u = omega - center;
      return std::exp(-4.0 * std::numbers::ln2 * u * u / (fwhm * fwhm));
    }
    case FilterKind::DeltaLimit:
      break;
  }
  throw unsupported_error(
      "delta-limit filters are analytic; use the narrowband closed forms");
}

double FilterProfile::reflection(double omega) const {
  const double t = transmission(omega);
  return std::sqrt(std::max(0.0, 1.0 - t * t));
}

bool FilterProfile::blocks(double omega) const {
  return kind == FilterKind::Rectangular && std::abs(omega - center) > 0.5 * fwhm;
}

std::string to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::Identity: return "none";
    case FilterKind::Rectangular: return "rect";
    case FilterKind::Gaussian: return "gauss";
    case FilterKind::DeltaLimit: return "delta";
  }
  return "?";
}

}  // namespace photsub
