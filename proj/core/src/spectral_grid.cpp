#include "photsub/spectral_grid.hpp"

#include <cmath>

#include "photsub/errors.hpp"

namespace photsub {

SpectralGrid::SpectralGrid(double center, double half_span, int n_points)
    : center_(center), half_span_(half_span), n_points_(n_points) {
  if (half_span <= 0.0) throw argument_error("grid half_span must be positive");
  if (n_points < 3) throw argument_error("grid needs at least 3 points");
  if (n_points % 2 == 0) throw argument_error("grid n_points must be odd");
  step_ = 2.0 * half_span / (n_points - 1);
  samples_.resize(n_points);
  for (int i = 0; i < n_points; ++i) samples_[i] = omega(i);
  samples_[(n_points - 1) / 2] = center;  // exact centre sample
}

bool SpectralGrid::same_as(const SpectralGrid& other) const {
  return n_points_ == other.n_points_ && center_ == other.center_ &&
         half_span_ == other.half_span_;
}

SpectralGrid make_grid(double center, double half_span, int n_points) {
  return SpectralGrid(center, half_span, n_points);
}

double default_half_span(double tau_s, int n_modes,
                         std::initializer_list<double> extra_fwhms) {
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  if (n_modes < 1) throw argument_error("n_modes must be >= 1");
  // Classical turning point of the highest order plus an 8-sigma tail.
  double span = (std::sqrt(2.0 * (n_modes - 1) + 1.0) + 8.0) / tau_s;
  constexpr double sigma_per_fwhm = 1.0 / (2.0 * 1.1774100225154747);  // 2 sqrt(2 ln2)
  for (double fwhm : extra_fwhms)
    span = std::max(span, 8.0 * sigma_per_fwhm * fwhm);
  return span;
}

SpectralGrid default_grid(double center, double tau_s, int n_modes,
                          std::initializer_list<double> extra_fwhms, int n_points) {
  return SpectralGrid(center, default_half_span(tau_s, n_modes, extra_fwhms), n_points);
}

}  // namespace photsub
