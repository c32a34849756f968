#ifndef PHOTSUB_SPECTRAL_GRID_HPP
#define PHOTSUB_SPECTRAL_GRID_HPP

#include <Eigen/Core>

namespace photsub {

// Uniform angular-frequency sampling window used by every overlap
// quadrature. n_points is odd so the centre is a sample.
class SpectralGrid {
 public:
  SpectralGrid() = default;
  SpectralGrid(double center, double half_span, int n_points);

  double center() const { return center_; }
  double half_span() const { return half_span_; }
  int n_points() const { return n_points_; }
  double step() const { return step_; }

  double omega(int i) const { return center_ - half_span_ + i * step_; }
  const Eigen::ArrayXd& samples() const { return samples_; }

  bool same_as(const SpectralGrid& other) const;

 private:
  double center_ = 0.0;
  double half_span_ = 0.0;
  int n_points_ = 0;
  double step_ = 0.0;
  Eigen::ArrayXd samples_;
};

SpectralGrid make_grid(double center, double half_span, int n_points);

// Half-span covering +-8 sigma of the widest object in play: the
// order-(n_modes-1) Hermite-Gauss envelope of scale tau_s plus any extra
// Gaussian FWHMs (filter, LO). 4097 points keeps truncated mass < 1e-12
// for order-60 envelopes and 5 nm filters alike.
double default_half_span(double tau_s, int n_modes,
                         std::initializer_list<double> extra_fwhms = {});

inline constexpr int default_grid_points = 4097;

SpectralGrid default_grid(double center, double tau_s, int n_modes,
                          std::initializer_list<double> extra_fwhms = {},
                          int n_points = default_grid_points);

}  // namespace photsub

#endif
