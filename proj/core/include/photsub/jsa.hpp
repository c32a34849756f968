#ifndef PHOTSUB_JSA_HPP
#define PHOTSUB_JSA_HPP

#include <Eigen/Core>

#include "photsub/spectral_grid.hpp"

namespace photsub {

// Double-Gaussian joint spectral amplitude
//   f(w, w') = exp(-(w + w' - center)^2 / (4 sigma_plus^2))
//            * exp(-(w - w')^2 / (4 sigma_minus^2)).
// Its Schmidt modes are Hermite-Gauss with tau_s = 1/sqrt(s+ s-) and the
// Schmidt amplitudes form a geometric sequence of ratio
// q = |s+ - s-| / (s+ + s-).
struct DoubleGaussianJsa {
  double sigma_plus = 0.0;   // sum-coordinate width, set by the pump
  double sigma_minus = 0.0;  // difference-coordinate width
  double center = 0.0;       // omega_p

  double value(double omega_a, double omega_b) const;
  double tau_s() const;
  double schmidt_q() const;
  double schmidt_number() const;

  // sigma_plus chosen so the sum-coordinate Gaussian has the pump's
  // amplitude FWHM; sigma_minus solved from the requested Schmidt number
  // (broadband branch, sigma_minus >= sigma_plus).
  static DoubleGaussianJsa from_pump(double pump_center_omega,
                                     double pump_fwhm_omega, double schmidt_k);
};

struct JsaSchmidt {
  Eigen::VectorXd singular_values;  // normalized to unit sum of squares
  Eigen::MatrixXd modes;            // n_points x n_modes, L2-normalized on grid
  double schmidt_number = 1.0;
};

// Discretizes f on grid x grid and takes an SVD; the numerical oracle the
// analytic Hermite-Gauss/geometric model is validated against.
JsaSchmidt jsa_schmidt_oracle(const DoubleGaussianJsa& jsa, const SpectralGrid& grid);

}  // namespace photsub

#endif
