#ifndef PHOTSUB_SUPERMODES_HPP
#define PHOTSUB_SUPERMODES_HPP

#include <Eigen/Core>

#include "photsub/spectral_grid.hpp"

namespace photsub {

// L2-normalized Hermite-Gauss function of order k and time scale tau_s,
// evaluated at angular frequency omega about `center`. Normalization is
// folded into a three-term recurrence on orthonormal Hermite functions,
// stable to k of a few hundred.
double hermite_gauss(int k, double tau_s, double omega, double center);

// Evaluates orders 0..n_modes-1 at once (one recurrence pass per point).
Eigen::MatrixXd sample_hermite_modes(double tau_s, double center, int n_modes,
                                     const SpectralGrid& grid);

struct SupermodeBasis {
  double tau_s = 0.0;
  double center = 0.0;   // omega_p / 2
  int n_modes = 0;
  SpectralGrid grid;
  Eigen::MatrixXd samples;  // n_modes x grid.n_points()
};

// Throws precision_error when the order-(n_modes-1) envelope mass outside
// the grid exceeds 1e-10.
SupermodeBasis build_basis(double tau_s, double center, int n_modes,
                           const SpectralGrid& grid);

struct SqueezingSpectrum {
  Eigen::ArrayXd zeta;    // non-increasing, zeta_k >= 0
  Eigen::ArrayXd mu;      // tanh(zeta_k)
  Eigen::ArrayXd n_mean;  // sinh^2(zeta_k)
  double schmidt_k = 1.0;

  int n_modes() const { return static_cast<int>(zeta.size()); }
};

// Geometric spectrum zeta_k = zeta0 q^k with q^2 = (K-1)/(K+1), the
// Schmidt spectrum of a double-Gaussian joint spectral amplitude.
SqueezingSpectrum squeezing_from_schmidt(double schmidt_k, double zeta0, int n_modes);

// K = (sum zeta^2)^2 / sum zeta^4.
double schmidt_number(const Eigen::ArrayXd& zeta);

// Squeezing parameter giving `db` decibels of noise reduction:
// exp(-2 zeta) = 10^(-db/10).
double zeta_from_noise_reduction_db(double db);

// Smallest N whose geometric tail covers all but `tail` of the total
// excitation, capped at `cap`.
int default_mode_count(double schmidt_k, double tail = 1e-6, int cap = 200);

}  // namespace photsub

#endif
