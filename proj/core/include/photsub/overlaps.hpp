#ifndef PHOTSUB_OVERLAPS_HPP
#define PHOTSUB_OVERLAPS_HPP

#include <Eigen/Core>

#include "photsub/filters.hpp"
#include "photsub/spectral_grid.hpp"
#include "photsub/supermodes.hpp"

namespace photsub {

// Real symmetric overlap matrix gamma_{k,n} = int |t|^2 psi_k psi_n domega.
// Positive semidefinite; identity filter gives the identity matrix.
struct GammaMatrix {
  int n_modes = 0;
  Eigen::MatrixXd values;

  static GammaMatrix identity(int n_modes);
};

// Riemann-sum route on the basis grid; spectrally accurate for smooth
// weights (identity, Gaussian). For rectangular filters pass a grid whose
// cells tile the band (see band_aligned_grid) so the cut is sampled by a
// composite midpoint rule instead of straddled cells.
GammaMatrix gamma_quadrature(const SupermodeBasis& basis, const FilterProfile& filter);
GammaMatrix gamma_quadrature(const Eigen::MatrixXd& mode_samples,
                             const SpectralGrid& grid, const FilterProfile& filter);

// Grid whose cell boundaries coincide with the band edges of a
// rectangular filter: step = band/(n_across), edges half a step beyond
// the outermost in-band samples.
SpectralGrid band_aligned_grid(double center, double band_fwhm, int n_across_band = 4097,
                               double margin_factor = 1.25);

// Closed form for a Gaussian filter (taubar^2 = 8 ln2 / dwF^2 + tau_s^2,
// finite Hermite sum). The alternating sum cancels catastrophically for
// large k+n, so terms are accumulated in binary128; entries whose
// cancellation would leave fewer than ~12 good digits raise
// precision_error instead of returning noise.
GammaMatrix gamma_gaussian_analytic(double tau_s, int n_modes, double filter_fwhm);

// Band-limited Hermite-function overlaps for a rectangular filter,
// evaluated by panelled Gauss-Legendre quadrature of the normalized
// integrand on [-L, L], L = tau_s dwF / 2. Zero for odd k+n.
GammaMatrix gamma_rectangular_analytic(double tau_s, int n_modes, double filter_fwhm);

// Local-oscillator projection onto the supermode basis. c is stored
// renormalized; `residual` is 1 - sum c^2 before renormalization and
// `leaky` flags residual > 0.01 (LO escapes the modeled mode space).
struct LoProjection {
  double fwhm_lo = 0.0;  // amplitude FWHM, rad/s
  Eigen::VectorXd c;
  double residual = 0.0;
  bool leaky = false;
};

// Centered Gaussian LO amplitude of the given FWHM (FWHM of the spectral
// amplitude, not the intensity).
LoProjection lo_coefficients(const SupermodeBasis& basis, double lo_fwhm);

// Amplitude FWHM of the LO matched to psi_0: 2 sqrt(2 ln2) / tau_s.
double matched_lo_fwhm(double tau_s);

// Mode count needed so a Gaussian LO of the given width projects onto the
// basis with tail below `tail` (two-scale Hermite expansion estimate).
int lo_mode_floor(double tau_s, double lo_fwhm, double tail = 1e-9, int cap = 200);

}  // namespace photsub

#endif
