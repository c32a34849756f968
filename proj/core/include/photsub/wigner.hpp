#ifndef PHOTSUB_WIGNER_HPP
#define PHOTSUB_WIGNER_HPP

#include <Eigen/Core>

#include "photsub/overlaps.hpp"
#include "photsub/supermodes.hpp"

namespace photsub {

// Photon-subtracted squeezed vacuum target (small odd cat):
// W_T = exp(-x^2/s - s y^2)/pi (2x^2/s + 2sy^2 - 1), s = (1+mu)/(1-mu).
struct TargetState {
  double s = 1.0;
  double mu = 0.0;

  static TargetState from_zeta(double zeta);
  static TargetState from_mu(double mu);
};

// Every state this module produces, as seen by the homodyne detector, is a
// centred Gaussian envelope times a quadratic bracket:
//   W(x, y) = N(x, y) (a + b x^2 + c y^2),
//   N = exp(-x^2/(2 sx2) - y^2/(2 sy2)) / (2 pi sx sy).
// Closed under mixtures at fixed LO, which is what makes the heralded
// mixture tractable.
struct QuadGaussWigner {
  double sigma_x2 = 0.5;
  double sigma_y2 = 0.5;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  double value(double x, double y) const;
  // int W dx dy = a + b sx2 + c sy2 (exactly 1 for normalized states).
  double integral() const;
};

struct WignerGridSpec {
  double x_max = 6.0;
  double y_max = 6.0;
  int nx = 801;
  int ny = 801;

  static WignerGridSpec for_state(const QuadGaussWigner& w, int n = 801);
  WignerGridSpec refined() const;  // doubled resolution, same extent
};

struct WignerGrid {
  Eigen::VectorXd x_axis;
  Eigen::VectorXd y_axis;
  Eigen::MatrixXd values;  // values(ix, iy)
  double cell_area = 0.0;

  double integral() const;
};

WignerGrid sample_wigner(const QuadGaussWigner& w, const WignerGridSpec& spec);

// Reduced parameters of the heralded state as measured through a given
// filter (gamma), LO (c) and squeezing spectrum.
struct HeraldedStateParams {
  Eigen::VectorXd c;
  Eigen::ArrayXd mu;
  Eigen::ArrayXd n_mean;
  double sigma_x2 = 0.0;
  double sigma_y2 = 0.0;
  double p_norm = 0.0;  // P = sum gamma_nn n_n
  double sum_x = 0.0;   // sum gamma_kn mu_k mu_n c_k c_n / ((1-mu_k)(1-mu_n))
  double sum_y = 0.0;   // same with (1+mu) denominators
  Eigen::VectorXd gamma_diag;
};

HeraldedStateParams make_heralded_params(const GammaMatrix& gamma,
                                         const LoProjection& lo,
                                         const SqueezingSpectrum& squeezing);

// Measured Wigner function of the heralded state (closed form).
QuadGaussWigner wigner_heralded(const HeraldedStateParams& params);
WignerGrid wigner_heralded(const HeraldedStateParams& params, const WignerGridSpec& spec);

// No-filter special case: mixture sum_k p_k [c_k^2 W_k^(1) + (1-c_k^2) W_SVS].
QuadGaussWigner wigner_no_filter(const SqueezingSpectrum& squeezing, const Eigen::VectorXd& c);
WignerGrid wigner_no_filter(const SqueezingSpectrum& squeezing, const Eigen::VectorXd& c,
                            const WignerGridSpec& spec);

// Single-photon subtracted squeezed state in supermode k as seen by the HD.
QuadGaussWigner wigner_subtracted_component(int k, const SqueezingSpectrum& squeezing,
                                            double sigma_x2, double sigma_y2);

QuadGaussWigner wigner_svs(double sigma_x2, double sigma_y2);
QuadGaussWigner wigner_target(const TargetState& target);
WignerGrid wigner_target(const TargetState& target, const WignerGridSpec& spec);

// Negativity N_g = (int |W| - 1)/2, the volume of the negative region.
// Grid route: plain Riemann sum with a boundary-decay precision check.
double negativity(const WignerGrid& w);
// Closed route: the negative region of a + b x^2 + c y^2 is an ellipse;
// the y-slab integral is erf-exact and the x integral is smoothed by a
// sin substitution, leaving a Gauss-Legendre sum accurate to ~1e-12.
double negativity(const QuadGaussWigner& w);

// Overlap fidelity F = 2 pi int W1 W2, closed form for two quadratic-
// Gaussian states (Gaussian moments).
double wigner_overlap(const QuadGaussWigner& w1, const QuadGaussWigner& w2);

// F against the target state via the A/B/C coefficient expression.
double fidelity_closed_form(const HeraldedStateParams& params, const TargetState& target);

// 2 pi sum W1 W2 cell_area on identical grids.
double fidelity_numeric(const WignerGrid& w1, const WignerGrid& w2);

// Purity of the heralded single-photon-subspace state M_{kn} = gamma_{kn}
// zeta_k zeta_n: tr((M/tr M)^2). Equals 1/K for a diagonal gamma and
// approaches 1 in the narrowband-filter limit.
double heralded_photon_purity(const GammaMatrix& gamma, const Eigen::ArrayXd& zeta);

}  // namespace photsub

#endif
