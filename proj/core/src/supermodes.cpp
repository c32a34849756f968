#include "photsub/supermodes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "photsub/errors.hpp"

namespace photsub {

namespace {
constexpr double quarter_root_pi_inv = 0.7511255444649425;  // pi^(-1/4)
}

double hermite_gauss(int k, double tau_s, double omega, double center) {
  if (k < 0) throw argument_error("mode order must be non-negative");
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  const double x = tau_s * (omega - center);
  double h_prev = quarter_root_pi_inv * std::exp(-0.5 * x * x);
  if (k == 0) return std::sqrt(tau_s) * h_prev;
  double h = std::numbers::sqrt2 * x * h_prev;
  for (int n = 2; n <= k; ++n) {
    const double h_next = std::sqrt(2.0 / n) * x * h - std::sqrt((n - 1.0) / n) * h_prev;
    h_prev = h;
    h = h_next;
  }
  return std::sqrt(tau_s) * h;
}

Eigen::MatrixXd sample_hermite_modes(double tau_s, double center, int n_modes,
                                     const SpectralGrid& grid) {
  if (n_modes < 1) throw argument_error("n_modes must be >= 1");
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  const int np = grid.n_points();
  Eigen::MatrixXd out(n_modes, np);
  const double root_tau = std::sqrt(tau_s);
  for (int i = 0; i < np; ++i) {
    const double x = tau_s * (grid.samples()[i] - center);
    double h_prev = quarter_root_pi_inv * std::exp(-0.5 * x * x);
    out(0, i) = root_tau * h_prev;
    if (n_modes == 1) continue;
    double h = std::numbers::sqrt2 * x * h_prev;
    out(1, i) = root_tau * h;
    for (int n = 2; n < n_modes; ++n) {
      const double h_next = std::sqrt(2.0 / n) * x * h - std::sqrt((n - 1.0) / n) * h_prev;
      h_prev = h;
      h = h_next;
      out(n, i) = root_tau * h_next;
    }
  }
  return out;
}

SupermodeBasis build_basis(double tau_s, double center, int n_modes,
                           const SpectralGrid& grid) {
  SupermodeBasis basis;
  basis.tau_s = tau_s;
  basis.center = center;
  basis.n_modes = n_modes;
  basis.grid = grid;
  basis.samples = sample_hermite_modes(tau_s, center, n_modes, grid);

  // Truncated mass of the highest mode decides whether the grid is wide
  // enough for every lower order too.
  const Eigen::ArrayXd top = basis.samples.row(n_modes - 1).array();
  const double mass = (top * top).sum() * grid.step();
  const double truncated = std::abs(1.0 - mass);
  if (truncated > 1e-10) {
    std::ostringstream msg;
    msg << "spectral grid too narrow: order-" << (n_modes - 1)
        << " envelope truncated mass " << truncated;
    throw precision_error(msg.str(), truncated);
  }
  return basis;
}

SqueezingSpectrum squeezing_from_schmidt(double schmidt_k, double zeta0, int n_modes) {
  if (schmidt_k < 1.0) throw domain_error("Schmidt number must be >= 1");
  if (zeta0 <= 0.0) throw domain_error("zeta0 must be positive");
  if (n_modes < 1) throw argument_error("n_modes must be >= 1");
  const double q2 = (schmidt_k - 1.0) / (schmidt_k + 1.0);
  const double q = std::sqrt(q2);
  SqueezingSpectrum s;
  s.zeta.resize(n_modes);
  double z = zeta0;
  for (int k = 0; k < n_modes; ++k) {
    s.zeta[k] = z;
    z *= q;
  }
  s.mu = s.zeta.tanh();
  s.n_mean = s.zeta.sinh().square();
  s.schmidt_k = schmidt_k;
  return s;
}

double schmidt_number(const Eigen::ArrayXd& zeta) {
  const double s2 = zeta.square().sum();
  const double s4 = zeta.square().square().sum();
  if (s4 <= 0.0) throw domain_error("Schmidt number undefined for all-zero squeezing");
  return s2 * s2 / s4;
}

double zeta_from_noise_reduction_db(double db) {
  if (db <= 0.0) throw domain_error("noise reduction must be positive dB");
  return db * std::numbers::ln10 / 20.0;
}

int default_mode_count(double schmidt_k, double tail, int cap) {
  if (schmidt_k < 1.0) throw domain_error("Schmidt number must be >= 1");
  if (schmidt_k == 1.0) return 1;
  const double q2 = (schmidt_k - 1.0) / (schmidt_k + 1.0);
  const int n = static_cast<int>(std::ceil(std::log(tail) / std::log(q2)));
  return std::clamp(n, 1, cap);
}

}  // namespace photsub
