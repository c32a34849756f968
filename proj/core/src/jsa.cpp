#include "photsub/jsa.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "photsub/errors.hpp"

namespace photsub {

double DoubleGaussianJsa::value(double omega_a, double omega_b) const {
  const double s = omega_a + omega_b - center;
  const double d = omega_a - omega_b;
  return std::exp(-s * s / (4.0 * sigma_plus * sigma_plus) -
                  d * d / (4.0 * sigma_minus * sigma_minus));
}

double DoubleGaussianJsa::tau_s() const { return 1.0 / std::sqrt(sigma_plus * sigma_minus); }

double DoubleGaussianJsa::schmidt_q() const {
  return std::abs(sigma_plus - sigma_minus) / (sigma_plus + sigma_minus);
}

double DoubleGaussianJsa::schmidt_number() const {
  const double q2 = schmidt_q() * schmidt_q();
  return (1.0 + q2) / (1.0 - q2);
}

DoubleGaussianJsa DoubleGaussianJsa::from_pump(double pump_center_omega,
                                               double pump_fwhm_omega, double schmidt_k) {
  if (pump_fwhm_omega <= 0.0) throw domain_error("pump bandwidth must be positive");
  if (schmidt_k < 1.0) throw domain_error("Schmidt number must be >= 1");
  DoubleGaussianJsa jsa;
  jsa.center = pump_center_omega;
  // The sum-coordinate factor is the pump amplitude spectrum itself, so
  // its FWHM in (w + w') equals the pump FWHM: exp(-S^2/(4 s+^2)) = 1/2
  // at S = 2 s+ sqrt(ln2).
  jsa.sigma_plus = pump_fwhm_omega / (4.0 * std::sqrt(std::numbers::ln2));
  const double q = std::sqrt((schmidt_k - 1.0) / (schmidt_k + 1.0));
  jsa.sigma_minus = jsa.sigma_plus * (1.0 + q) / (1.0 - q);
  return jsa;
}

JsaSchmidt jsa_schmidt_oracle(const DoubleGaussianJsa& jsa, const SpectralGrid& grid) {
  const int np = grid.n_points();
  Eigen::MatrixXd f(np, np);
  for (int i = 0; i < np; ++i) {
    const double wa = grid.samples()[i];
    for (int j = 0; j < np; ++j)
      f(i, j) = jsa.value(wa, grid.samples()[j]);
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(f, Eigen::ComputeThinU);
  JsaSchmidt out;
  out.singular_values = svd.singularValues();
  const double norm = out.singular_values.norm();
  if (norm <= 0.0) throw precision_error("JSA discretization vanished on this grid");
  out.singular_values /= norm;
  out.modes = svd.matrixU() / std::sqrt(grid.step());
  const double sum4 = out.singular_values.array().square().square().sum();
  out.schmidt_number = 1.0 / sum4;
  return out;
}

}  // namespace photsub
