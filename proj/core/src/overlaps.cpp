#include "photsub/overlaps.hpp"

#include <quadmath.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "numerics.hpp"
#include "photsub/errors.hpp"

namespace photsub {

GammaMatrix GammaMatrix::identity(int n_modes) {
  return {n_modes, Eigen::MatrixXd::Identity(n_modes, n_modes)};
}

GammaMatrix gamma_quadrature(const Eigen::MatrixXd& mode_samples,
                             const SpectralGrid& grid, const FilterProfile& filter) {
  if (filter.kind == FilterKind::DeltaLimit)
    throw unsupported_error("delta-limit gamma is analytic; quadrature unsupported");
  if (mode_samples.cols() != grid.n_points())
    throw argument_error("mode samples do not match the grid");

  const int np = grid.n_points();
  Eigen::ArrayXd weight(np);
  for (int i = 0; i < np; ++i) {
    const double t = filter.transmission(grid.samples()[i]);
    weight[i] = t * t * grid.step();
  }
  Eigen::MatrixXd weighted = mode_samples;
  weighted.array().rowwise() *= weight.transpose();
  Eigen::MatrixXd g = weighted * mode_samples.transpose();
  GammaMatrix out;
  out.n_modes = static_cast<int>(mode_samples.rows());
  out.values = 0.5 * (g + g.transpose());
  return out;
}

GammaMatrix gamma_quadrature(const SupermodeBasis& basis, const FilterProfile& filter) {
  return gamma_quadrature(basis.samples, basis.grid, filter);
}

SpectralGrid band_aligned_grid(double center, double band_fwhm, int n_across_band,
                               double margin_factor) {
  if (band_fwhm <= 0.0) throw argument_error("band width must be positive");
  if (n_across_band < 3) throw argument_error("need at least 3 samples across the band");
  int n_in = n_across_band | 1;  // odd: band edges fall mid-cell
  const double step = band_fwhm / n_in;
  const int n_side = static_cast<int>(std::ceil(margin_factor * 0.5 * band_fwhm / step));
  return SpectralGrid(center, n_side * step, 2 * n_side + 1);
}

// ---------------------------------------------------------------------------
// Closed form for a Gaussian filter. The finite sum
// alternates and cancels down to ~1e-18 of its largest term at order 40,
// so it is evaluated in binary128 with the term ratio
//   t_{m+1}/t_m = -(k-m)(n-m) / ((m+1)(2(S-m)-1)(1-a^2)),  S=(k+n)/2,
// starting from t_0 = (a^2-1)^S (2S)!/S!.

namespace {

std::vector<__float128> f128_factorials(int n_max) {
  std::vector<__float128> f(n_max + 1);
  f[0] = 1;
  for (int i = 1; i <= n_max; ++i) f[i] = f[i - 1] * i;
  return f;
}

}  // namespace

GammaMatrix gamma_gaussian_analytic(double tau_s, int n_modes, double filter_fwhm) {
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  if (n_modes < 1) throw argument_error("n_modes must be >= 1");
  if (filter_fwhm <= 0.0) throw domain_error("filter FWHM must be positive");

  const double taubar2 =
      8.0 * std::numbers::ln2 / (filter_fwhm * filter_fwhm) + tau_s * tau_s;
  const __float128 a2 = static_cast<__float128>(tau_s) * tau_s / taubar2;
  const __float128 a = sqrtq(a2);
  const __float128 one_minus_a2 = 1 - a2;

  const auto fact = f128_factorials(2 * n_modes);

  GammaMatrix out;
  out.n_modes = n_modes;
  out.values = Eigen::MatrixXd::Zero(n_modes, n_modes);

  for (int k = 0; k < n_modes; ++k) {
    for (int n = k; n < n_modes; ++n) {
      if ((k + n) % 2 != 0) continue;
      const int s = (k + n) / 2;
      __float128 term = fact[2 * s] / fact[s];
      {
        __float128 p = 1;
        const __float128 base = a2 - 1;
        for (int i = 0; i < s; ++i) p *= base;
        term *= p;
      }
      __float128 sum = 0, max_abs = 0;
      const int m_max = std::min(k, n);
      for (int m = 0;; ++m) {
        sum += term;
        const __float128 mag = fabsq(term);
        if (mag > max_abs) max_abs = mag;
        if (m == m_max) break;
        term *= -static_cast<__float128>(k - m) * (n - m) /
                ((m + 1) * (2.0 * (s - m) - 1.0) * one_minus_a2);
      }
      const __float128 pre = a / sqrtq(scalbnq(fact[k] * fact[n], k + n));
      const double error_estimate =
          static_cast<double>(pre * max_abs) * 3e-33 * (m_max + 1);
      if (error_estimate > 1e-12) {
        std::ostringstream msg;
        msg << "analytic Gaussian gamma entry (" << k << "," << n
            << ") loses too many digits to cancellation; use the quadrature route";
        throw precision_error(msg.str(), error_estimate);
      }
      const double value = static_cast<double>(pre * sum);
      out.values(k, n) = value;
      out.values(n, k) = value;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rectangular filter: gamma_{k,n} = int_{-L}^{L} h_k h_n dx with
// L = tau_s dwF / 2, by panelled Gauss-Legendre on the normalized Hermite
// functions (zero by parity for odd k+n).

GammaMatrix gamma_rectangular_analytic(double tau_s, int n_modes, double filter_fwhm) {
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  if (n_modes < 1) throw argument_error("n_modes must be >= 1");
  if (filter_fwhm <= 0.0) throw domain_error("filter FWHM must be positive");

  const double limit = 0.5 * tau_s * filter_fwhm;
  const double support = std::sqrt(2.0 * (n_modes - 1) + 1.0) + 10.0;
  const double l_eff = std::min(limit, support);

  // Panel short enough to resolve the fastest oscillation (wavelength
  // ~ 2 pi / sqrt(2N+1)) with 24 nodes.
  const int panels =
      std::max(8, static_cast<int>(std::ceil(l_eff * std::sqrt(2.0 * n_modes + 1.0) / 4.0)));
  constexpr int nodes_per_panel = 24;
  const auto& [gl_x, gl_w] = detail::gauss_legendre(nodes_per_panel);

  const int total = 2 * panels * nodes_per_panel;
  Eigen::ArrayXd x(total), w(total);
  int idx = 0;
  for (int p = -panels; p < panels; ++p) {
    const double lo = l_eff * p / panels;
    const double hi = l_eff * (p + 1) / panels;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int j = 0; j < nodes_per_panel; ++j) {
      x[idx] = mid + half * gl_x[j];
      w[idx] = half * gl_w[j];
      ++idx;
    }
  }

  // All orders at all nodes via the orthonormal recurrence (x is already
  // the dimensionless Hermite argument).
  Eigen::MatrixXd h(n_modes, total);
  constexpr double quarter_root_pi_inv = 0.7511255444649425;
  for (int i = 0; i < total; ++i) {
    const double xi = x[i];
    double h_prev = quarter_root_pi_inv * std::exp(-0.5 * xi * xi);
    h(0, i) = h_prev;
    if (n_modes == 1) continue;
    double hc = std::numbers::sqrt2 * xi * h_prev;
    h(1, i) = hc;
    for (int n = 2; n < n_modes; ++n) {
      const double h_next = std::sqrt(2.0 / n) * xi * hc - std::sqrt((n - 1.0) / n) * h_prev;
      h_prev = hc;
      hc = h_next;
      h(n, i) = h_next;
    }
  }

  Eigen::MatrixXd weighted = h;
  weighted.array().rowwise() *= w.transpose();
  Eigen::MatrixXd g = weighted * h.transpose();
  g = 0.5 * (g + g.transpose()).eval();
  for (int k = 0; k < n_modes; ++k)
    for (int n = 0; n < n_modes; ++n)
      if ((k + n) % 2 != 0) g(k, n) = 0.0;  // exact by parity

  return {n_modes, std::move(g)};
}

// ---------------------------------------------------------------------------

LoProjection lo_coefficients(const SupermodeBasis& basis, double lo_fwhm) {
  if (lo_fwhm <= 0.0) throw domain_error("LO FWHM must be positive");
  const auto& grid = basis.grid;
  const int np = grid.n_points();

  Eigen::ArrayXd alpha(np);
  const double coeff = 4.0 * std::numbers::ln2 / (lo_fwhm * lo_fwhm);
  for (int i = 0; i < np; ++i) {
    const double u = grid.samples()[i] - basis.center;
    alpha[i] = std::exp(-coeff * u * u);
  }
  const double norm2 = (alpha * alpha).sum() * grid.step();
  if (norm2 <= 0.0) throw precision_error("LO amplitude vanished on the grid");
  alpha /= std::sqrt(norm2);

  LoProjection lo;
  lo.fwhm_lo = lo_fwhm;
  lo.c = basis.samples * (alpha * grid.step()).matrix();
  const double captured = lo.c.squaredNorm();
  lo.residual = 1.0 - captured;
  lo.leaky = lo.residual > 0.01;
  if (captured <= 0.0) throw precision_error("LO orthogonal to every basis mode");
  lo.c /= std::sqrt(captured);
  return lo;
}

double matched_lo_fwhm(double tau_s) {
  if (tau_s <= 0.0) throw argument_error("tau_s must be positive");
  return 2.0 * std::sqrt(2.0 * std::numbers::ln2) / tau_s;
}

int lo_mode_floor(double tau_s, double lo_fwhm, double tail, int cap) {
  const double tau_alpha2 = 8.0 * std::numbers::ln2 / (lo_fwhm * lo_fwhm);
  const double tau_s2 = tau_s * tau_s;
  const double rho = std::abs(tau_s2 - tau_alpha2) / (tau_s2 + tau_alpha2);
  if (rho < 0.1) return 4;
  const int j = static_cast<int>(std::ceil(std::log(tail) / (2.0 * std::log(rho))));
  return std::clamp(2 * j + 2, 4, cap);
}

}  // namespace photsub
