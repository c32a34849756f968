#include "photsub/wigner.hpp"

#include <cmath>
#include <numbers>

#include "numerics.hpp"
#include "photsub/errors.hpp"

namespace photsub {

TargetState TargetState::from_mu(double mu) {
  if (mu < 0.0 || mu >= 1.0) throw domain_error("target mu must be in [0, 1)");
  return {(1.0 + mu) / (1.0 - mu), mu};
}

TargetState TargetState::from_zeta(double zeta) {
  if (zeta < 0.0) throw domain_error("target zeta must be non-negative");
  return from_mu(std::tanh(zeta));
}

double QuadGaussWigner::value(double x, double y) const {
  const double envelope = std::exp(-0.5 * x * x / sigma_x2 - 0.5 * y * y / sigma_y2) /
                          (2.0 * std::numbers::pi * std::sqrt(sigma_x2 * sigma_y2));
  return envelope * (a + b * x * x + c * y * y);
}

double QuadGaussWigner::integral() const { return a + b * sigma_x2 + c * sigma_y2; }

WignerGridSpec WignerGridSpec::for_state(const QuadGaussWigner& w, int n) {
  const double extent =
      6.0 * std::max({std::sqrt(w.sigma_x2), std::sqrt(w.sigma_y2), 1.0});
  return {extent, extent, n, n};
}

WignerGridSpec WignerGridSpec::refined() const {
  return {x_max, y_max, 2 * nx - 1, 2 * ny - 1};
}

WignerGrid sample_wigner(const QuadGaussWigner& w, const WignerGridSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw argument_error("Wigner grid needs >= 2 points per axis");
  WignerGrid out;
  out.x_axis = Eigen::VectorXd::LinSpaced(spec.nx, -spec.x_max, spec.x_max);
  out.y_axis = Eigen::VectorXd::LinSpaced(spec.ny, -spec.y_max, spec.y_max);
  const double dx = out.x_axis[1] - out.x_axis[0];
  const double dy = out.y_axis[1] - out.y_axis[0];
  out.cell_area = dx * dy;
  out.values.resize(spec.nx, spec.ny);
  const double norm = 1.0 / (2.0 * std::numbers::pi * std::sqrt(w.sigma_x2 * w.sigma_y2));
  Eigen::ArrayXd gx(spec.nx), gy(spec.ny);
  for (int i = 0; i < spec.nx; ++i)
    gx[i] = std::exp(-0.5 * out.x_axis[i] * out.x_axis[i] / w.sigma_x2);
  for (int j = 0; j < spec.ny; ++j)
    gy[j] = std::exp(-0.5 * out.y_axis[j] * out.y_axis[j] / w.sigma_y2);
  for (int i = 0; i < spec.nx; ++i) {
    const double x2 = out.x_axis[i] * out.x_axis[i];
    for (int j = 0; j < spec.ny; ++j) {
      const double y2 = out.y_axis[j] * out.y_axis[j];
      out.values(i, j) = norm * gx[i] * gy[j] * (w.a + w.b * x2 + w.c * y2);
    }
  }
  return out;
}

double WignerGrid::integral() const { return values.sum() * cell_area; }

// ---------------------------------------------------------------------------

HeraldedStateParams make_heralded_params(const GammaMatrix& gamma, const LoProjection& lo,
                                         const SqueezingSpectrum& squeezing) {
  const int n = gamma.n_modes;
  if (lo.c.size() != n || squeezing.n_modes() != n)
    throw argument_error("gamma, LO and squeezing dimensions disagree");

  HeraldedStateParams p;
  p.c = lo.c;
  p.mu = squeezing.mu;
  p.n_mean = squeezing.n_mean;
  p.gamma_diag = gamma.values.diagonal();
  p.sigma_x2 = 0.5 * (lo.c.array().square() * (1.0 + p.mu) / (1.0 - p.mu)).sum();
  p.sigma_y2 = 0.5 * (lo.c.array().square() * (1.0 - p.mu) / (1.0 + p.mu)).sum();
  p.p_norm = (p.gamma_diag.array() * p.n_mean).sum();
  if (p.p_norm <= 0.0)
    throw domain_error("nothing to herald: P = sum gamma_nn n_n vanished");

  const Eigen::VectorXd vx = (p.mu * lo.c.array() / (1.0 - p.mu)).matrix();
  const Eigen::VectorXd vy = (p.mu * lo.c.array() / (1.0 + p.mu)).matrix();
  p.sum_x = vx.dot(gamma.values * vx);
  p.sum_y = vy.dot(gamma.values * vy);
  return p;
}

QuadGaussWigner wigner_heralded(const HeraldedStateParams& p) {
  QuadGaussWigner w;
  w.sigma_x2 = p.sigma_x2;
  w.sigma_y2 = p.sigma_y2;
  const double sx2 = p.sigma_x2, sy2 = p.sigma_y2;
  w.a = (p.p_norm - p.sum_x / (2.0 * sx2) - p.sum_y / (2.0 * sy2)) / p.p_norm;
  w.b = p.sum_x / (2.0 * sx2 * sx2) / p.p_norm;
  w.c = p.sum_y / (2.0 * sy2 * sy2) / p.p_norm;
  return w;
}

WignerGrid wigner_heralded(const HeraldedStateParams& p, const WignerGridSpec& spec) {
  return sample_wigner(wigner_heralded(p), spec);
}

QuadGaussWigner wigner_no_filter(const SqueezingSpectrum& squeezing, const Eigen::VectorXd& c) {
  const int n = squeezing.n_modes();
  if (c.size() != n) throw argument_error("LO coefficients do not match squeezing spectrum");
  const double n_total = squeezing.n_mean.sum();
  if (n_total <= 0.0) throw domain_error("no squeezing: nothing to herald");

  const double sx2 = 0.5 * (c.array().square() * (1.0 + squeezing.mu) / (1.0 - squeezing.mu)).sum();
  const double sy2 = 0.5 * (c.array().square() * (1.0 - squeezing.mu) / (1.0 + squeezing.mu)).sum();

  QuadGaussWigner w;
  w.sigma_x2 = sx2;
  w.sigma_y2 = sy2;
  double a = 0.0, b = 0.0, cc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double pk = squeezing.n_mean[k] / n_total;
    const double ck2 = c[k] * c[k];
    const QuadGaussWigner wk = wigner_subtracted_component(k, squeezing, sx2, sy2);
    a += pk * (ck2 * wk.a + (1.0 - ck2));  // SVS bracket is 1
    b += pk * ck2 * wk.b;
    cc += pk * ck2 * wk.c;
  }
  w.a = a;
  w.b = b;
  w.c = cc;
  return w;
}

WignerGrid wigner_no_filter(const SqueezingSpectrum& squeezing, const Eigen::VectorXd& c,
                            const WignerGridSpec& spec) {
  return sample_wigner(wigner_no_filter(squeezing, c), spec);
}

QuadGaussWigner wigner_subtracted_component(int k, const SqueezingSpectrum& squeezing,
                                            double sigma_x2, double sigma_y2) {
  if (k < 0 || k >= squeezing.n_modes()) throw argument_error("mode index out of range");
  const double mu = squeezing.mu[k];
  QuadGaussWigner w;
  w.sigma_x2 = sigma_x2;
  w.sigma_y2 = sigma_y2;
  const double rx = (1.0 + mu) / (1.0 - mu);
  const double ry = (1.0 - mu) / (1.0 + mu);
  w.a = 1.0 - rx / (2.0 * sigma_x2) - ry / (2.0 * sigma_y2);
  w.b = rx / (2.0 * sigma_x2 * sigma_x2);
  w.c = ry / (2.0 * sigma_y2 * sigma_y2);
  return w;
}

QuadGaussWigner wigner_svs(double sigma_x2, double sigma_y2) {
  return {sigma_x2, sigma_y2, 1.0, 0.0, 0.0};
}

QuadGaussWigner wigner_target(const TargetState& t) {
  return {t.s / 2.0, 1.0 / (2.0 * t.s), -1.0, 2.0 / t.s, 2.0 * t.s};
}

WignerGrid wigner_target(const TargetState& t, const WignerGridSpec& spec) {
  return sample_wigner(wigner_target(t), spec);
}

// ---------------------------------------------------------------------------

double negativity(const WignerGrid& w) {
  const double peak = w.values.cwiseAbs().maxCoeff();
  if (peak <= 0.0) throw precision_error("empty Wigner grid");
  // Boundary-decay check: a grid that cuts the state off raises instead of
  // silently under-integrating.
  double boundary = 0.0;
  const int nx = static_cast<int>(w.values.rows());
  const int ny = static_cast<int>(w.values.cols());
  for (int i = 0; i < nx; ++i) {
    boundary = std::max(boundary, std::abs(w.values(i, 0)));
    boundary = std::max(boundary, std::abs(w.values(i, ny - 1)));
  }
  for (int j = 0; j < ny; ++j) {
    boundary = std::max(boundary, std::abs(w.values(0, j)));
    boundary = std::max(boundary, std::abs(w.values(nx - 1, j)));
  }
  if (boundary > 1e-5 * peak)
    throw precision_error("Wigner grid too small for negativity", boundary / peak);

  const double abs_volume = w.values.cwiseAbs().sum() * w.cell_area;
  double ng = 0.5 * (abs_volume - 1.0);
  if (ng < 0.0) {
    if (ng < -1e-6)
      throw precision_error("negativity integration inconsistent", -ng);
    ng = 0.0;
  }
  return ng;
}

double negativity(const QuadGaussWigner& w) {
  if (w.a >= 0.0) return 0.0;  // bracket non-negative everywhere (b, c >= 0)
  if (w.b < -1e-14 || w.c < -1e-14)
    throw argument_error("negativity closed form expects b, c >= 0");
  const double sx = std::sqrt(w.sigma_x2), sy = std::sqrt(w.sigma_y2);

  // Region a + b x^2 + c y^2 < 0. For each |x| < x0 the y-slab integral of
  // -W is erf-exact; the remaining x-integrand vanishes like
  // (x0 - x)^(3/2), which x = x0 sin(theta) turns analytic.
  const bool x_bounded = w.b > 0.0;
  const bool y_bounded = w.c > 0.0;

  auto slab = [&](double x) {
    const double rem = -(w.a + w.b * x * x);
    if (rem <= 0.0) return 0.0;
    const double y0 = y_bounded ? std::sqrt(rem / w.c) : 8.0 * sy;
    const double arg = y0 / (std::numbers::sqrt2 * sy);
    const double e0 = std::sqrt(2.0 * std::numbers::pi) * sy * std::erf(arg);
    const double e2 =
        w.sigma_y2 * e0 - 2.0 * w.sigma_y2 * y0 * std::exp(-y0 * y0 / (2.0 * w.sigma_y2));
    const double val = (w.a + w.b * x * x) * e0 + w.c * e2;
    return -val * std::exp(-0.5 * x * x / w.sigma_x2);
  };

  const auto& [gl_x, gl_w] = detail::gauss_legendre(160);
  double total = 0.0;
  if (x_bounded) {
    const double x0 = std::sqrt(-w.a / w.b);
    for (int i = 0; i < gl_x.size(); ++i) {
      const double theta = 0.25 * std::numbers::pi * (gl_x[i] + 1.0);  // [0, pi/2]
      const double x = x0 * std::sin(theta);
      total += gl_w[i] * 0.25 * std::numbers::pi * x0 * std::cos(theta) * slab(x);
    }
  } else {
    const double x_max = 8.0 * sx;
    for (int i = 0; i < gl_x.size(); ++i) {
      const double x = 0.5 * x_max * (gl_x[i] + 1.0);
      total += gl_w[i] * 0.5 * x_max * slab(x);
    }
  }
  total *= 2.0;  // x -> -x symmetry
  return total / (2.0 * std::numbers::pi * sx * sy);
}

double wigner_overlap(const QuadGaussWigner& w1, const QuadGaussWigner& w2) {
  const double ax = 0.5 / w1.sigma_x2 + 0.5 / w2.sigma_x2;
  const double ay = 0.5 / w1.sigma_y2 + 0.5 / w2.sigma_y2;
  const double m0 = std::numbers::pi / std::sqrt(ax * ay);
  const double bracket = w1.a * w2.a + (w1.a * w2.b + w2.a * w1.b) / (2.0 * ax) +
                         (w1.a * w2.c + w2.a * w1.c) / (2.0 * ay) +
                         3.0 * w1.b * w2.b / (4.0 * ax * ax) +
                         3.0 * w1.c * w2.c / (4.0 * ay * ay) +
                         (w1.b * w2.c + w2.b * w1.c) / (4.0 * ax * ay);
  const double norms = 4.0 * std::numbers::pi * std::numbers::pi *
                       std::sqrt(w1.sigma_x2 * w1.sigma_y2 * w2.sigma_x2 * w2.sigma_y2);
  return 2.0 * std::numbers::pi * m0 * bracket / norms;
}

double fidelity_closed_form(const HeraldedStateParams& p, const TargetState& target) {
  const double s = target.s;
  const double sx2 = p.sigma_x2, sy2 = p.sigma_y2;
  const double cap_p = p.p_norm;
  const double cap_a = cap_p - p.sum_x / (2.0 * sx2) - p.sum_y / (2.0 * sy2);
  const double cap_b = p.sum_x / (2.0 * sx2 * sx2);
  const double cap_c = p.sum_y / (2.0 * sy2 * sy2);

  const double dx = 1.0 / sx2 + 2.0 / s;   // = 2 alpha_x
  const double dy = 1.0 / sy2 + 2.0 * s;   // = 2 alpha_y

  const double bracket = -cap_a + (2.0 * cap_a / s - cap_b) / dx +
                         (2.0 * cap_a * s - cap_c) / dy +
                         (2.0 * cap_b / s) * 3.0 / (dx * dx) +
                         (2.0 * cap_c * s) * 3.0 / (dy * dy) +
                         (2.0 * cap_c / s + 2.0 * cap_b * s) / (dx * dy);
  return 2.0 * bracket / (cap_p * std::sqrt(sx2 * sy2) * std::sqrt(dx * dy));
}

double fidelity_numeric(const WignerGrid& w1, const WignerGrid& w2) {
  if (w1.x_axis.size() != w2.x_axis.size() || w1.y_axis.size() != w2.y_axis.size() ||
      w1.x_axis != w2.x_axis || w1.y_axis != w2.y_axis)
    throw argument_error("fidelity_numeric requires identical grids");
  return 2.0 * std::numbers::pi * (w1.values.array() * w2.values.array()).sum() *
         w1.cell_area;
}

double heralded_photon_purity(const GammaMatrix& gamma, const Eigen::ArrayXd& zeta) {
  if (zeta.size() != gamma.n_modes)
    throw argument_error("zeta length does not match gamma");
  const Eigen::MatrixXd m =
      gamma.values.array() * (zeta.matrix() * zeta.matrix().transpose()).array();
  const double trace = m.trace();
  if (trace <= 0.0) throw domain_error("heralded photon state has zero weight");
  const double trace_sq = m.squaredNorm();  // tr(M^2) for symmetric M
  return trace_sq / (trace * trace);
}

}  // namespace photsub
