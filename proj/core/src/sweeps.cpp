#include "photsub/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include "photsub/errors.hpp"
#include "photsub/units.hpp"

namespace photsub {

double Scenario::omega_signal() const { return vacuum_angular_frequency(signal_wavelength); }

double Scenario::pump_fwhm_omega() const {
  return wavelength_fwhm_to_angular(pump_wavelength, pump_fwhm_wavelength);
}

double Scenario::zeta0() const { return zeta_from_noise_reduction_db(zeta0_db); }

double Scenario::nm_to_omega(double nm) const {
  return wavelength_fwhm_to_angular(signal_wavelength, nm * 1e-9);
}

double Scenario::omega_to_nm(double omega) const {
  return angular_fwhm_to_wavelength(signal_wavelength, omega) * 1e9;
}

DoubleGaussianJsa Scenario::jsa_for(double schmidt_k) const {
  return DoubleGaussianJsa::from_pump(vacuum_angular_frequency(pump_wavelength),
                                      pump_fwhm_omega(), schmidt_k);
}

FilterProfile Scenario::make_filter(FilterKind kind, double fwhm_nm) const {
  const double center = omega_signal();
  switch (kind) {
    case FilterKind::Identity: return FilterProfile::identity();
    case FilterKind::Rectangular: return FilterProfile::rectangular(center, nm_to_omega(fwhm_nm));
    case FilterKind::Gaussian: return FilterProfile::gaussian(center, nm_to_omega(fwhm_nm));
    case FilterKind::DeltaLimit: return FilterProfile::delta_limit(center);
  }
  throw argument_error("unknown filter kind");
}

int Scenario::mode_count(double schmidt_k, double min_lo_nm, double max_lo_nm) const {
  if (n_modes > 0) return n_modes;
  const double tau = jsa_for(schmidt_k).tau_s();
  int n = default_mode_count(schmidt_k);
  if (min_lo_nm > 0.0) n = std::max(n, lo_mode_floor(tau, nm_to_omega(min_lo_nm)));
  if (max_lo_nm > 0.0) n = std::max(n, lo_mode_floor(tau, nm_to_omega(max_lo_nm)));
  return std::min(n, 200);
}

// ---------------------------------------------------------------------------

PointEvaluator::PointEvaluator(const Scenario& scenario, double schmidt_k,
                               FilterKind filter_kind, double filter_fwhm_nm,
                               double min_lo_nm, double max_lo_nm)
    : scenario_(scenario) {
  const auto jsa = scenario.jsa_for(schmidt_k);
  tau_s_ = jsa.tau_s();
  const int n_modes = scenario.mode_count(schmidt_k, min_lo_nm, max_lo_nm);
  const double center = scenario.omega_signal();

  const double filter_fwhm =
      filter_kind == FilterKind::Identity ? 0.0 : scenario.nm_to_omega(filter_fwhm_nm);
  const double widest_lo = max_lo_nm > 0.0 ? scenario.nm_to_omega(max_lo_nm) : 0.0;
  const int grid_points =
      scenario.grid_points > 0 ? scenario.grid_points : default_grid_points;
  const auto grid =
      default_grid(center, tau_s_, n_modes, {filter_fwhm, widest_lo}, grid_points);

  basis_ = build_basis(tau_s_, center, n_modes, grid);
  squeezing_ = squeezing_from_schmidt(schmidt_k, scenario.zeta0(), n_modes);

  switch (filter_kind) {
    case FilterKind::Identity:
      gamma_ = GammaMatrix::identity(n_modes);
      break;
    case FilterKind::Rectangular:
      // Exact band-limited overlaps; a uniform omega grid would need the
      // band edges aligned with its cells.
      gamma_ = gamma_rectangular_analytic(tau_s_, n_modes, filter_fwhm);
      break;
    case FilterKind::Gaussian:
      // Smooth weight: the full-line Riemann sum is spectrally accurate,
      // and unlike the closed form it has no cancellation growth in N.
      gamma_ = gamma_quadrature(basis_, scenario.make_filter(filter_kind, filter_fwhm_nm));
      break;
    case FilterKind::DeltaLimit:
      throw unsupported_error("delta-limit filters: use heralded_photon_purity asymptotics");
  }

  const double r_s = std::sqrt(scenario.rs2);
  const double theta = 2.0 * std::asin(r_s);
  theta2_ = theta * theta;
  target_s_ = TargetState::from_zeta(scenario.zeta0()).s;
}

HeraldedStateParams PointEvaluator::params_at_lo(double lo_fwhm_nm) const {
  if (lo_fwhm_nm <= 0.0) throw argument_error("LO FWHM must be positive");
  const auto lo = lo_coefficients(basis_, scenario_.nm_to_omega(lo_fwhm_nm));
  return make_heralded_params(gamma_, lo, squeezing_);
}

HeraldedPoint PointEvaluator::at_lo(double lo_fwhm_nm) const {
  if (lo_fwhm_nm <= 0.0) throw argument_error("LO FWHM must be positive");
  const auto lo = lo_coefficients(basis_, scenario_.nm_to_omega(lo_fwhm_nm));
  const auto params = make_heralded_params(gamma_, lo, squeezing_);
  HeraldedPoint point;
  point.negativity = negativity(wigner_heralded(params));
  point.fidelity = fidelity_closed_form(params, TargetState{target_s_, std::tanh(scenario_.zeta0())});
  point.p_norm = params.p_norm;
  point.success_probability = params.p_norm * theta2_;
  point.lo_residual = lo.residual;
  return point;
}

// ---------------------------------------------------------------------------

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

struct ScanResult {
  double best_x = 0.0;
  double best_value = -std::numeric_limits<double>::infinity();
  double spread = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
};

ScanResult coarse_scan(const std::function<double(double)>& f, double lo, double hi,
                       int points) {
  std::vector<double> xs(points), vs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = lo + (hi - lo) * i / (points - 1);
    vs[i] = f(xs[i]);
  }
  int best = 0;
  double worst = vs[0];
  for (int i = 1; i < points; ++i) {
    if (vs[i] > vs[best]) best = i;
    worst = std::min(worst, vs[i]);
  }
  ScanResult r;
  r.best_x = xs[best];
  r.best_value = vs[best];
  r.spread = vs[best] - worst;
  r.bracket_lo = xs[std::max(0, best - 1)];
  r.bracket_hi = xs[std::min(points - 1, best + 1)];
  return r;
}

}  // namespace

DesignResult optimal_lo(const Scenario& scenario, double schmidt_k, FilterKind filter_kind,
                        double filter_fwhm_nm, double lo_min_nm, double lo_max_nm) {
  if (!(lo_min_nm > 0.0) || !(lo_max_nm > lo_min_nm))
    throw argument_error("LO search bounds must satisfy 0 < lo < hi");
  PointEvaluator eval(scenario, schmidt_k, filter_kind, filter_fwhm_nm, lo_min_nm, lo_max_nm);
  auto ng = [&](double lo_nm) { return eval.at_lo(lo_nm).negativity; };

  const auto scan = coarse_scan(ng, lo_min_nm, lo_max_nm, 32);
  DesignResult result;
  result.k = schmidt_k;
  result.optimal_filter_fwhm_nm = filter_kind == FilterKind::Identity ? 0.0 : filter_fwhm_nm;
  if (scan.spread < 1e-5) {
    result.degenerate_lo = true;
    result.optimal_lo_fwhm_nm = 0.5 * (lo_min_nm + lo_max_nm);
  } else {
    result.optimal_lo_fwhm_nm =
        golden_section_max(ng, scan.bracket_lo, scan.bracket_hi, 0.01);
  }
  const auto point = eval.at_lo(result.optimal_lo_fwhm_nm);
  result.achieved_negativity = point.negativity;
  result.achieved_fidelity = point.fidelity;
  result.success_probability = point.success_probability;
  return result;
}

DesignResult design_for_fidelity(const Scenario& scenario, double schmidt_k, double target_f,
                                 FilterKind filter_kind, double fwhm_min_nm, double fwhm_max_nm,
                                 double lo_min_nm, double lo_max_nm) {
  if (!(target_f > 0.0 && target_f < 1.0))
    throw argument_error("target fidelity must be in (0, 1)");
  if (filter_kind == FilterKind::Identity || filter_kind == FilterKind::DeltaLimit)
    throw argument_error("design search needs a rectangular or Gaussian filter");

  struct Best {
    double lo_nm = 0.0;
    double fidelity = -1.0;
  };
  auto optimize_lo_for_f = [&](double fwhm_nm) {
    PointEvaluator eval(scenario, schmidt_k, filter_kind, fwhm_nm, lo_min_nm, lo_max_nm);
    auto fid = [&](double lo_nm) { return eval.at_lo(lo_nm).fidelity; };
    const auto scan = coarse_scan(fid, lo_min_nm, lo_max_nm, 32);
    Best best;
    if (scan.spread < 1e-9) {
      best.lo_nm = 0.5 * (lo_min_nm + lo_max_nm);
    } else {
      best.lo_nm = golden_section_max(fid, scan.bracket_lo, scan.bracket_hi, 0.01);
    }
    best.fidelity = fid(best.lo_nm);
    return best;
  };

  const Best at_widest = optimize_lo_for_f(fwhm_max_nm);
  double fwhm_ok, fwhm_bad;
  if (at_widest.fidelity >= target_f) {
    fwhm_ok = fwhm_max_nm;  // even the widest searched filter meets the target
    fwhm_bad = fwhm_max_nm;
  } else {
    const Best at_narrowest = optimize_lo_for_f(fwhm_min_nm);
    if (at_narrowest.fidelity < target_f)
      throw unreachable_error("fidelity target unreachable at the narrowest searched filter",
                              at_narrowest.fidelity);
    fwhm_ok = fwhm_min_nm;
    fwhm_bad = fwhm_max_nm;
    while (fwhm_bad - fwhm_ok > 0.005) {
      const double mid = 0.5 * (fwhm_ok + fwhm_bad);
      if (optimize_lo_for_f(mid).fidelity >= target_f)
        fwhm_ok = mid;
      else
        fwhm_bad = mid;
    }
  }

  const Best final_lo = optimize_lo_for_f(fwhm_ok);
  PointEvaluator eval(scenario, schmidt_k, filter_kind, fwhm_ok, lo_min_nm, lo_max_nm);
  const auto point = eval.at_lo(final_lo.lo_nm);

  DesignResult result;
  result.k = schmidt_k;
  result.optimal_lo_fwhm_nm = final_lo.lo_nm;
  result.optimal_filter_fwhm_nm = fwhm_ok;
  result.achieved_negativity = point.negativity;
  result.achieved_fidelity = point.fidelity;
  result.success_probability = point.success_probability;
  return result;
}

double success_probability(const GammaMatrix& gamma, const SqueezingSpectrum& squeezing,
                           double r_s) {
  if (r_s < 0.0 || r_s > 0.5) throw argument_error("r_s must lie in [0, 0.5]");
  if (squeezing.n_modes() != gamma.n_modes)
    throw argument_error("gamma and squeezing dimensions disagree");
  const double p = (gamma.values.diagonal().array() * squeezing.n_mean).sum();
  const double theta = 2.0 * std::asin(r_s);
  return p * theta * theta;
}

// ---------------------------------------------------------------------------

namespace {

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void SweepTable::write_csv(std::ostream& os) const {
  os << "k,lo_fwhm_nm,negativity,p_theta2,error\n";
  for (const auto& row : rows) {
    std::string error = row.error;
    for (char& ch : error)
      if (ch == ',' || ch == '\n') ch = ';';
    os << format_sig12(row.k) << ',' << format_sig12(row.lo_fwhm_nm) << ','
       << format_sig12(row.negativity) << ',' << format_sig12(row.success_probability)
       << ',' << error << '\n';
  }
}

SweepTable sweep_negativity(const SweepSpec& spec) {
  if (spec.k_values.empty() || spec.lo_fwhm_values_nm.empty())
    throw argument_error("sweep needs at least one K and one LO value");

  const double lo_min =
      *std::min_element(spec.lo_fwhm_values_nm.begin(), spec.lo_fwhm_values_nm.end());
  const double lo_max =
      *std::max_element(spec.lo_fwhm_values_nm.begin(), spec.lo_fwhm_values_nm.end());

  const std::size_t n_lo = spec.lo_fwhm_values_nm.size();
  SweepTable table;
  table.rows.resize(spec.k_values.size() * n_lo);

  // K-slices are independent; each thread owns whole slices so results are
  // written once, by index, and the output is identical to a serial run.
  auto run_slice = [&](std::size_t ki) {
    const double k = spec.k_values[ki];
    SweepRow* out = table.rows.data() + ki * n_lo;
    try {
      PointEvaluator eval(spec.scenario, k, spec.filter_kind, spec.filter_fwhm_nm, lo_min,
                          lo_max);
      for (std::size_t li = 0; li < n_lo; ++li) {
        out[li].k = k;
        out[li].lo_fwhm_nm = spec.lo_fwhm_values_nm[li];
        try {
          const auto point = eval.at_lo(spec.lo_fwhm_values_nm[li]);
          out[li].negativity = point.negativity;
          out[li].success_probability = point.success_probability;
        } catch (const std::exception& e) {
          out[li].negativity = std::numeric_limits<double>::quiet_NaN();
          out[li].success_probability = std::numeric_limits<double>::quiet_NaN();
          out[li].error = e.what();
        }
      }
    } catch (const std::exception& e) {
      for (std::size_t li = 0; li < n_lo; ++li) {
        out[li].k = k;
        out[li].lo_fwhm_nm = spec.lo_fwhm_values_nm[li];
        out[li].negativity = std::numeric_limits<double>::quiet_NaN();
        out[li].success_probability = std::numeric_limits<double>::quiet_NaN();
        out[li].error = e.what();
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(hw, spec.k_values.size()));
  if (n_threads <= 1) {
    for (std::size_t ki = 0; ki < spec.k_values.size(); ++ki) run_slice(ki);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t ki = t; ki < spec.k_values.size(); ki += n_threads) run_slice(ki);
      });
    }
    for (auto& th : pool) th.join();
  }
  return table;
}

}  // namespace photsub
