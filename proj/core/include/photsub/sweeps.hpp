#ifndef PHOTSUB_SWEEPS_HPP
#define PHOTSUB_SWEEPS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "photsub/filters.hpp"
#include "photsub/jsa.hpp"
#include "photsub/overlaps.hpp"
#include "photsub/wigner.hpp"

namespace photsub {

// Physical scenario shared by all drivers: degenerate SPDC around the
// signal wavelength, pumped at half that wavelength. Defaults mirror the
// telecom case (signal 1560 nm, pump 780 nm / 0.5 nm FWHM, zeta0 at -3 dB
// of noise reduction, subtraction reflectivity r_s^2 = 0.05).
struct Scenario {
  double signal_wavelength = 1560e-9;  // m
  double pump_wavelength = 780e-9;     // m
  double pump_fwhm_wavelength = 0.5e-9;
  double zeta0_db = 3.0;
  double rs2 = 0.05;
  int n_modes = 0;       // 0 = automatic
  int grid_points = 0;   // 0 = default

  double omega_signal() const;
  double pump_fwhm_omega() const;
  double zeta0() const;
  double nm_to_omega(double nm) const;     // FWHM at the signal wavelength
  double omega_to_nm(double omega) const;

  DoubleGaussianJsa jsa_for(double schmidt_k) const;
  FilterProfile make_filter(FilterKind kind, double fwhm_nm) const;

  // Mode count: spec'd geometric coverage, raised when narrow/wide LOs
  // need more modes to project onto (cap 200 either way).
  int mode_count(double schmidt_k, double min_lo_nm, double max_lo_nm) const;
};

struct HeraldedPoint {
  double negativity = 0.0;
  double fidelity = 0.0;
  double success_probability = 0.0;  // P * theta^2
  double p_norm = 0.0;
  double lo_residual = 0.0;
};

// One evaluation of the full pipeline at (K, filter, LO). The gamma
// matrix and basis are cached per (K, filter) by PointEvaluator below.
class PointEvaluator {
 public:
  PointEvaluator(const Scenario& scenario, double schmidt_k,
                 FilterKind filter_kind, double filter_fwhm_nm,
                 double min_lo_nm, double max_lo_nm);

  HeraldedPoint at_lo(double lo_fwhm_nm) const;
  HeraldedStateParams params_at_lo(double lo_fwhm_nm) const;
  double tau_s() const { return tau_s_; }
  const SupermodeBasis& basis() const { return basis_; }
  const GammaMatrix& gamma() const { return gamma_; }
  const SqueezingSpectrum& squeezing() const { return squeezing_; }

 private:
  Scenario scenario_;
  double tau_s_ = 0.0;
  SupermodeBasis basis_;
  SqueezingSpectrum squeezing_;
  GammaMatrix gamma_;
  double theta2_ = 0.0;
  double target_s_ = 1.0;
};

struct SweepSpec {
  std::vector<double> k_values;
  std::vector<double> lo_fwhm_values_nm;
  FilterKind filter_kind = FilterKind::Identity;
  double filter_fwhm_nm = 0.0;
  Scenario scenario;
};

struct SweepRow {
  double k = 0.0;
  double lo_fwhm_nm = 0.0;
  double negativity = 0.0;
  double success_probability = 0.0;
  std::string error;  // empty on success; value columns are NaN otherwise
};

struct SweepTable {
  std::vector<SweepRow> rows;
  void write_csv(std::ostream& os) const;
};

// One row per (K, lo) pair, K-major order, deterministic. Rows are
// independent; K-slices are evaluated in parallel and merged by index.
SweepTable sweep_negativity(const SweepSpec& spec);

struct DesignResult {
  double k = 1.0;
  double optimal_lo_fwhm_nm = 0.0;
  double optimal_filter_fwhm_nm = 0.0;
  double achieved_negativity = 0.0;
  double achieved_fidelity = 0.0;
  double success_probability = 0.0;
  bool degenerate_lo = false;  // flat landscape, LO taken at scan midpoint
};

// Golden-section maximization of N_g over the LO FWHM to 0.01 nm, seeded
// by a 32-point scan (unimodality not assumed).
DesignResult optimal_lo(const Scenario& scenario, double schmidt_k,
                        FilterKind filter_kind, double filter_fwhm_nm,
                        double lo_min_nm, double lo_max_nm);

// Largest filter FWHM whose LO-optimized fidelity still reaches target_f
// (wider filters trade fidelity for success probability), by bisection
// with nested LO optimization. Throws unreachable_error when even the
// narrowest searched filter (0.05 nm) cannot reach the target.
DesignResult design_for_fidelity(const Scenario& scenario, double schmidt_k,
                                 double target_f, FilterKind filter_kind = FilterKind::Rectangular,
                                 double fwhm_min_nm = 0.05, double fwhm_max_nm = 8.0,
                                 double lo_min_nm = 0.3, double lo_max_nm = 8.0);

// P * theta^2 with theta = 2 asin(r_s).
double success_probability(const GammaMatrix& gamma, const SqueezingSpectrum& squeezing,
                           double r_s);

// Scalar golden-section search utilities (maximization).
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

}  // namespace photsub

#endif
