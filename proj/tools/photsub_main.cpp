// photsub: heralded photon-subtraction simulator CLI.
//
// Subcommands: basis, gamma, wigner, negativity, fidelity, sweep,
// optimize-lo, design, purity. Exit codes: 0 ok, 2 argument error,
// 3 precision error, 4 unreachable design target.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "photsub/errors.hpp"
#include "photsub/filtered_basis.hpp"
#include "photsub/jsa.hpp"
#include "photsub/overlaps.hpp"
#include "photsub/svg_plot.hpp"
#include "photsub/sweeps.hpp"
#include "photsub/units.hpp"
#include "photsub/wigner.hpp"

namespace {

using namespace photsub;

struct Options {
  double k = 1.0;
  double lo_fwhm_nm = 0.0;  // 0 = LO matched to psi_0
  std::string filter = "none";
  double filter_fwhm_nm = 0.0;
  double zeta0_db = 3.0;
  double rs2 = 0.05;
  double signal_nm = 1560.0;
  double pump_nm = 780.0;
  double pump_fwhm_nm = 0.5;
  int grid_points = 0;
  int modes = 0;
  std::string out;
  std::string plot;

  // sweep ranges
  double k_from = 1.0, k_to = 9.0;
  int k_count = 33;
  double lo_from = 0.5, lo_to = 6.0;
  int lo_count = 45;

  // searches
  double lo_min = 0.3, lo_max = 8.0;
  double target_f = 0.95;
  double fwhm_min = 0.05, fwhm_max = 8.0;

  // wigner output
  int wigner_points = 201;
  std::string method = "auto";  // gamma route
};

Scenario make_scenario(const Options& o) {
  Scenario sc;
  sc.signal_wavelength = o.signal_nm * 1e-9;
  sc.pump_wavelength = o.pump_nm * 1e-9;
  sc.pump_fwhm_wavelength = o.pump_fwhm_nm * 1e-9;
  sc.zeta0_db = o.zeta0_db;
  sc.rs2 = o.rs2;
  sc.n_modes = o.modes;
  sc.grid_points = o.grid_points;
  return sc;
}

FilterKind parse_filter(const Options& o) {
  if (o.filter == "none") return FilterKind::Identity;
  if (o.filter == "rect") return FilterKind::Rectangular;
  if (o.filter == "gauss") return FilterKind::Gaussian;
  throw argument_error("unknown filter kind: " + o.filter + " (use none|rect|gauss)");
}

void require_filter_width(const Options& o, FilterKind kind) {
  if (kind != FilterKind::Identity && !(o.filter_fwhm_nm > 0.0))
    throw argument_error("--filter-fwhm-nm must be positive for rect/gauss filters");
}

double effective_lo_nm(const Options& o, const Scenario& sc) {
  if (o.lo_fwhm_nm > 0.0) return o.lo_fwhm_nm;
  return sc.omega_to_nm(matched_lo_fwhm(sc.jsa_for(o.k).tau_s()));
}

std::string sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::ostream& open_output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw argument_error("cannot open output file: " + o.out);
  return file;
}

// ---------------------------------------------------------------------------

int cmd_basis(const Options& o) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const double tau = sc.jsa_for(o.k).tau_s();
  const double center = sc.omega_signal();
  const int n_modes = o.modes > 0 ? o.modes : 8;
  const double filter_fwhm = kind == FilterKind::Identity ? 0.0 : sc.nm_to_omega(o.filter_fwhm_nm);
  const auto grid = default_grid(center, tau, std::max(n_modes, 16), {filter_fwhm},
                                 o.grid_points > 0 ? o.grid_points : 1025);
  const auto basis = build_basis(tau, center, n_modes, grid);

  Eigen::MatrixXd parallel(0, grid.n_points()), perp(0, grid.n_points());
  if (kind != FilterKind::Identity) {
    const auto filter = sc.make_filter(kind, o.filter_fwhm_nm);
    const auto fb = build_filtered_basis(basis, filter, n_modes, 6);
    parallel = fb.parallel;
    perp = fb.perp;
  }

  std::ofstream file;
  auto& os = open_output(o, file);
  os << "omega_rad_s,detuning_nm";
  for (int m = 0; m < n_modes; ++m) os << ",psi_" << m;
  for (int m = 0; m < std::min<int>(3, parallel.rows()); ++m) os << ",par_" << m;
  for (int m = 0; m < std::min<int>(3, perp.rows()); ++m) os << ",perp_" << m;
  os << '\n';
  for (int i = 0; i < grid.n_points(); ++i) {
    const double detuning_nm = sc.omega_to_nm(grid.samples()[i] - center);
    os << sig12(grid.samples()[i]) << ',' << sig12(detuning_nm);
    for (int m = 0; m < n_modes; ++m) os << ',' << sig12(basis.samples(m, i));
    for (int m = 0; m < std::min<int>(3, parallel.rows()); ++m)
      os << ',' << sig12(parallel(m, i));
    for (int m = 0; m < std::min<int>(3, perp.rows()); ++m) os << ',' << sig12(perp(m, i));
    os << '\n';
  }

  if (!o.plot.empty()) {
    std::vector<svg::Series> series;
    const auto& src = parallel.rows() > 0 ? parallel : basis.samples;
    const std::string prefix = parallel.rows() > 0 ? "par_" : "psi_";
    for (int m = 0; m < std::min<int>(3, src.rows()); ++m) {
      svg::Series s;
      s.label = prefix + std::to_string(m);
      for (int i = 0; i < grid.n_points(); ++i) {
        s.x.push_back(sc.omega_to_nm(grid.samples()[i] - center));
        s.y.push_back(src(m, i));
      }
      series.push_back(std::move(s));
    }
    svg::write_file(o.plot, svg::line_chart(series, "detuning (nm)", "amplitude",
                                            "spectral modes"));
  }
  return 0;
}

int cmd_gamma(const Options& o) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const double tau = sc.jsa_for(o.k).tau_s();
  const int n_modes = o.modes > 0 ? o.modes : sc.mode_count(o.k, 0.0, 0.0);

  GammaMatrix gamma;
  const bool analytic = o.method == "analytic";
  if (o.method != "auto" && o.method != "analytic" && o.method != "quad")
    throw argument_error("--method must be auto|quad|analytic");
  switch (kind) {
    case FilterKind::Identity:
      gamma = GammaMatrix::identity(n_modes);
      break;
    case FilterKind::Rectangular:
      if (o.method == "quad") {
        const auto grid = band_aligned_grid(sc.omega_signal(), sc.nm_to_omega(o.filter_fwhm_nm));
        gamma = gamma_quadrature(sample_hermite_modes(tau, sc.omega_signal(), n_modes, grid),
                                 grid, sc.make_filter(kind, o.filter_fwhm_nm));
      } else {
        gamma = gamma_rectangular_analytic(tau, n_modes, sc.nm_to_omega(o.filter_fwhm_nm));
      }
      break;
    case FilterKind::Gaussian:
      if (analytic) {
        gamma = gamma_gaussian_analytic(tau, n_modes, sc.nm_to_omega(o.filter_fwhm_nm));
      } else {
        const auto grid = default_grid(sc.omega_signal(), tau, n_modes,
                                       {sc.nm_to_omega(o.filter_fwhm_nm)},
                                       o.grid_points > 0 ? o.grid_points : default_grid_points);
        gamma = gamma_quadrature(build_basis(tau, sc.omega_signal(), n_modes, grid),
                                 sc.make_filter(kind, o.filter_fwhm_nm));
      }
      break;
    case FilterKind::DeltaLimit:
      throw argument_error("delta filters have no gamma matrix");
  }

  std::ofstream file;
  auto& os = open_output(o, file);
  for (int i = 0; i < gamma.n_modes; ++i) {
    for (int j = 0; j < gamma.n_modes; ++j)
      os << (j ? "," : "") << sig12(gamma.values(i, j));
    os << '\n';
  }
  return 0;
}

int cmd_wigner(const Options& o) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const double lo_nm = effective_lo_nm(o, sc);
  PointEvaluator eval(sc, o.k, kind, o.filter_fwhm_nm, lo_nm, lo_nm);
  const auto w = wigner_heralded(eval.params_at_lo(lo_nm));
  auto spec = WignerGridSpec::for_state(w, o.wigner_points);
  const auto grid = sample_wigner(w, spec);

  std::ofstream file;
  auto& os = open_output(o, file);
  os << "x,y,w\n";
  for (int i = 0; i < grid.x_axis.size(); ++i)
    for (int j = 0; j < grid.y_axis.size(); ++j)
      os << sig12(grid.x_axis[i]) << ',' << sig12(grid.y_axis[j]) << ','
         << sig12(grid.values(i, j)) << '\n';

  if (!o.plot.empty()) {
    std::vector<double> xs(grid.x_axis.data(), grid.x_axis.data() + grid.x_axis.size());
    std::vector<double> ys(grid.y_axis.data(), grid.y_axis.data() + grid.y_axis.size());
    svg::write_file(o.plot, svg::heatmap(grid.values, xs, ys, "x", "y",
                                         "measured Wigner function"));
  }
  return 0;
}

int print_point(const Options& o, bool fidelity_mode) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const double lo_nm = effective_lo_nm(o, sc);
  PointEvaluator eval(sc, o.k, kind, o.filter_fwhm_nm, lo_nm, lo_nm);
  const auto point = eval.at_lo(lo_nm);
  std::printf("k = %s\nlo_fwhm_nm = %s\n", sig12(o.k).c_str(), sig12(lo_nm).c_str());
  if (fidelity_mode)
    std::printf("fidelity = %s\n", sig12(point.fidelity).c_str());
  else
    std::printf("negativity = %s\n", sig12(point.negativity).c_str());
  std::printf("p_theta2 = %s\nlo_residual = %s\n", sig12(point.success_probability).c_str(),
              sig12(point.lo_residual).c_str());
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto sc = make_scenario(o);
  SweepSpec spec;
  spec.scenario = sc;
  spec.filter_kind = parse_filter(o);
  require_filter_width(o, spec.filter_kind);
  spec.filter_fwhm_nm = o.filter_fwhm_nm;
  if (o.k_count < 1 || o.lo_count < 1) throw argument_error("sweep counts must be >= 1");
  for (int i = 0; i < o.k_count; ++i)
    spec.k_values.push_back(o.k_count == 1 ? o.k_from
                                           : o.k_from + (o.k_to - o.k_from) * i / (o.k_count - 1));
  for (int i = 0; i < o.lo_count; ++i)
    spec.lo_fwhm_values_nm.push_back(
        o.lo_count == 1 ? o.lo_from : o.lo_from + (o.lo_to - o.lo_from) * i / (o.lo_count - 1));

  const auto table = sweep_negativity(spec);
  std::ofstream file;
  auto& os = open_output(o, file);
  table.write_csv(os);

  if (!o.plot.empty()) {
    Eigen::MatrixXd values(o.k_count, o.lo_count);
    for (int i = 0; i < o.k_count; ++i)
      for (int j = 0; j < o.lo_count; ++j)
        values(i, j) = table.rows[i * o.lo_count + j].negativity;
    svg::write_file(o.plot, svg::heatmap(values, spec.k_values, spec.lo_fwhm_values_nm,
                                         "Schmidt number K", "LO FWHM (nm)",
                                         "Wigner negativity"));
  }
  return 0;
}

int cmd_optimize_lo(const Options& o) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const auto result = optimal_lo(sc, o.k, kind, o.filter_fwhm_nm, o.lo_min, o.lo_max);
  std::printf("k = %s\noptimal_lo_fwhm_nm = %s%s\nnegativity = %s\nfidelity = %s\n"
              "p_theta2 = %s\n",
              sig12(result.k).c_str(), sig12(result.optimal_lo_fwhm_nm).c_str(),
              result.degenerate_lo ? " (degenerate: flat landscape)" : "",
              sig12(result.achieved_negativity).c_str(),
              sig12(result.achieved_fidelity).c_str(),
              sig12(result.success_probability).c_str());
  return 0;
}

int cmd_design(const Options& o) {
  const auto sc = make_scenario(o);
  auto kind = parse_filter(o);
  if (kind == FilterKind::Identity) kind = FilterKind::Rectangular;
  const auto result = design_for_fidelity(sc, o.k, o.target_f, kind, o.fwhm_min,
                                          o.fwhm_max, o.lo_min, o.lo_max);
  std::printf("k = %s\nfilter = %s\noptimal_filter_fwhm_nm = %s\noptimal_lo_fwhm_nm = %s\n"
              "fidelity = %s\nnegativity = %s\np_theta2 = %s\n",
              sig12(result.k).c_str(), to_string(kind).c_str(),
              sig12(result.optimal_filter_fwhm_nm).c_str(),
              sig12(result.optimal_lo_fwhm_nm).c_str(),
              sig12(result.achieved_fidelity).c_str(),
              sig12(result.achieved_negativity).c_str(),
              sig12(result.success_probability).c_str());
  return 0;
}

int cmd_purity(const Options& o) {
  const auto sc = make_scenario(o);
  const auto kind = parse_filter(o);
  require_filter_width(o, kind);
  const double tau = sc.jsa_for(o.k).tau_s();
  const int n_modes = o.modes > 0 ? o.modes : std::max(120, sc.mode_count(o.k, 0.0, 0.0));
  GammaMatrix gamma;
  switch (kind) {
    case FilterKind::Identity:
      gamma = GammaMatrix::identity(n_modes);
      break;
    case FilterKind::Rectangular:
      gamma = gamma_rectangular_analytic(tau, n_modes, sc.nm_to_omega(o.filter_fwhm_nm));
      break;
    case FilterKind::Gaussian: {
      const auto grid = default_grid(sc.omega_signal(), tau, n_modes,
                                     {sc.nm_to_omega(o.filter_fwhm_nm)});
      gamma = gamma_quadrature(build_basis(tau, sc.omega_signal(), n_modes, grid),
                               sc.make_filter(kind, o.filter_fwhm_nm));
      break;
    }
    case FilterKind::DeltaLimit:
      throw argument_error("use a small rect FWHM to probe the delta limit");
  }
  const auto squeezing = squeezing_from_schmidt(o.k, sc.zeta0(), n_modes);
  std::printf("k = %s\npurity = %s\n", sig12(o.k).c_str(),
              sig12(heralded_photon_purity(gamma, squeezing.zeta)).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heralded photon subtraction from multimode squeezed vacuum:\n"
               "measured Wigner functions, negativity, fidelity and design search"};
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI config file; command-line flags override it");

  Options o;
  app.add_option("--k", o.k, "Schmidt number of the SPDC source")->check(CLI::PositiveNumber);
  app.add_option("--lo-fwhm-nm", o.lo_fwhm_nm,
                 "LO spectral-amplitude FWHM in nm (0 = matched to psi_0)");
  app.add_option("--filter", o.filter, "heralding filter: none|rect|gauss");
  app.add_option("--filter-fwhm-nm", o.filter_fwhm_nm, "filter FWHM in nm");
  app.add_option("--zeta0-db", o.zeta0_db, "squeezing of the first supermode in dB");
  app.add_option("--rs2", o.rs2, "subtraction beam-splitter reflectivity r_s^2");
  app.add_option("--signal-nm", o.signal_nm, "signal wavelength in nm");
  app.add_option("--pump-nm", o.pump_nm, "pump wavelength in nm");
  app.add_option("--pump-fwhm-nm", o.pump_fwhm_nm, "pump FWHM in nm");
  app.add_option("--grid-points", o.grid_points, "spectral grid points (odd)");
  app.add_option("--modes", o.modes, "supermode truncation override");
  app.add_option("--out", o.out, "CSV output path (default stdout)");
  app.add_option("--plot", o.plot, "SVG plot output path");

  auto* basis = app.add_subcommand("basis", "dump supermode / filtered-mode samples");
  auto* gamma = app.add_subcommand("gamma", "emit the filter overlap matrix");
  gamma->add_option("--method", o.method, "gamma route: auto|quad|analytic");
  auto* wigner = app.add_subcommand("wigner", "emit the measured Wigner function");
  wigner->add_option("--wigner-points", o.wigner_points, "phase-space points per axis");
  auto* negativity = app.add_subcommand("negativity", "Wigner negativity at one point");
  auto* fidelity = app.add_subcommand("fidelity", "target-state fidelity at one point");
  auto* sweep = app.add_subcommand("sweep", "negativity over a (K, LO) grid");
  sweep->add_option("--k-from", o.k_from, "first Schmidt number");
  sweep->add_option("--k-to", o.k_to, "last Schmidt number");
  sweep->add_option("--k-count", o.k_count, "number of K samples");
  sweep->add_option("--lo-from", o.lo_from, "first LO FWHM (nm)");
  sweep->add_option("--lo-to", o.lo_to, "last LO FWHM (nm)");
  sweep->add_option("--lo-count", o.lo_count, "number of LO samples");
  auto* optimize = app.add_subcommand("optimize-lo", "maximize negativity over the LO");
  optimize->add_option("--lo-min", o.lo_min, "LO search lower bound (nm)");
  optimize->add_option("--lo-max", o.lo_max, "LO search upper bound (nm)");
  auto* design = app.add_subcommand("design", "widest filter reaching a target fidelity");
  design->add_option("--target-f", o.target_f, "fidelity target in (0,1)");
  design->add_option("--fwhm-min", o.fwhm_min, "filter search lower bound (nm)");
  design->add_option("--fwhm-max", o.fwhm_max, "filter search upper bound (nm)");
  design->add_option("--lo-min", o.lo_min, "LO search lower bound (nm)");
  design->add_option("--lo-max", o.lo_max, "LO search upper bound (nm)");
  auto* purity = app.add_subcommand("purity", "heralded-photon purity for a filter");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (basis->parsed()) return cmd_basis(o);
    if (gamma->parsed()) return cmd_gamma(o);
    if (wigner->parsed()) return cmd_wigner(o);
    if (negativity->parsed()) return print_point(o, false);
    if (fidelity->parsed()) return print_point(o, true);
    if (sweep->parsed()) return cmd_sweep(o);
    if (optimize->parsed()) return cmd_optimize_lo(o);
    if (design->parsed()) return cmd_design(o);
    if (purity->parsed()) return cmd_purity(o);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const photsub::unreachable_error& e) {
    std::fprintf(stderr, "error: %s (best achieved: %g)\n", e.what(), e.best_achieved);
    return 4;
  } catch (const photsub::precision_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const photsub::argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const photsub::unsupported_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
