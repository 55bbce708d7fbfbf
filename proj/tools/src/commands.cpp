#include "cli/commands.hpp"

#include <filesystem>
#include <iostream>

#include "cli/csvio.hpp"
#include "cli/svg.hpp"
#include "cli/tables.hpp"
#include "trapps/cs.hpp"
#include "trapps/hd.hpp"
#include "trapps/potential.hpp"
#include "trapps/pps.hpp"
#include "trapps/spectrum.hpp"

namespace trapps::cli {

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out) / name).string();
}

double eps_min_of(const RunConfig& cfg) {
  return cfg.pps.eps_min != 0.0 ? cfg.pps.eps_min
                                : default_eps_min(cfg.u0, cfg.u1, cfg.u2);
}

StabilityOptions stability_of(const RunConfig& cfg) {
  StabilityOptions opt;
  opt.drho = cfg.cs.drho;
  opt.dtheta = cfg.cs.dtheta;
  opt.tol = cfg.cs.tol;
  opt.K_quad = cfg.cs.kquad;
  return opt;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
}

int cmd_classify(const RunConfig& cfg) {
  const PotentialParams p = params_from_u(cfg.lambda, cfg.u0, cfg.u1, cfg.u2);
  const ConfigClass cc = classify_configuration(p);
  std::cout << "configuration: " << to_string(cc.kind) << " (class "
            << config_class_letter(cc.kind) << ")\n";
  for (const auto& [t, v] : cc.critical_points)
    std::cout << "  critical point: t = " << fmt(t)
              << ", V/lambda^2 = " << fmt(v / (cfg.lambda * cfg.lambda)) << "\n";
  const auto c = near_origin_coeffs(p);
  std::cout << "near origin: V ~ " << fmt(c[0]) << "/r^2 + " << fmt(c[1]) << " + "
            << fmt(c[2]) << " (lambda r)^2\n";
  std::cout << "effective ell at ell = " << cfg.ell << ": "
            << fmt(effective_ell(cfg.u0, cfg.ell)) << "\n";
  return 0;
}

int cmd_pps(const RunConfig& cfg) {
  const PpsSpectrum spec =
      pps_spectrum(cfg.u0, cfg.u1, cfg.u2, cfg.N, eps_min_of(cfg), cfg.pps.grid);
  print_warnings(spec.warnings);
  std::vector<SpectrumEntry> rows;
  for (size_t m = 0; m < spec.levels.size(); ++m)
    rows.push_back({Method::Pps, static_cast<int>(m), Cplx(spec.levels[m].eps, 0.0),
                    LevelClass::Bound, 0.0, 0.0, cfg.N});
  write_spectrum_csv(out_path(cfg, "spectrum.csv"), rows, cfg.lambda);
  std::cout << "levels found: " << rows.size() << "\n";
  for (const auto& r : rows)
    std::cout << "  eps_" << r.level << " = " << fmt(r.energy.real()) << "\n";
  std::cout << "wrote " << out_path(cfg, "spectrum.csv") << "\n";
  return 0;
}

int cmd_hd(const RunConfig& cfg) {
  const auto eps = hd_spectrum(cfg.u0, cfg.u1, cfg.u2, cfg.N, cfg.hd.kquad);
  std::vector<SpectrumEntry> rows;
  for (size_t m = 0; m < eps.size(); ++m)
    rows.push_back({Method::Hd, static_cast<int>(m), Cplx(eps[m], 0.0),
                    LevelClass::Bound, 0.0, 0.0, cfg.N});
  write_spectrum_csv(out_path(cfg, "spectrum.csv"), rows, cfg.lambda);
  std::cout << "levels found: " << rows.size() << "\n";
  for (const auto& r : rows)
    std::cout << "  eps_" << r.level << " = " << fmt(r.energy.real()) << "\n";
  std::cout << "wrote " << out_path(cfg, "spectrum.csv") << "\n";
  return 0;
}

int cmd_cs(const RunConfig& cfg) {
  const PotentialParams p = params_from_u(cfg.lambda, cfg.u0, cfg.u1, cfg.u2);
  const ClassifiedSpectrum cls = classify_spectrum(p, cfg.ell, cfg.cs.rho,
                                                   cfg.cs.theta, cfg.N,
                                                   stability_of(cfg));
  std::vector<SpectrumEntry> rows;
  int lvl = 0;
  for (const Cplx& e : cls.bound)
    rows.push_back({Method::Cs, lvl++, e, LevelClass::Bound, cfg.cs.rho, cfg.cs.theta,
                    cfg.N});
  lvl = 0;
  for (const Cplx& e : cls.resonances)
    rows.push_back({Method::Cs, lvl++, e, LevelClass::Resonance, cfg.cs.rho,
                    cfg.cs.theta, cfg.N});
  lvl = 0;
  for (const auto& u : cls.unstable)
    rows.push_back({Method::Cs, lvl++, u.value, LevelClass::Unstable, cfg.cs.rho,
                    cfg.cs.theta, cfg.N});
  write_spectrum_csv(out_path(cfg, "spectrum.csv"), rows, cfg.lambda);
  write_spectrum_svg(out_path(cfg, "spectrum.svg"), cls);
  std::cout << "bound: " << cls.bound.size() << ", resonances: "
            << cls.resonances.size() << ", unstable: " << cls.unstable.size() << "\n";
  for (const Cplx& e : cls.bound) std::cout << "  bound " << fmt(e.real()) << "\n";
  for (const Cplx& e : cls.resonances)
    std::cout << "  resonance " << fmt(e.real()) << (e.imag() < 0 ? " - " : " + ")
              << fmt(std::abs(e.imag())) << "i\n";
  std::cout << "wrote " << out_path(cfg, "spectrum.csv") << " and "
            << out_path(cfg, "spectrum.svg") << "\n";
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg) {
  const PpsSpectrum spec =
      pps_spectrum(cfg.u0, cfg.u1, cfg.u2, cfg.N, eps_min_of(cfg), cfg.pps.grid);
  print_warnings(spec.warnings);
  if (spec.levels.empty()) {
    std::cout << "no bound levels, nothing to reconstruct\n";
    return 0;
  }
  const int points = 401;
  std::vector<double> r(points);
  for (int i = 0; i < points; ++i) r[i] = 8.0 * i / (points - 1) / cfg.lambda;

  std::vector<WavefunctionBlock> blocks;
  for (size_t m = 0; m < spec.levels.size(); ++m) {
    const double eps = spec.levels[m].eps;
    // probe pass for the stability report, then rebuild at the plateau length
    const auto probe = reconstruct_wavefunction(eps, cfg.u0, cfg.u1, cfg.u2, r, 2);
    const int n_terms = probe.report.plateau_n;
    const auto wf = reconstruct_wavefunction(eps, cfg.u0, cfg.u1, cfg.u2, r, n_terms);
    blocks.push_back({static_cast<int>(m), n_terms, r, wf.values});
    std::cout << "level " << m << ": eps = " << fmt(eps)
              << ", plateau at N = " << wf.report.plateau_n
              << ", divergence onset at N = " << wf.report.critical_n << "\n";
  }
  write_wavefunction_csv(out_path(cfg, "wavefunction.csv"), blocks, cfg.lambda);
  std::cout << "wrote " << out_path(cfg, "wavefunction.csv") << "\n";
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const PotentialParams p = params_from_u(cfg.lambda, cfg.u0, cfg.u1, cfg.u2);
  std::vector<double> grid(cfg.sweep.frames);
  for (int i = 0; i < cfg.sweep.frames; ++i)
    grid[i] = cfg.sweep.frames == 1
                  ? cfg.sweep.v1_from
                  : cfg.sweep.v1_from + (cfg.sweep.v1_to - cfg.sweep.v1_from) * i /
                                            (cfg.sweep.frames - 1);
  const auto frames = sweep_v1(p, grid, cfg.ell, cfg.cs.rho, cfg.cs.theta, cfg.N,
                               stability_of(cfg));
  write_sweep_csv(cfg.out, frames, cfg.lambda);
  for (const auto& f : frames) {
    if (!f.error.empty()) {
      std::cout << "v1 = " << fmt(f.v1) << ": error: " << f.error << "\n";
    } else {
      std::cout << "v1 = " << fmt(f.v1) << ": bound " << f.spectrum.bound.size()
                << ", resonances " << f.spectrum.resonances.size() << "\n";
    }
  }
  std::cout << "wrote " << frames.size() << " frame files and frames.csv under "
            << cfg.out << "\n";
  return 0;
}

int cmd_curves(const RunConfig& cfg) {
  const auto grid = chebyshev_grid(eps_min_of(cfg), -1e-6, cfg.pps.grid);
  const int M = std::min(cfg.pps.curves, cfg.N);
  const auto curves = parameter_curves(cfg.u0, cfg.u2, cfg.N, grid, M);
  for (const auto& c : curves) print_warnings(c.warnings);
  write_curves_csv(out_path(cfg, "curves.csv"), curves, cfg.lambda);
  std::cout << "traced " << curves.size() << " curves over eps in ["
            << fmt(grid.front()) << ", " << fmt(grid.back()) << "]\n";
  std::cout << "wrote " << out_path(cfg, "curves.csv") << "\n";
  return 0;
}

int cmd_reproduce(const Report& rep) {
  print_report(rep, std::cout);
  return rep.pass() ? 0 : 4;
}

} // namespace

int run_command(const std::string& cmd, const RunConfig& cfg) {
  if (cmd == "classify") return cmd_classify(cfg);
  if (cmd == "pps") return cmd_pps(cfg);
  if (cmd == "hd") return cmd_hd(cfg);
  if (cmd == "cs") return cmd_cs(cfg);
  if (cmd == "wavefunction") return cmd_wavefunction(cfg);
  if (cmd == "sweep") return cmd_sweep(cfg);
  if (cmd == "curves") return cmd_curves(cfg);
  if (cmd == "reproduce-table1") return cmd_reproduce(reproduce_table1());
  if (cmd == "reproduce-table2") return cmd_reproduce(reproduce_table2());
  if (cmd == "reproduce-table3") return cmd_reproduce(reproduce_table3());
  throw std::invalid_argument("unknown command: " + cmd);
}

} // namespace trapps::cli
