#include "cli/csvio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace trapps::cli {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void frame_rows(std::ostream& out, const SweepFrame& f) {
  for (const Cplx& e : f.spectrum.bound)
    out << fmt(f.v1) << ",bound," << fmt(e.real()) << "," << fmt(e.imag()) << "\n";
  for (const Cplx& e : f.spectrum.resonances)
    out << fmt(f.v1) << ",resonance," << fmt(e.real()) << "," << fmt(e.imag()) << "\n";
}

} // namespace

void write_spectrum_csv(const std::string& path,
                        const std::vector<SpectrumEntry>& entries, double lambda) {
  auto out = open_out(path);
  out << "# lambda = " << fmt(lambda) << "\n";
  out << "# energies in lambda^2 units\n";
  out << "method,level,re_E,im_E,class,rho,theta,N\n";
  for (const auto& e : entries)
    out << to_string(e.method) << "," << e.level << "," << fmt(e.energy.real()) << ","
        << fmt(e.energy.imag()) << "," << to_string(e.cls) << "," << fmt(e.rho) << ","
        << fmt(e.theta) << "," << e.N << "\n";
}

void write_curves_csv(const std::string& path,
                      const std::vector<ParameterCurve>& curves, double lambda) {
  auto out = open_out(path);
  out << "# lambda = " << fmt(lambda) << "\n";
  out << "# eps in lambda^2 units\n";
  out << "curve_index,eps,u1\n";
  for (const auto& c : curves)
    for (size_t i = 0; i < c.eps.size(); ++i)
      out << c.m << "," << fmt(c.eps[i]) << "," << fmt(c.u1[i]) << "\n";
}

void write_wavefunction_csv(const std::string& path,
                            const std::vector<WavefunctionBlock>& blocks,
                            double lambda) {
  auto out = open_out(path);
  out << "# lambda = " << fmt(lambda) << "\n";
  out << "# psi normalized to unit maximum, r in 1/lambda units\n";
  out << "r,psi,level,N_terms\n";
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.r.size(); ++i)
      out << fmt(b.r[i]) << "," << fmt(b.psi[i]) << "," << b.level << "," << b.n_terms
          << "\n";
}

void write_sweep_csv(const std::string& dir, const std::vector<SweepFrame>& frames,
                     double lambda) {
  fs::create_directories(dir);
  auto summary = open_out((fs::path(dir) / "frames.csv").string());
  summary << "# lambda = " << fmt(lambda) << "\n";
  summary << "v1,class,re_E,im_E\n";
  for (size_t i = 0; i < frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.csv", i);
    auto out = open_out((fs::path(dir) / name).string());
    out << "# lambda = " << fmt(lambda) << "\n";
    if (!frames[i].error.empty()) out << "# error = " << frames[i].error << "\n";
    out << "v1,class,re_E,im_E\n";
    frame_rows(out, frames[i]);
    frame_rows(summary, frames[i]);
  }
}

} // namespace trapps::cli
