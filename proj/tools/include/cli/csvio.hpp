#pragma once

#include <string>
#include <vector>

#include "trapps/cs.hpp"
#include "trapps/pps.hpp"
#include "trapps/spectrum.hpp"

namespace trapps::cli {

// shortest round-trippable decimal without locale surprises
std::string fmt(double v);

void write_spectrum_csv(const std::string& path,
                        const std::vector<SpectrumEntry>& entries, double lambda);

void write_curves_csv(const std::string& path,
                      const std::vector<ParameterCurve>& curves, double lambda);

struct WavefunctionBlock {
  int level = 0;
  int n_terms = 0;
  std::vector<double> r;
  std::vector<double> psi;
};

void write_wavefunction_csv(const std::string& path,
                            const std::vector<WavefunctionBlock>& blocks,
                            double lambda);

// one file per frame named frame_###.csv inside dir, plus a frames.csv summary
void write_sweep_csv(const std::string& dir, const std::vector<SweepFrame>& frames,
                     double lambda);

} // namespace trapps::cli
