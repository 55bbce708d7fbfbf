#pragma once

#include <string>
#include <vector>

#include "trapps/eigen_kernels.hpp"
#include "trapps/rational.hpp"

namespace trapps {

// count points of the open Chebyshev grid on (lo, hi), returned ascending
std::vector<double> chebyshev_grid(double lo, double hi, int count);

// one u1(eps) eigencurve of the parameter-spectrum matrix
struct ParameterCurve {
  int m = 0;                   // eigenvalue rank within the matrix, 0 = lowest
  std::vector<double> eps;     // sample abscissae, ascending
  std::vector<double> u1;      // u1 = (1/4 - eta_m)/2 at each sample
  RationalInterpolant fit;
  std::vector<std::string> warnings;
};

std::vector<ParameterCurve> parameter_curves(double u0, double u2, int N,
                                             const std::vector<double>& eps_grid,
                                             int M);

struct PpsLevel {
  double eps = 0.0;       // polished root
  int curve = 0;          // index of the curve it came from
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  double fit_root = 0.0;  // where the rational fit alone puts the root
  bool fit_disagrees = false; // |fit_root - eps| > 1e-6
};

struct PpsSpectrum {
  std::vector<PpsLevel> levels; // deepest first (eps ascending)
  std::vector<std::string> warnings;

  std::vector<double> energies() const;
};

// default lower end of the energy window searched for levels
double default_eps_min(double u0, double u1, double u2);

// locate every eps < 0 where the m-th eigenvalue of the parameter-spectrum
// matrix equals 1/4 - 2 u1; fit supplies brackets, a fresh eigensolve per
// iteration polishes each root to |d eps| <= 1e-12
PpsSpectrum pps_spectrum(double u0, double u1, double u2, int N,
                         double eps_min = 0.0 /* 0 = auto */, int grid = 64);

struct StabilityReport {
  std::vector<double> change; // change[k] = sup_r |P_k phi_k(r)|, k >= 1
  int plateau_n = 0;          // partial-sum length with the smallest change
  int critical_n = 0;         // length at which the first diverging term enters
};

struct Wavefunction {
  std::vector<double> values; // partial sum on the input grid, unit sup-norm
  StabilityReport report;
};

// partial sum psi = sum_{n<n_terms} P_n phi_n at the level energy eps; the
// report scans lengths 2..n_scan for the plateau and the divergence onset
Wavefunction reconstruct_wavefunction(double eps, double u0, double u1, double u2,
                                      const std::vector<double>& r_grid,
                                      int n_terms, int n_scan = 30);

} // namespace trapps
