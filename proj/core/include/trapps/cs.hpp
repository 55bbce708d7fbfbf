#pragma once

#include <string>
#include <vector>

#include "trapps/eigen_kernels.hpp"
#include "trapps/potential.hpp"

namespace trapps {

struct CSymTridiag {
  CVec diag;
  CVec sub;
  int size() const { return static_cast<int>(diag.size()); }
  CMat dense() const;
};

// rotated-basis configuration: chi_n(r) ~ (gr)^{lt+1} e^{-gr/2} L_n^{2lt+1}(gr)
// with g = rho e^{-i theta}; rho is measured in units of lambda, energies come
// out in lambda^2 units
struct CsConfig {
  int ell = 0;
  double ell_eff = 0.0;
  double rho = 1.0;
  double theta = 0.0;
  int N = 50;
  int K_quad = 70;

  Cplx gamma() const { return rho * std::exp(Cplx(0.0, -theta)); }
};

CsConfig make_cs_config(const PotentialParams& p, int ell, double rho, double theta,
                        int N, int K_quad = 0 /* 0 = N + 20 */);

// diag (g^2/4)(n+lt+1), sub (g^2/8) sqrt((n+1)(n+2lt+2))
CSymTridiag cs_kinetic(const CsConfig& cfg);

// diag 2(n+lt+1), sub -sqrt((n+1)(n+2lt+2)); real and gamma-independent
SymTridiag cs_overlap(const CsConfig& cfg);

// V_nm = sum_k w_k chat_n(y_k) chat_m(y_k) y_k Vreg(y_k/g) over the
// generalized Gauss-Laguerre rule with weight parameter 2lt+1; the measure
// convention is pinned by the theta = 0 cross-check against the parameter
// spectrum method
CMat cs_potential_matrix(const PotentialParams& p, const CsConfig& cfg);

struct HarrisSet {
  std::vector<Cplx> values;
  CsConfig config;
};

// eigenvalues of (kinetic + potential, overlap); lambda^2 units
HarrisSet harris_eigenvalues(const PotentialParams& p, const CsConfig& cfg);

struct UnstableEigenvalue {
  Cplx value;
  double drift = 0.0; // |E_a - E_b| / (1 + |E_a|)
};

struct ClassifiedSpectrum {
  std::vector<Cplx> bound;      // negative real axis, Re ascending
  std::vector<Cplx> resonances; // inside the wedge -2 theta < arg E < 0
  std::vector<UnstableEigenvalue> unstable;
  double theta = 0.0;
};

// keep eigenvalues that move by at most tol (1+|E|) between two runs that
// differ only in (rho, theta), then split the kept set by position in the
// complex plane; run_a's values are reported
ClassifiedSpectrum classify_eigenvalues(const HarrisSet& run_a, const HarrisSet& run_b,
                                        double tol, double tol_bound = 1e-8);

struct StabilityOptions {
  double drho = 1.05;   // second run at rho * drho
  double dtheta = 0.05; // and theta + dtheta
  double tol = 2e-3;
  double tol_bound = 1e-8;
  int K_quad = 0; // 0 = N + 20
};

// two-run stability filter end to end
ClassifiedSpectrum classify_spectrum(const PotentialParams& p, int ell, double rho,
                                     double theta, int N,
                                     const StabilityOptions& opt = {});

struct SweepFrame {
  double v1 = 0.0;
  ClassifiedSpectrum spectrum;
  std::string error; // empty on success
};

// classify at every v1 in the grid with the other parameters fixed; frames run
// independently and a failing frame records its error without stopping the rest
std::vector<SweepFrame> sweep_v1(const PotentialParams& p_base,
                                 const std::vector<double>& v1_grid, int ell,
                                 double rho, double theta, int N,
                                 const StabilityOptions& opt = {});

struct RhoScanEntry {
  double rho = 0.0;
  int kept = 0;
  double median_drift = 0.0;
};

struct RhoScanResult {
  std::vector<RhoScanEntry> entries;
  double best_rho = 0.0;
};

// stability-plateau heuristic for choosing rho: prefer the candidate keeping
// the most eigenvalues, break ties by the smaller median drift
RhoScanResult scan_rho(const PotentialParams& p, int ell, double theta, int N,
                       const std::vector<double>& rho_candidates,
                       const StabilityOptions& opt = {});

} // namespace trapps
