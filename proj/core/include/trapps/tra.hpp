#pragma once

#include <utility>
#include <vector>

#include "trapps/eigen_kernels.hpp"

namespace trapps {

// mu = sqrt(-2 eps) ties the basis to the energy; nu = sqrt(2 u0 + 1/4) ties it
// to the 1/r^2 strength
struct BasisParams {
  double mu = 0.0;
  double nu = 0.0;
};

BasisParams basis_params(double eps, double u0);
// energy-independent variant (eps = 0) used by the direct diagonalization path
BasisParams basis_params_mu0(double u0);

// C_n = (nu^2-mu^2)/((2n+s)(2n+s+2)), s = mu+nu
// D_n = 2/(2n+s+2) sqrt[(n+1)(n+mu+1)(n+nu+1)(n+s+1)/((2n+s+1)(2n+s+3))]
std::pair<double, double> recursion_coeffs(int n, double mu, double nu);

// wave-operator matrix in the energy-tied basis, diag (n+(s+1)/2)^2 - 1/16
// + u1/2 + (u2/4)(1+C_n), sub (u2/4) D_n; units of lambda^2
SymTridiag build_J(double eps, double u0, double u1, double u2, int N);
SymTridiag build_J(const BasisParams& bp, double u1, double u2, int N);

// diag (2n+s+1)^2 + u2 (1+C_n), sub u2 D_n; satisfies
// sigma = 4 J + (1/4 - 2 u1) I entrywise
SymTridiag build_sigma(double mu, double nu, double u2, int N);
SymTridiag build_sigma(const BasisParams& bp, double u2, int N);

// expansion coefficients by direct forward recursion, P_0 = 1; growth is
// unchecked past the working precision, callers needing large N should use
// recursion_vector
std::vector<double> eval_P(const BasisParams& bp, double u1, double u2, int N);

// same sequence obtained as the eigenvector of sigma with eigenvalue nearest
// 1/4 - 2 u1, rescaled to P_0 = 1; backward-stable where the forward recursion
// overflows
Vec recursion_vector(const BasisParams& bp, double u1, double u2, int N);

// closed-form spectrum of the u2 = 0 member (hyperbolic Poschl-Teller class):
// eps_n = -(2n+1+A-B)^2/2, A = sqrt(1/4+2u0), B = sqrt(1/4-2u1), while the
// squared term is negative
std::vector<double> pt_spectrum(double u0, double u1);

} // namespace trapps
