#pragma once

#include <vector>

#include "trapps/eigen_kernels.hpp"

namespace trapps {

// basis overlap at the energy-free point (mu = 0): the exact integral diverges
// logarithmically, so the value is defined by the K-point rule itself and grows
// slowly with K; pinning K to the basis size is what makes the method behave
Mat hd_overlap(double nu, int N, int K);

// same overlap at a regular exponent mu > 0 where the integral is finite; the
// weight is folded into the rule so the integrand is a plain polynomial and the
// rule is exact for 2K-1 >= 2(N-1)
Mat hd_overlap_reg(double mu, double nu, int N, int K);

// bound spectrum by direct diagonalization: H f = eps Omega f with H the wave
// operator at mu = 0; returns the negative eigenvalues ascending (eps = E/l^2)
std::vector<double> hd_spectrum(double u0, double u1, double u2, int N,
                                int K = 0 /* 0 = N */);

} // namespace trapps
