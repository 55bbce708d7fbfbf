#pragma once

#include "trapps/eigen_kernels.hpp"

namespace trapps {

enum class QuadKind { GaussJacobi, GaussLaguerre };

// Golub-Welsch rule: nodes ascending, weights positive, sum of weights equal to
// the mass of the weight function (2^{a+b+1} B(a+1,b+1) for Jacobi on [-1,1],
// Gamma(a+1) for generalized Laguerre on [0,inf)).
struct QuadratureRule {
  QuadKind kind;
  double alpha = 0.0;
  double beta = 0.0; // unused for Laguerre
  int order = 0;
  Vec nodes;
  Vec weights;
};

// P_n^{(a,b)}(x) by forward three-term recurrence; stable for the degrees used
// here (n <= 2000 enforced).
double jacobi_eval(int n, double a, double b, double x);

// L_n^a(y), complex argument allowed (analyticity checks); same recurrence.
Cplx laguerre_eval(int n, double a, Cplx y);

QuadratureRule gauss_jacobi(double a, double b, int K);
QuadratureRule gauss_laguerre(double a, int K);

// Rows G(n,k) = sqrt(w_k) * lhat_n(y_k) with lhat_n = sqrt(n!/Gamma(n+a+1)) L_n^a,
// evaluated by the orthonormal recurrence with the weight folded in so no
// intermediate overflows. Rows are orthonormal under the rule for n+m <= 2K-1.
Mat laguerre_ortho_rows(const QuadratureRule& rule, int N);

// Jacobi basis on r in [0,inf) through x(r) = 2 tanh^2(lambda r) - 1:
//   phi_n(r) = sqrt(lambda) A_n (1-x)^{mu/2} (1+x)^{nu/2+1/4} P_n^{(mu,nu)}(x).
// Vanishes at r = 0 and (for mu > 0) at infinity.
struct JacobiBasisSpec {
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 1.0;
};

// A_n chosen so that (A_n^2/sqrt(2)) Int (1-x)^mu (1+x)^nu [P_n]^2 dx = 1,
// unit norm under the Jacobi weight; the dr overlap of the phi_n is not
// diagonal (see hd_overlap).
double jacobi_basis_norm(int n, double mu, double nu);

double jacobi_basis_eval(const JacobiBasisSpec& spec, int n, double r);

} // namespace trapps
