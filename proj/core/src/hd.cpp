#include "trapps/hd.hpp"

#include <cmath>
#include <stdexcept>

#include "trapps/orthopoly.hpp"
#include "trapps/tra.hpp"

namespace trapps {

namespace {

Mat overlap_from_rows(const Mat& G) { return (G * G.transpose()) / std::sqrt(2.0); }

} // namespace

Mat hd_overlap(double nu, int N, int K) {
  if (!(nu > 0.0)) throw std::domain_error("hd_overlap: nu must be positive");
  if (N < 1) throw std::domain_error("hd_overlap: N must be >= 1");
  if (K < N) throw std::domain_error("hd_overlap: quadrature order must be >= N");
  const QuadratureRule rule = gauss_jacobi(0.0, nu, K);
  Mat G(N, K);
  for (int n = 0; n < N; ++n) {
    const double A = jacobi_basis_norm(n, 0.0, nu);
    for (int k = 0; k < K; ++k) {
      const double x = rule.nodes[k];
      G(n, k) = A * jacobi_eval(n, 0.0, nu, x) * std::sqrt(rule.weights[k] / (1.0 - x));
    }
  }
  return overlap_from_rows(G);
}

Mat hd_overlap_reg(double mu, double nu, int N, int K) {
  if (!(mu > 0.0))
    throw std::domain_error("hd_overlap_reg: mu must be positive (the mu = 0 "
                            "boundary case is hd_overlap)");
  if (!(nu > 0.0)) throw std::domain_error("hd_overlap_reg: nu must be positive");
  if (N < 1) throw std::domain_error("hd_overlap_reg: N must be >= 1");
  if (K < N) throw std::domain_error("hd_overlap_reg: quadrature order must be >= N");
  const QuadratureRule rule = gauss_jacobi(mu - 1.0, nu, K);
  Mat G(N, K);
  for (int n = 0; n < N; ++n) {
    const double A = jacobi_basis_norm(n, mu, nu);
    for (int k = 0; k < K; ++k)
      G(n, k) = A * jacobi_eval(n, mu, nu, rule.nodes[k]) * std::sqrt(rule.weights[k]);
  }
  return overlap_from_rows(G);
}

std::vector<double> hd_spectrum(double u0, double u1, double u2, int N, int K) {
  if (K == 0) K = N;
  const BasisParams bp = basis_params_mu0(u0);
  const Mat H = build_J(bp, u1, u2, N).dense();
  const Mat Om = hd_overlap(bp.nu, N, K);
  EigResult eig;
  try {
    eig = eig_gen_sym(H, Om);
  } catch (const NotPositiveDefinite& ex) {
    throw std::runtime_error(std::string(ex.what()) +
                             "; the overlap lost definiteness, use a smaller basis "
                             "or a larger quadrature order");
  }
  std::vector<double> neg;
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] < 0.0) neg.push_back(eig.values[i]);
  return neg;
}

} // namespace trapps
