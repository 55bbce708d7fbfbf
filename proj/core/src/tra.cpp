#include "trapps/tra.hpp"

#include <cmath>
#include <stdexcept>

namespace trapps {

BasisParams basis_params(double eps, double u0) {
  if (!(eps < 0.0))
    throw std::domain_error("basis_params: eps must be negative (bound-state branch)");
  if (!(u0 > -0.125))
    throw std::domain_error("basis_params: u0 must exceed -1/8");
  return {std::sqrt(-2.0 * eps), std::sqrt(2.0 * u0 + 0.25)};
}

BasisParams basis_params_mu0(double u0) {
  if (!(u0 > -0.125))
    throw std::domain_error("basis_params_mu0: u0 must exceed -1/8");
  return {0.0, std::sqrt(2.0 * u0 + 0.25)};
}

std::pair<double, double> recursion_coeffs(int n, double mu, double nu) {
  if (n < 0) throw std::domain_error("recursion_coeffs: n must be >= 0");
  const double s = mu + nu;
  const double q = 2.0 * n + s;
  // C_0 has a removable 0/0 at mu = nu = 0; the limit along nu -> mu is 0
  const double C = (nu == mu) ? 0.0 : (nu * nu - mu * mu) / (q * (q + 2.0));
  const double D =
      2.0 / (q + 2.0) *
      std::sqrt((n + 1.0) * (n + mu + 1.0) * (n + nu + 1.0) * (n + s + 1.0) /
                ((q + 1.0) * (q + 3.0)));
  return {C, D};
}

namespace {

void check_size(int N) {
  if (N < 1) throw std::domain_error("basis size must be >= 1");
}

} // namespace

SymTridiag build_J(const BasisParams& bp, double u1, double u2, int N) {
  check_size(N);
  const double s = bp.mu + bp.nu;
  SymTridiag J;
  J.diag.resize(N);
  J.sub.resize(N - 1);
  for (int n = 0; n < N; ++n) {
    const auto [C, D] = recursion_coeffs(n, bp.mu, bp.nu);
    const double h = n + 0.5 * (s + 1.0);
    J.diag[n] = h * h - 1.0 / 16.0 + 0.5 * u1 + 0.25 * u2 * (1.0 + C);
    if (n + 1 < N) J.sub[n] = 0.25 * u2 * D;
  }
  return J;
}

SymTridiag build_J(double eps, double u0, double u1, double u2, int N) {
  return build_J(basis_params(eps, u0), u1, u2, N);
}

SymTridiag build_sigma(double mu, double nu, double u2, int N) {
  check_size(N);
  const double s = mu + nu;
  SymTridiag S;
  S.diag.resize(N);
  S.sub.resize(N - 1);
  for (int n = 0; n < N; ++n) {
    const auto [C, D] = recursion_coeffs(n, mu, nu);
    const double q = 2.0 * n + s + 1.0;
    S.diag[n] = q * q + u2 * (1.0 + C);
    if (n + 1 < N) S.sub[n] = u2 * D;
  }
  return S;
}

SymTridiag build_sigma(const BasisParams& bp, double u2, int N) {
  return build_sigma(bp.mu, bp.nu, u2, N);
}

std::vector<double> eval_P(const BasisParams& bp, double u1, double u2, int N) {
  check_size(N);
  if (N > 200)
    throw std::domain_error("eval_P: forward recursion is limited to N <= 200");
  if (u2 == 0.0)
    throw std::domain_error("eval_P: u2 = 0 has no recursion (coefficients are "
                            "diagonal); use the closed-form spectrum instead");
  const double mu = bp.mu, nu = bp.nu;
  const double s = mu + nu;
  std::vector<double> P(N);
  P[0] = 1.0;
  if (N == 1) return P;
  const double D0 = recursion_coeffs(0, mu, nu).second;
  P[1] = -(2.0 * u1 + 2.0 * u2 * (nu + 1.0) / (s + 2.0) + (s + 1.0) * (s + 1.0) - 0.25) /
         (u2 * D0);
  const double target = 0.25 - 2.0 * u1; // sigma eigenvalue at a spectrum point
  double Dprev = D0;
  for (int n = 1; n + 1 < N; ++n) {
    const auto [C, D] = recursion_coeffs(n, mu, nu);
    const double q = 2.0 * n + s + 1.0;
    P[n + 1] =
        ((target - q * q - u2 * (1.0 + C)) * P[n] - u2 * Dprev * P[n - 1]) / (u2 * D);
    if (!std::isfinite(P[n + 1]))
      throw std::overflow_error("eval_P: forward recursion overflowed at n = " +
                                std::to_string(n + 1));
    Dprev = D;
  }
  return P;
}

Vec recursion_vector(const BasisParams& bp, double u1, double u2, int N) {
  check_size(N);
  const SymTridiag S = build_sigma(bp, u2, N);
  const EigResult eig = eig_sym_tridiag(S, /*want_vectors=*/true);
  const double target = 0.25 - 2.0 * u1;
  int best = 0;
  for (int k = 1; k < N; ++k)
    if (std::abs(eig.values[k] - target) < std::abs(eig.values[best] - target)) best = k;
  Vec v = eig.vectors.col(best);
  if (std::abs(v[0]) < 1e-200)
    throw std::runtime_error("recursion_vector: leading coefficient vanishes, "
                             "eigenvector cannot be scaled to P_0 = 1");
  return v / v[0];
}

std::vector<double> pt_spectrum(double u0, double u1) {
  if (!(u0 > -0.125)) throw std::domain_error("pt_spectrum: u0 must exceed -1/8");
  if (!(u1 <= 0.125)) throw std::domain_error("pt_spectrum: u1 must not exceed 1/8");
  const double A = std::sqrt(0.25 + 2.0 * u0);
  const double B = std::sqrt(0.25 - 2.0 * u1);
  std::vector<double> eps;
  for (int n = 0; 2.0 * n + 1.0 + A - B < 0.0; ++n)
    eps.push_back(-0.5 * std::pow(2.0 * n + 1.0 + A - B, 2));
  return eps;
}

} // namespace trapps
