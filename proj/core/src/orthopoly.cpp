#include "trapps/orthopoly.hpp"

#include <cmath>

namespace trapps {

namespace {

constexpr int kMaxDegree = 2000;

void check_degree(int n) {
  if (n < 0) throw std::domain_error("polynomial degree must be non-negative");
  if (n > kMaxDegree)
    throw std::domain_error("polynomial degree exceeds the supported cap of 2000");
}

} // namespace

double jacobi_eval(int n, double a, double b, double x) {
  check_degree(n);
  if (a <= -1.0 || b <= -1.0)
    throw std::domain_error("jacobi_eval: parameters must be > -1");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

Cplx laguerre_eval(int n, double a, Cplx y) {
  check_degree(n);
  if (a <= -1.0) throw std::domain_error("laguerre_eval: parameter must be > -1");
  if (n == 0) return 1.0;
  Cplx pm1 = 1.0;
  Cplx p = 1.0 + a - y;
  for (int k = 1; k < n; ++k) {
    const Cplx next = ((2.0 * k + 1.0 + a - y) * p - (k + a) * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

namespace {

QuadratureRule golub_welsch(QuadKind kind, double a, double b, int K, double mass,
                            const Vec& diag, const Vec& sub) {
  const EigResult eig = eig_sym_tridiag({diag, sub}, /*want_vectors=*/true);
  QuadratureRule rule;
  rule.kind = kind;
  rule.alpha = a;
  rule.beta = b;
  rule.order = K;
  rule.nodes = eig.values;
  rule.weights = mass * eig.vectors.row(0).transpose().array().square();
  return rule;
}

} // namespace

QuadratureRule gauss_jacobi(double a, double b, int K) {
  if (K < 1) throw std::domain_error("gauss_jacobi: order must be >= 1");
  if (a <= -1.0 || b <= -1.0)
    throw std::domain_error("gauss_jacobi: weight parameters must be > -1");
  Vec diag(K), sub(std::max(K - 1, 0));
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < K; ++k) {
    const double s = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    const double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    if (den <= 0.0)
      throw std::domain_error("gauss_jacobi: degenerate recurrence (a + b = -1)");
    sub[k - 1] = std::sqrt(num / den);
  }
  const double mass = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                               std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  return golub_welsch(QuadKind::GaussJacobi, a, b, K, mass, diag, sub);
}

namespace {

// Eigenvector weights are only absolutely accurate; at far nodes (true weight
// ~1e-40 and below) they carry pure rounding noise, which the growing Laguerre
// recurrence then amplifies into O(1) garbage in the basis rows. The
// Christoffel form 1/sum_n p_n(y)^2 keeps every weight relatively accurate;
// the running power-of-two rescale stops the sum from overflowing at large K.
Vec laguerre_christoffel_weights(double a, const Vec& nodes) {
  const int K = static_cast<int>(nodes.size());
  const double p0 = std::exp(-0.5 * std::lgamma(a + 1.0));
  Vec w(K);
  for (int k = 0; k < K; ++k) {
    const double y = nodes[k];
    double lm1 = 0.0, l = p0, sum = p0 * p0;
    int shift = 0; // true p_n = 2^shift * l
    for (int n = 0; n + 1 < K; ++n) {
      const double next = ((2.0 * n + a + 1.0 - y) * l - std::sqrt(n * (n + a)) * lm1) /
                          std::sqrt((n + 1.0) * (n + 1.0 + a));
      lm1 = l;
      l = next;
      sum += l * l;
      if (std::abs(l) > 1e120) {
        lm1 = std::ldexp(lm1, -400);
        l = std::ldexp(l, -400);
        sum = std::ldexp(sum, -800);
        shift += 400;
      }
    }
    w[k] = std::ldexp(1.0 / sum, -2 * shift);
  }
  return w;
}

} // namespace

QuadratureRule gauss_laguerre(double a, int K) {
  if (K < 1) throw std::domain_error("gauss_laguerre: order must be >= 1");
  if (a <= -1.0) throw std::domain_error("gauss_laguerre: weight parameter must be > -1");
  Vec diag(K), sub(std::max(K - 1, 0));
  for (int k = 0; k < K; ++k) diag[k] = 2.0 * k + a + 1.0;
  for (int k = 1; k < K; ++k) sub[k - 1] = std::sqrt(k * (k + a));
  const EigResult eig = eig_sym_tridiag({diag, sub});
  QuadratureRule rule;
  rule.kind = QuadKind::GaussLaguerre;
  rule.alpha = a;
  rule.beta = 0.0;
  rule.order = K;
  rule.nodes = eig.values;
  rule.weights = laguerre_christoffel_weights(a, eig.values);
  return rule;
}

Mat laguerre_ortho_rows(const QuadratureRule& rule, int N) {
  if (rule.kind != QuadKind::GaussLaguerre)
    throw std::invalid_argument("laguerre_ortho_rows: needs a Gauss-Laguerre rule");
  check_degree(N - 1);
  const int K = rule.order;
  const double a = rule.alpha;
  Mat G(N, K);
  for (int k = 0; k < K; ++k) {
    const double y = rule.nodes[k];
    // start the orthonormal recurrence from sqrt(w) lhat_0 so every intermediate
    // stays the size of the final (bounded) products
    double lm1 = 0.0;
    double l = std::sqrt(rule.weights[k]) * std::exp(-0.5 * std::lgamma(a + 1.0));
    G(0, k) = l;
    for (int n = 0; n + 1 < N; ++n) {
      const double next = ((2.0 * n + a + 1.0 - y) * l - std::sqrt(n * (n + a)) * lm1) /
                          std::sqrt((n + 1.0) * (n + 1.0 + a));
      lm1 = l;
      l = next;
      G(n + 1, k) = l;
    }
  }
  return G;
}

double jacobi_basis_norm(int n, double mu, double nu) {
  check_degree(n);
  const double s = mu + nu;
  return std::exp(0.5 * (std::log(2.0 * n + s + 1.0) - (s + 0.5) * std::log(2.0) +
                         std::lgamma(n + 1.0) + std::lgamma(n + s + 1.0) -
                         std::lgamma(n + nu + 1.0) - std::lgamma(n + mu + 1.0)));
}

double jacobi_basis_eval(const JacobiBasisSpec& spec, int n, double r) {
  if (r < 0.0) throw std::domain_error("jacobi_basis_eval: r must be >= 0");
  const double t = std::tanh(spec.lambda * r);
  const double x = 2.0 * t * t - 1.0;
  const double omx = 1.0 - x; // 2 sech^2
  const double opx = 1.0 + x; // 2 tanh^2
  return std::sqrt(spec.lambda) * jacobi_basis_norm(n, spec.mu, spec.nu) *
         std::pow(omx, 0.5 * spec.mu) * std::pow(opx, 0.5 * spec.nu + 0.25) *
         jacobi_eval(n, spec.mu, spec.nu, x);
}

} // namespace trapps
