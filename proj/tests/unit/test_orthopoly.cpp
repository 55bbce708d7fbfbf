#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "trapps/orthopoly.hpp"

using namespace trapps;

TEST_SUITE("orthopoly") {

TEST_CASE("Jacobi closed forms") {
  CHECK(jacobi_eval(0, 0.3, 1.7, -0.4) == 1.0);
  double a = 0.3, b = 1.7, x = 0.42;
  CHECK(jacobi_eval(1, a, b, x) ==
        doctest::Approx((a + b + 2) * x / 2 + (a - b) / 2).epsilon(1e-14));
  CHECK(jacobi_eval(3, 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(jacobi_eval(2001, 0, 0, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi_eval(-1, 0, 0, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi_eval(2, -1.0, 0, 0.5), std::domain_error);
}

TEST_CASE("Jacobi satisfies its differential equation") {
  // derivatives via the parameter-shift identity, so the check is exact
  // arithmetic: d/dx P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}
  double a = 2.0, b = 1.5;
  for (int n = 2; n <= 8; ++n) {
    for (double x : {-0.7, -0.2, 0.0, 0.3, 0.8}) {
      double y = jacobi_eval(n, a, b, x);
      double y1 = 0.5 * (n + a + b + 1) * jacobi_eval(n - 1, a + 1, b + 1, x);
      double y2 = 0.25 * (n + a + b + 1) * (n + a + b + 2) *
                  jacobi_eval(n - 2, a + 2, b + 2, x);
      double ode = (1 - x * x) * y2 + (b - a - (a + b + 2) * x) * y1 +
                   n * (n + a + b + 1) * y;
      double scale = std::abs((1 - x * x) * y2) + std::abs(y1) + std::abs(y) + 1;
      CHECK(std::abs(ode) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("Laguerre closed forms, complex argument") {
  CHECK(laguerre_eval(0, 0.7, Cplx(2, 3)) == Cplx(1, 0));
  Cplx y(0.3, 0.4);
  double al = 1.2;
  CHECK(std::abs(laguerre_eval(1, al, y) - (1.0 + al - y)) <= 1e-14);
  CHECK(std::abs(laguerre_eval(2, 0.0, Cplx(1, 0)) - Cplx(-0.5, 0)) <= 1e-14);
  CHECK_THROWS_AS(laguerre_eval(2, -1.0, Cplx(1, 0)), std::domain_error);
}

TEST_CASE("Gauss-Laguerre small orders") {
  auto r1 = gauss_laguerre(0.0, 1);
  REQUIRE(r1.nodes.size() == 1);
  CHECK(r1.nodes(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r1.weights(0) == doctest::Approx(1.0).epsilon(1e-13));

  auto r2 = gauss_laguerre(0.0, 2);
  CHECK(r2.nodes(0) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(r2.nodes(1) == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(r2.weights.sum() == doctest::Approx(1.0).epsilon(1e-13));

  auto r3 = gauss_laguerre(2.5, 8);
  CHECK(r3.weights.sum() == doctest::Approx(std::tgamma(3.5)).epsilon(1e-12));
  CHECK(r3.weights.minCoeff() > 0.0);
  for (int k = 0; k + 1 < 8; ++k) CHECK(r3.nodes(k) < r3.nodes(k + 1));
}

TEST_CASE("Gauss-Laguerre moment exactness to degree 2K-1") {
  double al = 1.3;
  int K = 12;
  auto rule = gauss_laguerre(al, K);
  for (int j = 0; j < 2 * K; ++j) {
    double got = 0.0;
    for (int k = 0; k < K; ++k) got += rule.weights(k) * std::pow(rule.nodes(k), j);
    double want = std::tgamma(al + j + 1);
    CHECK(std::abs(got - want) <= 1e-10 * want);
  }
}

TEST_CASE("Gauss-Jacobi: Legendre order 3 and the mass identity") {
  auto r = gauss_jacobi(0.0, 0.0, 3);
  CHECK(r.nodes(0) == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-13));
  CHECK(r.nodes(1) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(r.nodes(2) == doctest::Approx(std::sqrt(0.6)).epsilon(1e-13));
  CHECK(r.weights(0) == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
  CHECK(r.weights(1) == doctest::Approx(8.0 / 9.0).epsilon(1e-13));

  for (auto [a, b] : {std::pair{0.0, 1.5}, {-0.5, 2.5}, {2.0, 1.5}}) {
    auto rule = gauss_jacobi(a, b, 9);
    double mass = std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) +
                           std::lgamma(b + 1) - std::lgamma(a + b + 2));
    CHECK(rule.weights.sum() == doctest::Approx(mass).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Jacobi moment exactness to degree 2K-1") {
  double a = 0.0, b = 1.5;
  int K = 10;
  auto rule = gauss_jacobi(a, b, K);
  auto fine = gauss_jacobi(a, b, K + 6);
  for (int j = 0; j < 2 * K; ++j) {
    double got = 0.0, want = 0.0;
    for (int k = 0; k < K; ++k) got += rule.weights(k) * std::pow(rule.nodes(k), j);
    for (int k = 0; k < K + 6; ++k)
      want += fine.weights(k) * std::pow(fine.nodes(k), j);
    CHECK(std::abs(got - want) <= 1e-10 * (std::abs(want) + 1.0));
  }
}

TEST_CASE("Gauss-Jacobi degenerate parameter guard") {
  // a + b = -1 makes the first recurrence denominator vanish; the physics here
  // never needs it (b = nu > 0), so it is an explicit error, not a limit
  CHECK_THROWS_AS(gauss_jacobi(-0.5, -0.5, 4), std::domain_error);
}

TEST_CASE("orthonormal Laguerre rows") {
  double al = 4.1;
  int N = 12, K = 30;
  auto rule = gauss_laguerre(al, K);
  Mat G = laguerre_ortho_rows(rule, N);
  REQUIRE(G.rows() == N);
  REQUIRE(G.cols() == K);
  Mat gram = G * G.transpose();
  CHECK((gram - Mat::Identity(N, N)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("basis normalization under the Jacobi weight") {
  double mu = 2.0, nu = 1.5;
  auto rule = gauss_jacobi(mu, nu, 40);
  for (int n = 0; n <= 20; ++n) {
    double an = jacobi_basis_norm(n, mu, nu);
    double s = 0.0;
    for (int k = 0; k < rule.order; ++k) {
      double p = jacobi_eval(n, mu, nu, rule.nodes(k));
      s += rule.weights(k) * p * p;
    }
    CHECK(an * an * s / std::sqrt(2.0) == doctest::Approx(1.0).epsilon(1e-10));
  }
  // orthogonality of distinct degrees under the same weight
  for (int n = 0; n <= 6; ++n)
    for (int m = n + 1; m <= 7; ++m) {
      double s = 0.0;
      for (int k = 0; k < rule.order; ++k)
        s += rule.weights(k) * jacobi_eval(n, mu, nu, rule.nodes(k)) *
             jacobi_eval(m, mu, nu, rule.nodes(k));
      double an = jacobi_basis_norm(n, mu, nu);
      double am = jacobi_basis_norm(m, mu, nu);
      CHECK(std::abs(an * am * s / std::sqrt(2.0)) <= 1e-10);
    }
}

TEST_CASE("basis evaluation: boundary values and explicit form") {
  JacobiBasisSpec spec{2.0, 1.5, 1.3};
  for (int n = 0; n < 5; ++n) {
    CHECK(jacobi_basis_eval(spec, n, 0.0) == 0.0);
    CHECK(std::abs(jacobi_basis_eval(spec, n, 40.0)) <= 1e-12);
  }
  double r = 0.7;
  double x = 2 * std::pow(std::tanh(spec.lambda * r), 2) - 1;
  for (int n = 0; n < 5; ++n) {
    double want = std::sqrt(spec.lambda) * jacobi_basis_norm(n, spec.mu, spec.nu) *
                  std::pow(1 - x, spec.mu / 2) * std::pow(1 + x, spec.nu / 2 + 0.25) *
                  jacobi_eval(n, spec.mu, spec.nu, x);
    CHECK(jacobi_basis_eval(spec, n, r) == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK_THROWS_AS(jacobi_basis_eval(spec, 0, -0.1), std::domain_error);
}

TEST_CASE("radial overlap of the basis from direct integration") {
  // independent check of the measure: Simpson integration of phi_0^2 dr must
  // agree with the closed-form overlap 2n+nu+1.5 at (mu,nu) = (0.5,1.5)
  JacobiBasisSpec spec{0.5, 1.5, 1.0};
  const int M = 40000;
  const double h = 40.0 / M;
  for (int n : {0, 1}) {
    double sum = 0.0;
    for (int i = 0; i <= M; ++i) {
      double v = jacobi_basis_eval(spec, n, i * h);
      double w = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * v * v;
    }
    sum *= h / 3.0;
    CHECK(sum == doctest::Approx(2.0 * n + 3.0).epsilon(1e-6));
  }
}

} // TEST_SUITE
