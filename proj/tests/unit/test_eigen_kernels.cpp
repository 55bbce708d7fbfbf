#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "trapps/eigen_kernels.hpp"

using namespace trapps;

namespace {

SymTridiag tridiag(std::vector<double> d, std::vector<double> s) {
  SymTridiag m;
  m.diag = Eigen::Map<Vec>(d.data(), static_cast<long>(d.size()));
  m.sub = Eigen::Map<Vec>(s.data(), static_cast<long>(s.size()));
  return m;
}

} // namespace

TEST_SUITE("eigen_kernels") {

TEST_CASE("tridiagonal closed forms") {
  auto e1 = eig_sym_tridiag(tridiag({1, 1}, {0}));
  CHECK(e1.values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e1.values(1) == doctest::Approx(1.0).epsilon(1e-14));

  auto e2 = eig_sym_tridiag(tridiag({0, 0}, {1}));
  CHECK(e2.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e2.values(1) == doctest::Approx(1.0).epsilon(1e-14));

  auto e3 = eig_sym_tridiag(tridiag({2, 2}, {1}));
  CHECK(e3.values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e3.values(1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("tridiagonal eigenvectors: residual and orthogonality") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  SymTridiag m;
  const int n = 24;
  m.diag = Vec(n);
  m.sub = Vec(n - 1);
  for (int i = 0; i < n; ++i) m.diag(i) = uni(rng);
  for (int i = 0; i < n - 1; ++i) m.sub(i) = uni(rng);

  auto e = eig_sym_tridiag(m, true);
  REQUIRE(e.vectors.cols() == n);
  Mat A = m.dense();
  double anorm = A.norm();
  for (int k = 0; k < n; ++k) {
    double res = (A * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).norm();
    CHECK(res <= 1e-10 * anorm);
  }
  Mat gram = e.vectors.transpose() * e.vectors;
  CHECK((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::is_sorted(e.values.data(), e.values.data() + n));
}

TEST_CASE("generalized symmetric pencil") {
  Mat A = Mat::Zero(2, 2), B = Mat::Identity(2, 2);
  A(0, 0) = 2;
  A(1, 1) = 4;
  Mat B2 = 2 * Mat::Identity(2, 2);
  auto e = eig_gen_sym(A, B2);
  CHECK(e.values(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e.values(1) == doctest::Approx(2.0).epsilon(1e-13));

  A.setZero();
  A(0, 1) = A(1, 0) = 1;
  auto f = eig_gen_sym(A, B);
  CHECK(f.values(0) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(f.values(1) == doctest::Approx(1.0).epsilon(1e-13));

  // identity pencil: A = B SPD
  Mat S(3, 3);
  S << 4, 1, 0, 1, 3, 1, 0, 1, 5;
  auto g = eig_gen_sym(S, S);
  for (int k = 0; k < 3; ++k) CHECK(g.values(k) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generalized symmetric residual bound") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 12;
  Mat R(n, n), Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R(i, j) = uni(rng);
      Q(i, j) = uni(rng);
    }
  Mat A = R + R.transpose();
  Mat B = Q * Q.transpose() + n * Mat::Identity(n, n);
  auto e = eig_gen_sym(A, B, true);
  CHECK(e.max_residual <= 1e-9);
}

TEST_CASE("Cholesky rejects indefinite B and names the pivot") {
  Mat B = Mat::Identity(3, 3);
  B(1, 1) = -1.0;
  CHECK_THROWS_AS(cholesky_lower(B), NotPositiveDefinite);
  try {
    cholesky_lower(B);
  } catch (const NotPositiveDefinite& ex) {
    CHECK(ex.pivot == 1);
    CHECK(std::string(ex.what()).find("pivot 1") != std::string::npos);
  }
}

TEST_CASE("complex pencil closed forms") {
  const Cplx I(0, 1);
  Mat B = Mat::Identity(2, 2);

  CMat A = CMat::Zero(2, 2);
  A(0, 0) = I;
  A(1, 1) = 2.0 * I;
  auto e = eig_gen_complex(A, B);
  std::vector<Cplx> v(e.values.data(), e.values.data() + 2);
  std::sort(v.begin(), v.end(), [](Cplx a, Cplx b) { return a.imag() < b.imag(); });
  CHECK(std::abs(v[0] - I) <= 1e-12);
  CHECK(std::abs(v[1] - 2.0 * I) <= 1e-12);

  A.setZero();
  A(0, 1) = 1;
  A(1, 0) = -1;
  auto f = eig_gen_complex(A, B);
  std::vector<Cplx> w(f.values.data(), f.values.data() + 2);
  std::sort(w.begin(), w.end(), [](Cplx a, Cplx b) { return a.imag() < b.imag(); });
  CHECK(std::abs(w[0] + I) <= 1e-12);
  CHECK(std::abs(w[1] - I) <= 1e-12);
}

TEST_CASE("complex pencil: Hermitian input has a real spectrum") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 10;
  CMat A(n, n);
  for (int i = 0; i < n; ++i) {
    A(i, i) = uni(rng);
    for (int j = i + 1; j < n; ++j) {
      A(i, j) = Cplx(uni(rng), uni(rng));
      A(j, i) = std::conj(A(i, j));
    }
  }
  auto e = eig_gen_complex(A, Mat::Identity(n, n));
  for (int k = 0; k < n; ++k) CHECK(std::abs(e.values(k).imag()) <= 1e-10);
  CHECK(e.max_residual <= 1e-8);
}

TEST_CASE("complex pencil agrees with the symmetric path on real input") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 9;
  Mat R(n, n), Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R(i, j) = uni(rng);
      Q(i, j) = uni(rng);
    }
  Mat A = R + R.transpose();
  Mat B = Q * Q.transpose() + n * Mat::Identity(n, n);

  auto real_e = eig_gen_sym(A, B);
  auto cplx_e = eig_gen_complex(A.cast<Cplx>(), B);
  std::vector<double> re(n);
  for (int k = 0; k < n; ++k) {
    CHECK(std::abs(cplx_e.values(k).imag()) <= 1e-10);
    re[static_cast<size_t>(k)] = cplx_e.values(k).real();
  }
  std::sort(re.begin(), re.end());
  for (int k = 0; k < n; ++k)
    CHECK(re[static_cast<size_t>(k)] ==
          doctest::Approx(real_e.values(k)).epsilon(1e-9));
}

} // TEST_SUITE
