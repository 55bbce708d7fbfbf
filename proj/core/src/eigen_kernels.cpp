#include "trapps/eigen_kernels.hpp"

#include <Eigen/Eigenvalues>
#include <string>

namespace trapps {

Mat SymTridiag::dense() const {
  const int n = size();
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    out(i + 1, i) = sub[i];
    out(i, i + 1) = sub[i];
  }
  return out;
}

NotPositiveDefinite::NotPositiveDefinite(int p)
    : std::runtime_error("matrix is not positive definite: pivot " + std::to_string(p) +
                         " is non-positive"),
      pivot(p) {}

Mat cholesky_lower(const Mat& B) {
  const int n = static_cast<int>(B.rows());
  Mat L = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = B(j, j) - L.row(j).head(j).squaredNorm();
    if (!(d > 0.0)) throw NotPositiveDefinite(j);
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i)
      L(i, j) = (B(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
  }
  return L;
}

EigResult eig_sym_tridiag(const SymTridiag& m, bool want_vectors) {
  const int n = m.size();
  if (n < 1) throw std::invalid_argument("eig_sym_tridiag: empty matrix");
  Eigen::SelfAdjointEigenSolver<Mat> solver;
  solver.computeFromTridiagonal(m.diag, m.sub,
                                want_vectors ? Eigen::ComputeEigenvectors
                                             : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_sym_tridiag: iteration did not converge");
  EigResult res;
  res.values = solver.eigenvalues();
  if (want_vectors) {
    res.vectors = solver.eigenvectors();
    const Mat A = m.dense();
    const double anorm = A.cwiseAbs().rowwise().sum().maxCoeff();
    for (int k = 0; k < n; ++k) {
      const double r =
          (A * res.vectors.col(k) - res.values[k] * res.vectors.col(k)).norm();
      res.max_residual = std::max(res.max_residual, r / std::max(anorm, 1e-300));
    }
  }
  return res;
}

EigResult eig_gen_sym(const Mat& A, const Mat& B, bool want_vectors) {
  const int n = static_cast<int>(A.rows());
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw std::invalid_argument("eig_gen_sym: dimension mismatch");
  const Mat L = cholesky_lower(B);
  // C = L^{-1} A L^{-T}, symmetric standard problem with the same spectrum.
  Mat C = L.triangularView<Eigen::Lower>().solve(A);
  C = L.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
  C = 0.5 * (C + C.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> solver(C, want_vectors ? Eigen::ComputeEigenvectors
                                                            : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_gen_sym: iteration did not converge");
  EigResult res;
  res.values = solver.eigenvalues();
  if (want_vectors) {
    // back-transform f = L^{-T} g
    res.vectors = L.transpose().triangularView<Eigen::Upper>().solve(solver.eigenvectors());
    const double anorm = A.cwiseAbs().rowwise().sum().maxCoeff();
    const double bnorm = B.cwiseAbs().rowwise().sum().maxCoeff();
    for (int k = 0; k < n; ++k) {
      const Vec f = res.vectors.col(k);
      const double r = (A * f - res.values[k] * (B * f)).norm();
      const double scale = (anorm + std::abs(res.values[k]) * bnorm) * f.norm();
      res.max_residual = std::max(res.max_residual, r / std::max(scale, 1e-300));
    }
  }
  return res;
}

CEigResult eig_gen_complex(const CMat& A, const Mat& B) {
  const int n = static_cast<int>(A.rows());
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw std::invalid_argument("eig_gen_complex: dimension mismatch");
  const CMat L = cholesky_lower(B).cast<Cplx>();
  CMat C = L.triangularView<Eigen::Lower>().solve(A);
  C = L.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
  Eigen::ComplexEigenSolver<CMat> solver(C, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_gen_complex: QR iteration did not converge");
  CEigResult res;
  res.values = solver.eigenvalues();
  res.vectors = L.transpose().triangularView<Eigen::Upper>().solve(solver.eigenvectors());
  const double anorm = A.cwiseAbs().rowwise().sum().maxCoeff();
  const double bnorm = B.cwiseAbs().rowwise().sum().maxCoeff();
  for (int k = 0; k < n; ++k) {
    const CVec f = res.vectors.col(k);
    const double r = (A * f - res.values[k] * (B.cast<Cplx>() * f)).norm();
    const double scale = (anorm + std::abs(res.values[k]) * bnorm) * f.norm();
    res.max_residual = std::max(res.max_residual, r / std::max(scale, 1e-300));
  }
  return res;
}

} // namespace trapps
