#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace trapps {

using Vec  = Eigen::VectorXd;
using Mat  = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

// Real symmetric tridiagonal matrix: diag holds the N diagonal entries, sub the
// N-1 entries coupling n and n+1.
struct SymTridiag {
  Vec diag;
  Vec sub;

  int size() const { return static_cast<int>(diag.size()); }
  Mat dense() const;
};

struct EigResult {
  Vec values;                // ascending
  Mat vectors;               // column k pairs with values[k]; empty unless requested
  double max_residual = 0.0; // max_k ||A v_k - w_k v_k|| / ||A||, filled with vectors
};

struct CEigResult {
  CVec values;               // unordered; callers sort as needed
  CMat vectors;
  double max_residual = 0.0; // relative to ||A|| + |E| ||B||, per eigenpair
};

// Cholesky failure carries the index of the first non-positive pivot.
class NotPositiveDefinite : public std::runtime_error {
public:
  int pivot;
  explicit NotPositiveDefinite(int p);
};

// Lower Cholesky factor of an SPD matrix; throws NotPositiveDefinite otherwise.
Mat cholesky_lower(const Mat& B);

EigResult eig_sym_tridiag(const SymTridiag& m, bool want_vectors = false);

// A f = E B f with A symmetric, B SPD; reduced via Cholesky to a standard
// symmetric problem. Values ascending.
EigResult eig_gen_sym(const Mat& A, const Mat& B, bool want_vectors = false);

// A f = E B f with A complex dense (not Hermitian in general), B real SPD.
// Same Cholesky reduction, then a dense complex eigensolve; every eigenpair is
// residual-checked and the worst ratio reported.
CEigResult eig_gen_complex(const CMat& A, const Mat& B);

} // namespace trapps
