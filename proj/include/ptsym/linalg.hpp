// Dense complex linear algebra at desk scale (d <= 64).
//
// Everything here is a pure function of its arguments. Matrices are plain
// Eigen dense types; the decompositions (Schur/QR eigensolver, Jacobi
// eigensolver, one-sided Jacobi SVD, Takagi) are implemented in this module.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ptsym/error.hpp"

namespace ptsym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMaxDim = 64;

/// Absolute/relative tolerance pair. A quantity is treated as zero when it
/// does not exceed max(abs_tol, rel_tol * scale).
class Tolerance {
 public:
  Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol);

  double abs_tol() const { return abs_tol_; }
  double rel_tol() const { return rel_tol_; }
  double threshold(double scale) const;

 private:
  double abs_tol_ = 1e-10;
  double rel_tol_ = 1e-9;
};

/// Throws InvalidArgument unless `a` is square, non-empty, at most kMaxDim
/// and finite. `what` names the argument in the message.
void require_operator(const Matrix& a, const char* what);
void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

bool is_finite(const Matrix& a);
bool is_hermitian(const Matrix& a, const Tolerance& tol = {});
bool is_unitary(const Matrix& a, const Tolerance& tol = {});
bool is_symmetric(const Matrix& a, const Tolerance& tol = {});

Matrix identity(int dim);

/// One group of eigenvalues that are numerically indistinguishable.
struct EigenCluster {
  Complex value;             // mean of the members
  std::vector<int> members;  // indices into EigenDecomposition::eigenvalues
  int algebraic = 0;
  int geometric = 0;
  bool defective() const { return geometric < algebraic; }
};

struct EigenDecomposition {
  Vector eigenvalues;    // with multiplicity, grouped by cluster
  Matrix right_vectors;  // unit-norm columns, A r_i = lambda_i r_i
  // Columns are eigenvectors of A^dagger with left^dagger * right = 1.
  // Empty when the matrix is not diagonalizable.
  Matrix left_vectors;
  std::vector<EigenCluster> clusters;  // sorted by (real, imag)
  bool diagonalizable = true;
  double cluster_radius = 0.0;
};

/// Eigendecomposition of a general complex matrix via Householder reduction
/// to Hessenberg form and Wilkinson-shifted QR. Eigenvalues closer than
/// tol.threshold(|A|_F) are clustered; clusters are then checked for
/// coalescence (exceptional points) with rank tests on A - lambda 1.
/// Throws NumericalError if QR does not converge within 100*d sweeps.
EigenDecomposition eig(const Matrix& a, const Tolerance& tol = {});

/// Complex Schur form A = Z T Z^dagger (T upper triangular).
struct SchurForm {
  Matrix t;
  Matrix z;
};
SchurForm schur(const Matrix& a);

/// Eigenpairs of a Hermitian (or real symmetric) matrix by cyclic Jacobi,
/// eigenvalues ascending.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};
HermitianEigen eigh(const Matrix& a);

struct SymmetricEigen {
  RealVector values;
  RealMatrix vectors;
};
SymmetricEigen eigh(const RealMatrix& a);

/// Singular values (descending) and right singular vectors by one-sided
/// Jacobi.
struct SingularValues {
  RealVector values;
  Matrix right;  // columns pair with values
};
SingularValues svd(const Matrix& a);

/// Count of singular values above max(abs_tol, rel_tol * sigma_max).
int numerical_rank(const Matrix& a, const Tolerance& tol = {});

/// Orthonormal basis (columns) of the numerical null space.
Matrix null_space(const Matrix& a, const Tolerance& tol = {});

/// Principal square root of a Hermitian positive-definite matrix.
Matrix sqrt_pd(const Matrix& a, const Tolerance& tol = {});

struct PdRoots {
  Matrix sqrt;
  Matrix inv_sqrt;
};
PdRoots pd_roots(const Matrix& a, const Tolerance& tol = {});

/// Autonne-Takagi factor of a symmetric unitary: returns unitary V with
/// V V^T = U. V is unique only up to a real orthogonal right factor.
Matrix takagi(const Matrix& u, const Tolerance& tol = {});

Matrix inverse(const Matrix& a);

/// sigma_max / sigma_min (infinity when singular).
double condition_number(const Matrix& a);

}  // namespace ptsym
