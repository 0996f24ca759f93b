// Independent reference computations and random instance generators shared
// by the unit tests and the acceptance suite.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "ptsym/antilinear.hpp"
#include "ptsym/linalg.hpp"
#include "ptsym/random.hpp"

namespace ptsym::testing {

inline constexpr double kPi = 3.14159265358979323846;

/// exp(A) by scaling and squaring with a degree-12 Taylor polynomial.
inline Matrix expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix x = a / std::ldexp(1.0, squarings);
  const Eigen::Index n = a.rows();
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 12; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Eigen's general complex eigensolver, used as a reference.
inline Vector reference_eigenvalues(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  return es.eigenvalues();
}

/// Roots of the characteristic polynomial of a 2x2 matrix.
inline std::pair<Complex, Complex> char_poly_roots(const Matrix& a) {
  const Complex tr = a.trace();
  const Complex det = a.determinant();
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

/// max_i min_j |a_i - b_j| and symmetric counterpart.
inline double spectrum_distance(const Vector& a, const Vector& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double best = INFINITY;
    for (Eigen::Index j = 0; j < b.size(); ++j) best = std::min(best, std::abs(a(i) - b(j)));
    worst = std::max(worst, best);
  }
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    double best = INFINITY;
    for (Eigen::Index i = 0; i < a.size(); ++i) best = std::min(best, std::abs(a(i) - b(j)));
    worst = std::max(worst, best);
  }
  return worst;
}

/// Random antiunitary involution W W^T kappa together with a Takagi factor
/// obtained independently of the library (W itself).
struct RandomInvolution {
  AntilinearOperator k;
  Matrix w;  // W W^T = U
};

inline RandomInvolution random_involution(int dim, rnd::Rng& rng) {
  const Matrix w = rnd::unitary(dim, rng);
  return {AntilinearOperator(Matrix(w * w.transpose())), w};
}

/// Real diagonal with entries spaced by at least `gap`.
inline RealVector spaced_spectrum(int dim, rnd::Rng& rng, double gap = 0.5) {
  std::uniform_real_distribution<double> u(0.0, 0.5);
  RealVector d(dim);
  double x = -0.5 * gap * dim;
  for (int i = 0; i < dim; ++i) {
    x += gap + u(rng);
    d(i) = x;
  }
  std::shuffle(d.data(), d.data() + dim, rng);
  return d;
}

/// O = W X diag(l) X^{-1} W^dagger with X real: K-symmetric (K = W W^T kappa),
/// diagonalizable, real spectrum, K-invariant eigenvectors W X e_j.
struct UnbrokenInstance {
  Matrix o;
  AntilinearOperator k;
  RealVector spectrum;
};

inline UnbrokenInstance random_unbroken(int dim, rnd::Rng& rng) {
  RandomInvolution inv = random_involution(dim, rng);
  const RealMatrix x = rnd::well_conditioned_real(dim, rng);
  const RealVector l = spaced_spectrum(dim, rng);
  const RealMatrix core = x * l.asDiagonal() * x.inverse();
  const Matrix o = inv.w * core.cast<Complex>() * inv.w.adjoint();
  return {o, inv.k, l};
}

}  // namespace ptsym::testing
