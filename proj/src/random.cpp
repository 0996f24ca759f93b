#include "ptsym/random.hpp"

#include <cmath>

namespace ptsym::rnd {

namespace {

template <typename Mat>
Mat gram_schmidt(Mat m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < j; ++i) m.col(j) -= m.col(i).dot(m.col(j)) * m.col(i);
    m.col(j).normalize();
  }
  return m;
}

}  // namespace

Vector complex_vector(int dim, Rng& rng) {
  std::normal_distribution<double> n01;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(n01(rng), n01(rng));
  return v;
}

Matrix ginibre(int dim, Rng& rng) {
  std::normal_distribution<double> n01;
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = Complex(n01(rng), n01(rng)) / std::sqrt(2.0);
  return g;
}

RealMatrix real_gaussian(int dim, Rng& rng) {
  std::normal_distribution<double> n01;
  RealMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = n01(rng);
  return g;
}

Matrix unitary(int dim, Rng& rng) { return gram_schmidt(ginibre(dim, rng)); }

RealMatrix orthogonal(int dim, Rng& rng) { return gram_schmidt(real_gaussian(dim, rng)); }

Matrix symmetric_unitary(int dim, Rng& rng) {
  const Matrix w = unitary(dim, rng);
  return w * w.transpose();
}

Matrix positive_definite(int dim, Rng& rng, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  const Matrix w = unitary(dim, rng);
  RealVector d(dim);
  for (int i = 0; i < dim; ++i) d(i) = std::exp(u(rng));
  Matrix p = w * d.cast<Complex>().asDiagonal() * w.adjoint();
  return 0.5 * (p + p.adjoint());
}

Matrix hermitian_unit_spectrum(int dim, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Matrix w = unitary(dim, rng);
  RealVector d(dim);
  for (int i = 0; i < dim; ++i) d(i) = u(rng);
  Matrix f = w * d.cast<Complex>().asDiagonal() * w.adjoint();
  return 0.5 * (f + f.adjoint());
}

RealMatrix symmetric_unit_spectrum(int dim, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const RealMatrix o = orthogonal(dim, rng);
  RealVector d(dim);
  for (int i = 0; i < dim; ++i) d(i) = u(rng);
  RealMatrix f = o * d.asDiagonal() * o.transpose();
  return 0.5 * (f + f.transpose());
}

RealMatrix real_idempotent(int dim, Rng& rng) {
  std::bernoulli_distribution bit(0.5);
  RealMatrix r;
  Eigen::FullPivLU<RealMatrix> lu;
  for (;;) {
    r = real_gaussian(dim, rng);
    lu.compute(r);
    if (!lu.isInvertible()) continue;
    const Eigen::JacobiSVD<RealMatrix> sv(r);
    const auto& s = sv.singularValues();
    if (s(0) < 1e3 * s(dim - 1)) break;
  }
  RealVector d(dim);
  for (int i = 0; i < dim; ++i) d(i) = bit(rng) ? 1.0 : 0.0;
  return r * d.asDiagonal() * lu.inverse();
}

Matrix density_matrix(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, rng);
  Matrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return rho / rho.trace().real();
}

RealMatrix real_density_matrix(int dim, Rng& rng) {
  const RealMatrix g = real_gaussian(dim, rng);
  RealMatrix rho = g * g.transpose();
  rho = 0.5 * (rho + rho.transpose());
  return rho / rho.trace();
}

RealMatrix well_conditioned_real(int dim, Rng& rng, double spread) {
  std::uniform_real_distribution<double> u(std::log(1.0 / spread), std::log(spread));
  RealVector s(dim);
  for (int i = 0; i < dim; ++i) s(i) = std::exp(u(rng));
  return orthogonal(dim, rng) * s.asDiagonal() * orthogonal(dim, rng);
}

}  // namespace ptsym::rnd
