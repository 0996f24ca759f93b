#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "oracles.hpp"
#include "ptsym/linalg.hpp"
#include "ptsym/random.hpp"

namespace ptsym {
namespace {

using testing::kPi;

const Complex I(0.0, 1.0);

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Tolerance, ThresholdIsMaxOfAbsoluteAndRelative) {
  const Tolerance tol(1e-10, 1e-9);
  EXPECT_DOUBLE_EQ(tol.threshold(0.01), 1e-10);
  EXPECT_DOUBLE_EQ(tol.threshold(1000.0), 1e-6);
  EXPECT_THROW(Tolerance(-1.0, 1e-9), InvalidArgument);
}

TEST(Eig, DiagonalInput) {
  const Matrix a = mat2(1.0, 0.0, 0.0, 2.0);
  const EigenDecomposition ed = eig(a);
  ASSERT_EQ(ed.eigenvalues.size(), 2);
  EXPECT_NEAR(std::abs(ed.eigenvalues(0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(ed.eigenvalues(1) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR((ed.right_vectors.cwiseAbs() - RealMatrix::Identity(2, 2)).norm(), 0.0, 1e-14);
  EXPECT_TRUE(ed.diagonalizable);
}

TEST(Eig, TwoLevelUnbrokenMatchesCharacteristicPolynomial) {
  const Matrix h = mat2(I, 2.0, 2.0, -I);
  const EigenDecomposition ed = eig(h);
  const auto [r1, r2] = testing::char_poly_roots(h);
  Vector expected(2);
  expected << r1, r2;
  EXPECT_LT(testing::spectrum_distance(ed.eigenvalues, expected), 1e-12);
  Vector closed(2);
  closed << std::sqrt(3.0), -std::sqrt(3.0);
  EXPECT_LT(testing::spectrum_distance(ed.eigenvalues, closed), 1e-12);
  EXPECT_TRUE(ed.diagonalizable);
}

TEST(Eig, ExceptionalPointIsDefective) {
  const Matrix h = mat2(I, 1.0, 1.0, -I);
  const EigenDecomposition ed = eig(h);
  ASSERT_EQ(ed.clusters.size(), 1u);
  EXPECT_LT(std::abs(ed.clusters[0].value), 1e-7);
  EXPECT_EQ(ed.clusters[0].algebraic, 2);
  EXPECT_EQ(ed.clusters[0].geometric, 1);
  EXPECT_TRUE(ed.clusters[0].defective());
  EXPECT_FALSE(ed.diagonalizable);
  EXPECT_EQ(ed.left_vectors.size(), 0);
}

TEST(Eig, JordanBlockAndDerogatoryMatrix) {
  Matrix j = Matrix::Zero(3, 3);
  j(0, 0) = j(1, 1) = j(2, 2) = 2.0;
  j(0, 1) = 1.0;
  EigenDecomposition ed = eig(j);
  ASSERT_EQ(ed.clusters.size(), 1u);
  EXPECT_EQ(ed.clusters[0].algebraic, 3);
  EXPECT_EQ(ed.clusters[0].geometric, 2);
  EXPECT_FALSE(ed.diagonalizable);

  ed = eig(Matrix(2.0 * Matrix::Identity(3, 3)));
  ASSERT_EQ(ed.clusters.size(), 1u);
  EXPECT_EQ(ed.clusters[0].geometric, 3);
  EXPECT_TRUE(ed.diagonalizable);
}

TEST(Eig, RejectsMalformedInput) {
  Matrix a = Matrix::Identity(2, 2);
  a(0, 1) = Complex(std::nan(""), 0.0);
  EXPECT_THROW(eig(a), InvalidArgument);
  EXPECT_THROW(eig(Matrix(2, 3)), InvalidArgument);
  EXPECT_THROW(eig(Matrix::Identity(kMaxDim + 1, kMaxDim + 1)), InvalidArgument);
}

TEST(EigProperty, RandomDiagonalizableMatchesReference) {
  rnd::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 8;
    const Matrix a = rnd::ginibre(d, rng);
    const EigenDecomposition ed = eig(a);
    ASSERT_TRUE(ed.diagonalizable) << "trial " << trial;
    const Matrix r = ed.right_vectors;
    EXPECT_LT((a * r - r * ed.eigenvalues.asDiagonal()).norm() / a.norm(), 1e-8);
    EXPECT_LT((ed.left_vectors.adjoint() * r - Matrix::Identity(d, d)).norm(), 1e-6);
    EXPECT_LT(testing::spectrum_distance(ed.eigenvalues, testing::reference_eigenvalues(a)), 1e-8 * a.norm());
  }
}

TEST(EigProperty, LargerNonNormalMatrices) {
  rnd::Rng rng(5);
  for (int d : {16, 32, 64}) {
    const Matrix a = rnd::ginibre(d, rng);
    const EigenDecomposition ed = eig(a);
    EXPECT_LT(testing::spectrum_distance(ed.eigenvalues, testing::reference_eigenvalues(a)), 1e-8 * a.norm());
    EXPECT_LT((a * ed.right_vectors - ed.right_vectors * ed.eigenvalues.asDiagonal()).norm() / a.norm(), 1e-8);
  }
}

TEST(Schur, UnitaryTriangularFactorization) {
  rnd::Rng rng(3);
  for (int d : {1, 2, 5, 9}) {
    const Matrix a = rnd::ginibre(d, rng);
    const SchurForm s = schur(a);
    EXPECT_LT((s.z * s.t * s.z.adjoint() - a).norm(), 1e-10 * a.norm());
    EXPECT_LT((s.z.adjoint() * s.z - Matrix::Identity(d, d)).norm(), 1e-12);
    EXPECT_LT(s.t.triangularView<Eigen::StrictlyLower>().toDenseMatrix().norm(), 1e-12 * a.norm());
  }
}

TEST(Eigh, MatchesReferenceSolver) {
  rnd::Rng rng(8);
  for (int d = 1; d <= 8; ++d) {
    Matrix g = rnd::ginibre(d, rng);
    const Matrix h = g + g.adjoint();
    const HermitianEigen he = eigh(h);
    Eigen::SelfAdjointEigenSolver<Matrix> ref(h);
    EXPECT_LT((he.values - ref.eigenvalues()).norm(), 1e-12 * h.norm());
    EXPECT_LT((h * he.vectors - he.vectors * he.values.asDiagonal()).norm(), 1e-12 * h.norm());
    const RealMatrix s = rnd::real_gaussian(d, rng);
    const RealMatrix sym = s + s.transpose();
    const SymmetricEigen se = eigh(sym);
    Eigen::SelfAdjointEigenSolver<RealMatrix> rref(sym);
    EXPECT_LT((se.values - rref.eigenvalues()).norm(), 1e-12 * sym.norm());
  }
}

TEST(Svd, MatchesReferenceSolver) {
  rnd::Rng rng(9);
  for (int d = 1; d <= 8; ++d) {
    const Matrix a = rnd::ginibre(d, rng);
    const SingularValues sv = svd(a);
    Eigen::JacobiSVD<Matrix> ref(a);
    EXPECT_LT((sv.values - ref.singularValues()).norm(), 1e-12 * a.norm());
  }
}

TEST(NumericalRank, Examples) {
  EXPECT_EQ(numerical_rank(Matrix::Zero(3, 3)), 0);
  EXPECT_EQ(numerical_rank(Matrix::Identity(3, 3)), 3);
  const Matrix q = mat2(1.0, -20.0 / 3.0, 0.0, 0.0);
  EXPECT_EQ(numerical_rank(q), 1);
}

TEST(NullSpace, SpansKernel) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 2) = 2.0;
  const Matrix n = null_space(a);
  ASSERT_EQ(n.cols(), 1);
  EXPECT_LT((a * n).norm(), 1e-14);
  EXPECT_NEAR(n.norm(), 1.0, 1e-14);
}

TEST(SqrtPd, Examples) {
  EXPECT_LT((sqrt_pd(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm(), 1e-14);
  const Matrix b = sqrt_pd(mat2(4.0, 0.0, 0.0, 9.0));
  EXPECT_LT((b - mat2(2.0, 0.0, 0.0, 3.0)).norm(), 1e-13);
}

TEST(SqrtPd, TwoLevelMetricAgainstFrozenOracle) {
  const double r3 = std::sqrt(3.0);
  const Matrix eta = mat2(2.0, -I, I, 2.0) / r3;
  const Matrix b = sqrt_pd(eta);
  EXPECT_LT((b * b - eta).norm(), 1e-10);
  // eta (1, i) = (3/sqrt3)(1, i), eta (1, -i) = (1/sqrt3)(1, -i).
  Vector v1(2), v2(2);
  v1 << 1.0, I;
  v2 << 1.0, -I;
  const Matrix p1 = v1 * v1.adjoint() / 2.0, p2 = v2 * v2.adjoint() / 2.0;
  const Matrix expected = std::sqrt(3.0 / r3) * p1 + std::sqrt(1.0 / r3) * p2;
  EXPECT_LT((b - expected).norm(), 1e-12);
}

TEST(SqrtPd, RejectsInvalidInput) {
  EXPECT_THROW(sqrt_pd(mat2(1.0, 1.0, 0.0, 1.0)), InvalidArgument);
  EXPECT_THROW(sqrt_pd(mat2(1.0, 0.0, 0.0, -1.0)), InvalidArgument);
  EXPECT_THROW(sqrt_pd(mat2(1.0, 0.0, 0.0, 0.0)), InvalidArgument);
}

TEST(SqrtPdProperty, RandomPositiveDefinite) {
  rnd::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 8;
    const Matrix a = rnd::positive_definite(d, rng, 2.0);
    const PdRoots roots = pd_roots(a);
    const Matrix& b = roots.sqrt;
    EXPECT_LT((b - b.adjoint()).norm(), 1e-12 * b.norm());
    EXPECT_GT(eigh(b).values(0), 0.0);
    EXPECT_LT((b * b - a).norm(), 1e-9 * a.norm());
    EXPECT_LT((b * roots.inv_sqrt - Matrix::Identity(d, d)).norm(), 1e-10);
  }
}

TEST(Takagi, Examples) {
  EXPECT_LT((takagi(Matrix::Identity(2, 2)) * takagi(Matrix::Identity(2, 2)).transpose() - Matrix::Identity(2, 2))
                .norm(),
            1e-14);
  const Matrix sx = mat2(0.0, 1.0, 1.0, 0.0);
  const Matrix v = takagi(sx);
  EXPECT_LT((v * v.transpose() - sx).norm(), 1e-10);
  EXPECT_LT((v.adjoint() * v - Matrix::Identity(2, 2)).norm(), 1e-10);

  const double phi = 0.7, psi = -2.1;
  const Matrix u = mat2(std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, psi));
  const Matrix w = takagi(u);
  EXPECT_LT((w * w.transpose() - u).norm(), 1e-12);
  // Columns of diag(e^{i phi/2}, e^{i psi/2}), up to order and sign.
  const Complex half[2] = {std::polar(1.0, phi / 2), std::polar(1.0, psi / 2)};
  for (int c = 0; c < 2; ++c) {
    const int row = std::abs(w(0, c)) > std::abs(w(1, c)) ? 0 : 1;
    EXPECT_LT(std::abs(w(1 - row, c)), 1e-12);
    EXPECT_LT(std::min(std::abs(w(row, c) - half[row]), std::abs(w(row, c) + half[row])), 1e-12);
  }
}

TEST(Takagi, DegenerateRealPart) {
  // Re U has a repeated eigenvalue; Im U splits it.
  const Matrix u = mat2(std::polar(1.0, 0.5), 0.0, 0.0, std::polar(1.0, -0.5));
  const Matrix v = takagi(u);
  EXPECT_LT((v * v.transpose() - u).norm(), 1e-12);
  const Matrix minus_one = -Matrix::Identity(3, 3);
  const Matrix w = takagi(minus_one);
  EXPECT_LT((w * w.transpose() - minus_one).norm(), 1e-12);
}

TEST(Takagi, RejectsInvalidInput) {
  EXPECT_THROW(takagi(mat2(0.0, 1.0, -1.0, 0.0)), InvalidArgument);
  EXPECT_THROW(takagi(mat2(2.0, 0.0, 0.0, 1.0)), InvalidArgument);
}

TEST(TakagiProperty, RandomSymmetricUnitaries) {
  rnd::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 8;
    const Matrix u = rnd::symmetric_unitary(d, rng);
    const Matrix v = takagi(u);
    EXPECT_LT((v * v.transpose() - u).norm(), 1e-9);
    EXPECT_LT((v.adjoint() * v - Matrix::Identity(d, d)).norm(), 1e-9);
  }
}

TEST(Inverse, ConditionNumber) {
  const Matrix a = mat2(2.0, 0.0, 0.0, 0.5);
  EXPECT_NEAR(condition_number(a), 4.0, 1e-12);
  EXPECT_LT((inverse(a) * a - Matrix::Identity(2, 2)).norm(), 1e-14);
  EXPECT_TRUE(std::isinf(condition_number(Matrix::Zero(2, 2))));
}

}  // namespace
}  // namespace ptsym
