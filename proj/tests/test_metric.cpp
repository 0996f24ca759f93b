#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptsym/metric.hpp"
#include "ptsym/pt_classify.hpp"
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

Vector vec2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

const Matrix kEta2 = mat2(2.0, -I, I, 2.0) / std::sqrt(3.0);

TEST(MetricOperator, CachesRoots) {
  const MetricOperator eta(kEta2);
  EXPECT_LT((eta.sqrt() * eta.sqrt() - kEta2).norm(), 1e-12);
  EXPECT_LT((eta.sqrt() * eta.inv_sqrt() - Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LT((eta.inverse() * kEta2 - Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_THROW(MetricOperator(mat2(1.0, 0.0, 0.0, -1.0)), InvalidArgument);
  EXPECT_THROW(MetricOperator(mat2(1.0, 1.0, 0.0, 1.0)), InvalidArgument);
}

TEST(EtaInner, Examples) {
  rnd::Rng rng(1);
  const Vector phi = rnd::complex_vector(3, rng), psi = rnd::complex_vector(3, rng);
  EXPECT_LT(std::abs(eta_inner(MetricOperator::identity(3), phi, psi) - phi.dot(psi)), 1e-14);
  const MetricOperator diag14(mat2(1.0, 0.0, 0.0, 4.0));
  EXPECT_NEAR(std::abs(eta_inner(diag14, vec2(0.0, 1.0), vec2(0.0, 1.0)) - 4.0), 0.0, 1e-14);
  const Complex v = eta_inner(MetricOperator(kEta2), vec2(1.0, 0.0), vec2(1.0, 0.0));
  EXPECT_NEAR(v.real(), 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-14);
  EXPECT_THROW(eta_inner(diag14, phi, psi), InvalidArgument);
}

TEST(EtaInnerProperty, Positivity) {
  rnd::Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 6;
    const MetricOperator eta(rnd::positive_definite(d, rng, 2.0));
    for (int s = 0; s < 100; ++s) {
      const Vector psi = rnd::complex_vector(d, rng);
      const Complex v = eta_inner(eta, psi, psi);
      EXPECT_GT(v.real(), 0.0);
      EXPECT_LT(std::abs(v.imag()), 1e-12 * v.real());
    }
  }
}

TEST(EtaHermitian, Examples) {
  rnd::Rng rng(3);
  const Matrix g = rnd::ginibre(3, rng);
  EXPECT_TRUE(is_eta_hermitian(Matrix(g + g.adjoint()), MetricOperator::identity(3)));
  const TwoByTwoFamily fam(1, 2, kPi / 2);
  EXPECT_TRUE(is_eta_hermitian(fam.hamiltonian(), MetricOperator(cpt_metric(fam))));
  const Matrix m = mat2(1.0, 0.0, 0.0, -1.0) + I * mat2(0.0, 1.0, 1.0, 0.0);
  EXPECT_FALSE(is_eta_hermitian(m, MetricOperator::identity(2)));
}

TEST(EtaHermitianProperty, RealSpectrum) {
  rnd::Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 6;
    const MetricOperator eta(rnd::positive_definite(d, rng));
    const Matrix g = rnd::ginibre(d, rng);
    const Matrix m = eta.inv_sqrt() * (g + g.adjoint()) * eta.sqrt();
    EXPECT_TRUE(is_eta_hermitian(m, eta));
    const Vector ev = testing::reference_eigenvalues(m);
    EXPECT_LT(ev.imag().cwiseAbs().maxCoeff(), 1e-8 * std::max(1.0, m.norm()));
  }
}

TEST(EtaUnitary, Examples) {
  rnd::Rng rng(5);
  EXPECT_TRUE(is_eta_unitary(rnd::unitary(3, rng), MetricOperator::identity(3)));
  EXPECT_FALSE(is_eta_unitary(mat2(2.0, 0.0, 0.0, 1.0), MetricOperator::identity(2)));
}

TEST(EtaUnitaryProperty, EvolutionByEtaHermitianHamiltonian) {
  rnd::Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 4;
    const MetricOperator eta(rnd::positive_definite(d, rng));
    const Matrix g = rnd::ginibre(d, rng);
    const Matrix h = eta.inv_sqrt() * (g + g.adjoint()) * eta.sqrt();
    for (double t : {0.1, 1.0, 7.5}) {
      const Matrix u = testing::expm(Complex(0.0, -t) * h);
      EXPECT_TRUE(is_eta_unitary(u, eta)) << "trial " << trial << " t " << t;
    }
  }
  const TwoByTwoFamily fam(1, 2, kPi / 2);
  const MetricOperator eta(cpt_metric(fam));
  EXPECT_TRUE(is_eta_unitary(testing::expm(Complex(0.0, -3.0) * fam.hamiltonian()), eta));
}

TEST(EtaPsd, Examples) {
  rnd::Rng rng(7);
  const MetricOperator eta(rnd::positive_definite(2, rng));
  const Matrix id = Matrix::Identity(2, 2);
  EXPECT_TRUE(is_eta_psd(id, eta));
  const Matrix e = eta.inv_sqrt() * mat2(0.3, 0.0, 0.0, 0.8) * eta.sqrt();
  EXPECT_TRUE(is_eta_psd(e, eta));
  EXPECT_TRUE(is_eta_effect(e, eta));
  EXPECT_FALSE(is_eta_psd(Matrix(-id), eta));
  EXPECT_FALSE(is_eta_effect(Matrix(2.0 * id), eta));
  EXPECT_THROW(is_eta_psd(mat2(0.0, 1.0, 0.0, 0.0), eta), InvalidArgument);
}

TEST(MetricFromUnbroken, HermitianGivesIdentity) {
  rnd::Rng rng(8);
  const RealMatrix s = rnd::real_gaussian(3, rng);
  const Matrix h = (s + s.transpose()).cast<Complex>();
  const MetricFromHamiltonian m = metric_from_unbroken(h, AntilinearOperator::conjugation(3));
  EXPECT_LT((m.metric.eta() - Matrix::Identity(3, 3)).norm(), 1e-10);
  EXPECT_FALSE(m.warning);
}

TEST(MetricFromUnbroken, TwoLevelFamily) {
  const TwoByTwoFamily fam(1, 2, kPi / 2);
  const Matrix h = fam.hamiltonian();
  const MetricFromHamiltonian m = metric_from_unbroken(h, TwoByTwoFamily::pt());
  EXPECT_TRUE(is_eta_hermitian(h, m.metric));
  EXPECT_LT(m.residual, 1e-10);
  // Any valid metric here is PC up to a positive scale and a diagonal
  // reweighting in the eigenbasis; both give eta H eta^{-1} = H^dagger.
  EXPECT_LT((m.metric.eta() * h * m.metric.inverse() - h.adjoint()).norm(), 1e-10);
  EXPECT_THROW(metric_from_unbroken(TwoByTwoFamily(1, 1, kPi / 2).hamiltonian(), TwoByTwoFamily::pt()),
               InvalidArgument);
}

TEST(MetricFromUnbrokenProperty, RandomUnbrokenInstances) {
  rnd::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 5;
    const auto inst = testing::random_unbroken(d, rng);
    const MetricFromHamiltonian m = metric_from_unbroken(inst.o, inst.k);
    const Matrix& eta = m.metric.eta();
    EXPECT_LT((eta - eta.adjoint()).norm(), 1e-10 * eta.norm());
    EXPECT_GT(eigh(eta).values(0), 0.0);
    EXPECT_LT((m.metric.sqrt() * m.metric.sqrt() - eta).norm(), 1e-9 * eta.norm());
    EXPECT_LT((eta * inst.o * m.metric.inverse() - inst.o.adjoint()).norm(), 1e-8 * inst.o.norm());
  }
}

TEST(TwoByTwoFamily, ClosedForms) {
  const TwoByTwoFamily fam(1, 2, kPi / 2);
  ASSERT_TRUE(fam.alpha());
  EXPECT_NEAR(*fam.alpha(), kPi / 6, 1e-14);
  EXPECT_NEAR(std::abs(fam.eigenvalue_plus() - std::sqrt(3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(fam.eigenvalue_minus() + std::sqrt(3.0)), 0.0, 1e-14);
  const Matrix h = fam.hamiltonian();
  EXPECT_LT((h * fam.eigenvector_plus() - fam.eigenvalue_plus() * fam.eigenvector_plus()).norm(), 1e-13);
  EXPECT_LT((h * fam.eigenvector_minus() - fam.eigenvalue_minus() * fam.eigenvector_minus()).norm(), 1e-13);
  // eigenvectors are PT-invariant
  const AntilinearOperator pt = TwoByTwoFamily::pt();
  EXPECT_LT((pt.apply(fam.eigenvector_plus()) - fam.eigenvector_plus()).norm(), 1e-14);
  EXPECT_LT((pt.apply(fam.eigenvector_minus()) - fam.eigenvector_minus()).norm(), 1e-14);
  EXPECT_FALSE(TwoByTwoFamily(2, 1, kPi / 2).alpha());
  EXPECT_FALSE(TwoByTwoFamily(1, 1, kPi / 2).alpha());
}

TEST(ChargeOperator, Examples) {
  const TwoByTwoFamily herm(0.0, 1.3, 0.4);
  ASSERT_TRUE(herm.alpha());
  EXPECT_NEAR(*herm.alpha(), 0.0, 1e-15);
  EXPECT_LT((charge_operator(herm) - mat2(0.0, 1.0, 1.0, 0.0)).norm(), 1e-15);

  const TwoByTwoFamily fam(1, 2, kPi / 2);
  const Matrix c = charge_operator(fam);
  const Matrix expected = (2.0 / std::sqrt(3.0)) * mat2(I / 2.0, 1.0, 1.0, -I / 2.0);
  EXPECT_LT((c - expected).norm(), 1e-14);
  EXPECT_LT((c * fam.eigenvector_plus() - fam.eigenvector_plus()).norm(), 1e-14);
  EXPECT_LT((c * fam.eigenvector_minus() + fam.eigenvector_minus()).norm(), 1e-14);
  EXPECT_LT((c * c - Matrix::Identity(2, 2)).norm(), 1e-14);
  EXPECT_LT((cpt_metric(fam) - kEta2).norm(), 1e-14);
  EXPECT_THROW(charge_operator(TwoByTwoFamily(2, 1, kPi / 2)), InvalidArgument);
}

TEST(CptInner, Examples) {
  const TwoByTwoFamily herm(0.0, 1.0, 0.0);
  EXPECT_NEAR(std::abs(cpt_inner(herm, vec2(1.0, 0.0), vec2(1.0, 0.0)) - 1.0), 0.0, 1e-15);
  const TwoByTwoFamily fam(1, 2, kPi / 2);
  const Vector p = fam.eigenvector_plus(), m = fam.eigenvector_minus();
  EXPECT_NEAR(std::abs(cpt_inner(fam, p, p) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cpt_inner(fam, m, m) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cpt_inner(fam, p, m)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cpt_inner(fam, m, p)), 0.0, 1e-14);
}

TEST(CptInnerProperty, EqualsEtaInnerWithPC) {
  rnd::Rng rng(10);
  std::uniform_real_distribution<double> r(0.0, 2.0), th(0.0, kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoByTwoFamily fam(r(rng), 0.1 + r(rng), th(rng));
    if (!fam.alpha()) continue;
    const MetricOperator eta(cpt_metric(fam));
    const Vector psi = rnd::complex_vector(2, rng), phi = rnd::complex_vector(2, rng);
    const Complex a = cpt_inner(fam, psi, phi), b = eta_inner(eta, psi, phi);
    EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(b)));
  }
}

TEST(CptProperty, CCommutesWithPT) {
  rnd::Rng rng(11);
  const AntilinearOperator pt = TwoByTwoFamily::pt();
  std::uniform_real_distribution<double> r(0.0, 2.0), th(0.0, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoByTwoFamily fam(r(rng), 0.1 + r(rng), th(rng));
    if (!fam.alpha()) continue;
    const Matrix c = charge_operator(fam);
    const Vector x = rnd::complex_vector(2, rng);
    EXPECT_LT((c * pt.apply(x) - pt.apply(c * x)).norm(), 1e-10 * x.norm() * c.norm());
  }
}

TEST(CptProperty, GridOfUnbrokenRegion) {
  const AntilinearOperator pt = TwoByTwoFamily::pt();
  for (int i = 0; i < 20; ++i)
    for (int j = 1; j <= 20; ++j)
      for (int l = 0; l < 20; ++l) {
        const TwoByTwoFamily fam(2.0 * i / 19, 2.0 * j / 20, l * kPi / 20);
        const auto alpha = fam.alpha();
        if (!alpha) continue;
        const Matrix eta = cpt_metric(fam);
        EXPECT_EQ(eigh(Matrix(0.5 * (eta + eta.adjoint()))).values(0) > 0.0, std::abs(*alpha) < kPi / 2);
        const Matrix h = fam.hamiltonian();
        EXPECT_LT((eta * h * eta.inverse() - h.adjoint()).norm(), 1e-10 * std::max(1.0, h.norm()) / std::cos(*alpha));
      }
}

}  // namespace
}  // namespace ptsym
