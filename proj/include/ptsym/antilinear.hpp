// Antilinear operators x -> U conj(x).
//
// The conjugation is part of the type so an antilinear symmetry can never be
// multiplied into a linear operator by accident. Composition of two
// antilinear maps is linear and returns a plain Matrix.
#pragma once

#include "ptsym/linalg.hpp"

namespace ptsym {

class MetricOperator;

class AntilinearOperator {
 public:
  /// Acts as x -> u * conj(x).
  explicit AntilinearOperator(Matrix u);

  /// Complex conjugation in the canonical basis (u = 1).
  static AntilinearOperator conjugation(int dim);

  const Matrix& u() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }

  Vector apply(const Vector& x) const;

  /// Matrix form of K A K^{-1} for a linear A: u conj(A) u^{-1}.
  Matrix conjugate(const Matrix& a) const;

 private:
  Matrix u_;
};

/// Linear operator A*B = U_A conj(U_B).
Matrix compose(const AntilinearOperator& a, const AntilinearOperator& b);

/// U unitary and U conj(U) = 1.
bool is_antiunitary_involution(const AntilinearOperator& k, const Tolerance& tol = {});

/// <K psi|K phi>_eta = conj(<psi|phi>_eta), tested as U^dagger eta U = eta^T.
bool is_eta_antiunitary(const AntilinearOperator& k, const MetricOperator& eta,
                        const Tolerance& tol = {});

/// Matrix form of KA = AK: U conj(A) = A U.
bool commutes(const Matrix& a, const AntilinearOperator& k, const Tolerance& tol = {});

/// Unitary V with K = V kappa V^dagger (U = V V^T). The same V satisfies
/// U = V (V^*)^{-1}, i.e. it is an S with K = S kappa S^{-1}.
/// V is fixed only up to a real orthogonal right factor: compare actions,
/// never the matrices.
Matrix real_form(const AntilinearOperator& k, const Tolerance& tol = {});

/// kappa_eta = eta^{-1/2} kappa eta^{1/2}; linear part eta^{-1/2} conj(eta^{1/2}).
AntilinearOperator eta_conjugation(const MetricOperator& eta);

/// eta^{-1/2} K eta^{1/2}: carries a standard antiunitary K to an
/// eta-antiunitary operator. Inverse of standardize().
AntilinearOperator eta_transform(const AntilinearOperator& k, const MetricOperator& eta);

/// K = eta^{1/2} K_eta eta^{-1/2}; linear part eta^{1/2} U conj(eta^{-1/2}).
/// Throws InvalidArgument unless K_eta is eta-antiunitary.
AntilinearOperator standardize(const AntilinearOperator& k_eta, const MetricOperator& eta,
                               const Tolerance& tol = {});

}  // namespace ptsym
