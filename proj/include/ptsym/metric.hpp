// Metric operators and the eta-inner-product geometry.
#pragma once

#include <optional>
#include <string>

#include "ptsym/antilinear.hpp"
#include "ptsym/linalg.hpp"

namespace ptsym {

/// Hermitian positive-definite eta with eagerly cached eta^{1/2}, eta^{-1/2}
/// and eta^{-1}.
class MetricOperator {
 public:
  explicit MetricOperator(const Matrix& eta, const Tolerance& tol = {});

  static MetricOperator identity(int dim);

  const Matrix& eta() const { return eta_; }
  const Matrix& sqrt() const { return sqrt_; }
  const Matrix& inv_sqrt() const { return inv_sqrt_; }
  const Matrix& inverse() const { return inverse_; }
  int dim() const { return static_cast<int>(eta_.rows()); }

 private:
  Matrix eta_;
  Matrix sqrt_;
  Matrix inv_sqrt_;
  Matrix inverse_;
};

/// <phi|eta|psi>.
Complex eta_inner(const MetricOperator& eta, const Vector& phi, const Vector& psi);

/// |eta M eta^{-1} - M^dagger|_F <= tol.threshold(|M|_F).
bool is_eta_hermitian(const Matrix& m, const MetricOperator& eta, const Tolerance& tol = {});

/// |M^dagger eta M - eta|_F <= tol.threshold(|eta|_F).
bool is_eta_unitary(const Matrix& m, const MetricOperator& eta, const Tolerance& tol = {});

/// eta E is positive semidefinite. Throws InvalidArgument unless E is
/// eta-Hermitian.
bool is_eta_psd(const Matrix& e, const MetricOperator& eta, const Tolerance& tol = {});

/// 0 <=_eta E <=_eta 1.
bool is_eta_effect(const Matrix& e, const MetricOperator& eta, const Tolerance& tol = {});

struct MetricFromHamiltonian {
  MetricOperator metric;
  double eigenbasis_condition = 1.0;
  double residual = 0.0;  // |eta H eta^{-1} - H^dagger|_F
  std::optional<std::string> warning;
};

/// eta = sum_j |chi_j><chi_j| from the biorthogonal left eigenvectors of an
/// unbroken H (right eigenvectors normalised to unit length, orthonormal
/// inside degenerate eigenspaces). Hermitian H gives eta = 1.
/// Throws InvalidArgument unless classify(H, K) is Unbroken.
MetricFromHamiltonian metric_from_unbroken(const Matrix& h, const AntilinearOperator& k,
                                           const Tolerance& tol = {});

/// The two-level family H = [[r e^{i theta}, s], [s, r e^{-i theta}]],
/// symmetric under P T with P = sigma_x and T = kappa.
class TwoByTwoFamily {
 public:
  TwoByTwoFamily(double r, double s, double theta);

  double r() const { return r_; }
  double s() const { return s_; }
  double theta() const { return theta_; }

  /// s^2 - r^2 sin^2 theta: positive unbroken, zero exceptional, negative broken.
  double discriminant() const;

  /// alpha in (-pi/2, pi/2) with sin alpha = (r/s) sin theta, when
  /// s^2 > r^2 sin^2 theta.
  std::optional<double> alpha() const;

  Matrix hamiltonian() const;
  static Matrix parity();
  static AntilinearOperator pt();

  /// r cos theta +- sqrt(s^2 - r^2 sin^2 theta) (complex in the broken phase).
  Complex eigenvalue_plus() const;
  Complex eigenvalue_minus() const;

  /// Closed-form |lambda_+>, |lambda_->; requires alpha().
  Vector eigenvector_plus() const;
  Vector eigenvector_minus() const;

 private:
  double require_alpha() const;

  double r_;
  double s_;
  double theta_;
};

/// C = (1/cos alpha) [[i sin alpha, 1], [1, -i sin alpha]].
/// Throws InvalidArgument outside the unbroken regime.
Matrix charge_operator(const TwoByTwoFamily& fam);

/// eta = P C.
Matrix cpt_metric(const TwoByTwoFamily& fam);

/// (C P T psi) . phi with the bilinear dot product.
Complex cpt_inner(const TwoByTwoFamily& fam, const Vector& psi, const Vector& phi);

}  // namespace ptsym
