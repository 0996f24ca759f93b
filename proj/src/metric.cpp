#include "ptsym/metric.hpp"

#include <cmath>

#include "ptsym/pt_classify.hpp"

namespace ptsym {

MetricOperator::MetricOperator(const Matrix& eta, const Tolerance& tol) {
  require_operator(eta, "metric");
  PdRoots roots = pd_roots(eta, tol);
  eta_ = 0.5 * (eta + eta.adjoint());
  sqrt_ = std::move(roots.sqrt);
  inv_sqrt_ = std::move(roots.inv_sqrt);
  inverse_ = inv_sqrt_ * inv_sqrt_;
}

MetricOperator MetricOperator::identity(int dim) { return MetricOperator(Matrix::Identity(dim, dim)); }

Complex eta_inner(const MetricOperator& eta, const Vector& phi, const Vector& psi) {
  if (phi.size() != eta.dim() || psi.size() != eta.dim())
    throw InvalidArgument("dimension mismatch: eta inner product");
  return phi.dot(eta.eta() * psi);
}

bool is_eta_hermitian(const Matrix& m, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(m, eta.eta(), "eta-Hermiticity test");
  return (eta.eta() * m * eta.inverse() - m.adjoint()).norm() <= tol.threshold(m.norm());
}

bool is_eta_unitary(const Matrix& m, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(m, eta.eta(), "eta-unitarity test");
  return (m.adjoint() * eta.eta() * m - eta.eta()).norm() <= tol.threshold(eta.eta().norm());
}

bool is_eta_psd(const Matrix& e, const MetricOperator& eta, const Tolerance& tol) {
  if (!is_eta_hermitian(e, eta, tol)) throw InvalidArgument("operator is not eta-Hermitian");
  const Matrix m = eta.eta() * e;
  const HermitianEigen he = eigh(Matrix(0.5 * (m + m.adjoint())));
  return he.values(0) >= -tol.threshold(m.norm());
}

bool is_eta_effect(const Matrix& e, const MetricOperator& eta, const Tolerance& tol) {
  const Matrix id = Matrix::Identity(e.rows(), e.cols());
  return is_eta_psd(e, eta, tol) && is_eta_psd(id - e, eta, tol);
}

MetricFromHamiltonian metric_from_unbroken(const Matrix& h, const AntilinearOperator& k,
                                           const Tolerance& tol) {
  const PTPhase phase = classify(h, k, tol);
  if (phase.tag != Phase::Unbroken)
    throw InvalidArgument(std::string("metric construction needs an unbroken Hamiltonian, phase is ") +
                          to_string(phase.tag));
  const EigenDecomposition ed = eig(h, tol);
  const Matrix& right = ed.right_vectors;
  const Matrix left = inverse(right).adjoint();
  Matrix eta = left * left.adjoint();
  eta = 0.5 * (eta + eta.adjoint());

  MetricFromHamiltonian out{MetricOperator(eta, tol), condition_number(right), 0.0, std::nullopt};
  out.residual = (out.metric.eta() * h * out.metric.inverse() - h.adjoint()).norm();
  constexpr double kConditionLimit = 1e8;
  if (out.eigenbasis_condition > kConditionLimit)
    out.warning = "eigenbasis is ill-conditioned (condition number " +
                  std::to_string(out.eigenbasis_condition) + ")";
  return out;
}

TwoByTwoFamily::TwoByTwoFamily(double r, double s, double theta) : r_(r), s_(s), theta_(theta) {
  if (!std::isfinite(r) || !std::isfinite(s) || !std::isfinite(theta))
    throw InvalidArgument("family parameters must be finite");
}

double TwoByTwoFamily::discriminant() const {
  const double rs = r_ * std::sin(theta_);
  return s_ * s_ - rs * rs;
}

std::optional<double> TwoByTwoFamily::alpha() const {
  if (s_ == 0.0 || !(discriminant() > 0.0)) return std::nullopt;
  const double x = (r_ / s_) * std::sin(theta_);
  if (!(std::abs(x) < 1.0)) return std::nullopt;
  return std::asin(x);
}

double TwoByTwoFamily::require_alpha() const {
  const auto a = alpha();
  if (!a) throw InvalidArgument("alpha is undefined: s^2 <= r^2 sin^2 theta (not unbroken)");
  return *a;
}

Matrix TwoByTwoFamily::hamiltonian() const {
  Matrix h(2, 2);
  h << std::polar(r_, theta_), s_, s_, std::polar(r_, -theta_);
  return h;
}

Matrix TwoByTwoFamily::parity() {
  Matrix p(2, 2);
  p << 0.0, 1.0, 1.0, 0.0;
  return p;
}

AntilinearOperator TwoByTwoFamily::pt() { return AntilinearOperator(parity()); }

Complex TwoByTwoFamily::eigenvalue_plus() const {
  return r_ * std::cos(theta_) + std::sqrt(Complex(discriminant()));
}

Complex TwoByTwoFamily::eigenvalue_minus() const {
  return r_ * std::cos(theta_) - std::sqrt(Complex(discriminant()));
}

Vector TwoByTwoFamily::eigenvector_plus() const {
  const double a = require_alpha();
  Vector v(2);
  v << std::polar(1.0, a / 2), std::polar(1.0, -a / 2);
  return v / std::sqrt(2.0 * std::cos(a));
}

Vector TwoByTwoFamily::eigenvector_minus() const {
  const double a = require_alpha();
  Vector v(2);
  v << std::polar(1.0, -a / 2), -std::polar(1.0, a / 2);
  return Complex(0.0, 1.0) * v / std::sqrt(2.0 * std::cos(a));
}

Matrix charge_operator(const TwoByTwoFamily& fam) {
  const auto a = fam.alpha();
  if (!a) throw InvalidArgument("charge operator undefined: s^2 <= r^2 sin^2 theta");
  const Complex is(0.0, std::sin(*a));
  Matrix c(2, 2);
  c << is, 1.0, 1.0, -is;
  return c / std::cos(*a);
}

Matrix cpt_metric(const TwoByTwoFamily& fam) { return TwoByTwoFamily::parity() * charge_operator(fam); }

Complex cpt_inner(const TwoByTwoFamily& fam, const Vector& psi, const Vector& phi) {
  if (psi.size() != 2 || phi.size() != 2) throw InvalidArgument("dimension mismatch: CPT inner product");
  const Vector cpt_psi = charge_operator(fam) * TwoByTwoFamily::pt().apply(psi);
  return (cpt_psi.array() * phi.array()).sum();
}

}  // namespace ptsym
