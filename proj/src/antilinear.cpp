#include "ptsym/antilinear.hpp"

#include <cmath>

#include "ptsym/metric.hpp"

namespace ptsym {

AntilinearOperator::AntilinearOperator(Matrix u) : u_(std::move(u)) {
  require_operator(u_, "antilinear operator");
}

AntilinearOperator AntilinearOperator::conjugation(int dim) {
  return AntilinearOperator(Matrix::Identity(dim, dim));
}

Vector AntilinearOperator::apply(const Vector& x) const {
  if (x.size() != u_.rows()) throw InvalidArgument("dimension mismatch: antilinear apply");
  return u_ * x.conjugate();
}

Matrix AntilinearOperator::conjugate(const Matrix& a) const {
  require_same_dim(a, u_, "antilinear conjugate");
  return u_ * a.conjugate() * inverse(u_);
}

Matrix compose(const AntilinearOperator& a, const AntilinearOperator& b) {
  require_same_dim(a.u(), b.u(), "compose");
  return a.u() * b.u().conjugate();
}

bool is_antiunitary_involution(const AntilinearOperator& k, const Tolerance& tol) {
  const Matrix& u = k.u();
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  const double scale = std::sqrt(static_cast<double>(u.rows()));
  return is_unitary(u, tol) && (u * u.conjugate() - id).norm() <= tol.threshold(scale);
}

bool is_eta_antiunitary(const AntilinearOperator& k, const MetricOperator& eta,
                        const Tolerance& tol) {
  require_same_dim(k.u(), eta.eta(), "eta-antiunitarity test");
  const Matrix& u = k.u();
  const Matrix residual = u.adjoint() * eta.eta() * u - eta.eta().transpose();
  return residual.norm() <= tol.threshold(eta.eta().norm());
}

bool commutes(const Matrix& a, const AntilinearOperator& k, const Tolerance& tol) {
  require_same_dim(a, k.u(), "commutation test");
  const Matrix lhs = k.u() * a.conjugate();
  const Matrix rhs = a * k.u();
  return (lhs - rhs).norm() <= tol.threshold(0.5 * (lhs.norm() + rhs.norm()));
}

Matrix real_form(const AntilinearOperator& k, const Tolerance& tol) {
  if (!is_antiunitary_involution(k, tol))
    throw InvalidArgument("real_form: operator is not an antiunitary involution");
  return takagi(k.u(), tol);
}

AntilinearOperator eta_conjugation(const MetricOperator& eta) {
  return AntilinearOperator(eta.inv_sqrt() * eta.sqrt().conjugate());
}

AntilinearOperator eta_transform(const AntilinearOperator& k, const MetricOperator& eta) {
  require_same_dim(k.u(), eta.eta(), "eta transform");
  return AntilinearOperator(eta.inv_sqrt() * k.u() * eta.sqrt().conjugate());
}

AntilinearOperator standardize(const AntilinearOperator& k_eta, const MetricOperator& eta,
                               const Tolerance& tol) {
  if (!is_eta_antiunitary(k_eta, eta, tol))
    throw InvalidArgument("standardize: operator is not eta-antiunitary");
  return AntilinearOperator(eta.sqrt() * k_eta.u() * eta.inv_sqrt().conjugate());
}

}  // namespace ptsym
