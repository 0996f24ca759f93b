#include "ptsym/pt_classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptsym {

namespace {

void require_symmetry(const Matrix& o, const AntilinearOperator& k, const Tolerance& tol) {
  require_operator(o, "operator");
  require_same_dim(o, k.u(), "operator and symmetry");
  if (!is_antiunitary_involution(k, tol))
    throw InvalidArgument("symmetry is not an antiunitary involution");
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Fixes the phase of a unit vector v with K v = e^{it} v.
Vector fix_phase(const Vector& v, const AntilinearOperator& k) {
  const Vector kv = k.apply(v);
  Eigen::Index p = 0;
  v.cwiseAbs().maxCoeff(&p);
  Complex ratio = kv(p) / v(p);
  ratio /= std::abs(ratio);
  return std::sqrt(ratio) * v;
}

// Real-coefficient Gram-Schmidt of K-fixed candidates. Inner products of
// K-fixed vectors are real when K is antiunitary, so the output stays fixed.
std::vector<Vector> invariant_span(const Matrix& eigenspace, const AntilinearOperator& k,
                                   int wanted) {
  std::vector<Vector> candidates;
  for (Eigen::Index c = 0; c < eigenspace.cols(); ++c) {
    const Vector v = eigenspace.col(c);
    const Vector kv = k.apply(v);
    candidates.push_back(v + kv);
    candidates.push_back(Complex(0.0, 1.0) * (v - kv));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Vector& a, const Vector& b) { return a.norm() > b.norm(); });
  std::vector<Vector> basis;
  for (Vector c : candidates) {
    if (static_cast<int>(basis.size()) == wanted) break;
    const double start = c.norm();
    if (start < 1e-12) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& q : basis) c -= q.dot(c).real() * q;
    if (c.norm() > 1e-4 * start) basis.push_back(c.normalized());
  }
  return basis;
}

}  // namespace

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::NotSymmetric:
      return "not_symmetric";
    case Phase::Unbroken:
      return "unbroken";
    case Phase::Broken:
      return "broken";
    case Phase::ExceptionalPoint:
      return "exceptional_point";
  }
  return "unknown";
}

PTPhase classify(const Matrix& o, const AntilinearOperator& k, const Tolerance& tol) {
  require_symmetry(o, k, tol);
  PTPhase out;
  out.commutator_residual = (k.u() * o.conjugate() - o * k.u()).norm();
  if (!commutes(o, k, tol)) {
    out.tag = Phase::NotSymmetric;
    out.summary = "operator does not commute with the symmetry (residual " +
                  describe(out.commutator_residual) + ")";
    return out;
  }

  const EigenDecomposition ed = eig(o, tol);
  const double real_cut = tol.threshold(o.norm());
  bool defective = false;
  bool complex_pair = false;
  for (const auto& c : ed.clusters) {
    ClusterReport rep;
    rep.value = c.value;
    rep.algebraic = c.algebraic;
    rep.geometric = c.geometric;
    rep.real = std::abs(c.value.imag()) <= real_cut;
    if (c.defective()) {
      defective = true;
      rep.note = "defective: geometric multiplicity " + std::to_string(c.geometric) +
                 " < algebraic multiplicity " + std::to_string(c.algebraic);
    } else if (!rep.real) {
      complex_pair = true;
      rep.note = "non-real eigenvalue";
    }
    out.clusters.push_back(rep);
  }

  if (defective) {
    out.tag = Phase::ExceptionalPoint;
    out.summary = "not diagonalizable: eigenvalues and eigenvectors coalesce";
    return out;
  }
  if (complex_pair) {
    out.tag = Phase::Broken;
    out.summary = "diagonalizable with non-real eigenvalues";
    return out;
  }
  const KInvariantBasis kb = k_invariant_basis(o, k, tol);
  if (kb.failure) {
    out.tag = Phase::Broken;
    out.summary = *kb.failure;
    return out;
  }
  out.tag = Phase::Unbroken;
  out.summary = "diagonalizable, real spectrum, symmetry-invariant eigenbasis";
  return out;
}

KInvariantBasis k_invariant_basis(const Matrix& o, const AntilinearOperator& k,
                                  const Tolerance& tol) {
  require_symmetry(o, k, tol);
  if (!commutes(o, k, tol)) throw InvalidArgument("operator does not commute with the symmetry");
  const EigenDecomposition ed = eig(o, tol);
  if (!ed.diagonalizable) throw InvalidArgument("operator is not diagonalizable");
  const double real_cut = tol.threshold(o.norm());
  for (const auto& c : ed.clusters)
    if (std::abs(c.value.imag()) > real_cut)
      throw InvalidArgument("operator has non-real eigenvalue " + describe(c.value));

  const int n = static_cast<int>(o.rows());
  KInvariantBasis out;
  Matrix basis(n, n);
  int col = 0;
  for (const auto& c : ed.clusters) {
    const double value = c.value.real();
    if (c.algebraic == 1) {
      basis.col(col++) = fix_phase(ed.right_vectors.col(c.members.front()), k);
      out.eigenvalues.emplace_back(value);
      continue;
    }
    Matrix space(n, c.algebraic);
    for (int i = 0; i < c.algebraic; ++i) space.col(i) = ed.right_vectors.col(c.members[i]);
    const auto span = invariant_span(space, k, c.algebraic);
    if (static_cast<int>(span.size()) < c.algebraic) {
      out.failure = "eigenspace of " + describe(c.value) + " (dimension " +
                    std::to_string(c.algebraic) + ") has only " + std::to_string(span.size()) +
                    " symmetry-invariant directions";
      return out;
    }
    for (const Vector& v : span) {
      basis.col(col++) = v;
      out.eigenvalues.emplace_back(value);
    }
  }
  out.basis = std::move(basis);
  return out;
}

SpectralDecomposition spectral_projectors(const Matrix& o, const AntilinearOperator& k,
                                          const Tolerance& tol) {
  const PTPhase phase = classify(o, k, tol);
  if (phase.tag != Phase::Unbroken)
    throw InvalidArgument(std::string("spectral projectors need an unbroken operator, phase is ") +
                          to_string(phase.tag));
  SpectralDecomposition out;
  for (const auto& c : phase.clusters) out.eigenvalues.push_back(c.value.real());

  const int n = static_cast<int>(o.rows());
  const Matrix id = Matrix::Identity(n, n);
  const std::size_t count = out.eigenvalues.size();
  constexpr double kMaxAmplification = 1e10;
  for (std::size_t j = 0; j < count; ++j) {
    Matrix p = id;
    double amplification = 1.0;
    for (std::size_t m = 0; m < count; ++m) {
      if (m == j) continue;
      const double gap = out.eigenvalues[j] - out.eigenvalues[m];
      const Matrix factor = o - out.eigenvalues[m] * id;
      amplification *= factor.norm() / std::abs(gap);
      p = p * factor / gap;
    }
    if (!(amplification <= kMaxAmplification))
      throw NumericalError("eigenvalues too close for projector interpolation (amplification " +
                           std::to_string(amplification) + ")");
    out.projectors.push_back(std::move(p));
  }
  return out;
}

double SpectralResiduals::max() const {
  return std::max({reconstruction, idempotence, annihilation, completeness, k_commutation});
}

SpectralResiduals spectral_residuals(const SpectralDecomposition& sd, const Matrix& o,
                                     const AntilinearOperator& k) {
  const auto n = o.rows();
  SpectralResiduals r;
  Matrix sum_weighted = Matrix::Zero(n, n);
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < sd.projectors.size(); ++j) {
    const Matrix& p = sd.projectors[j];
    sum_weighted += sd.eigenvalues[j] * p;
    sum += p;
    r.idempotence = std::max(r.idempotence, (p * p - p).norm());
    r.k_commutation = std::max(r.k_commutation, (k.u() * p.conjugate() - p * k.u()).norm());
    for (std::size_t m = 0; m < sd.projectors.size(); ++m)
      if (m != j) r.annihilation = std::max(r.annihilation, (p * sd.projectors[m]).norm());
  }
  r.reconstruction = (sum_weighted - o).norm() / std::max(1.0, o.norm());
  r.completeness = (sum - Matrix::Identity(n, n)).norm();
  return r;
}

}  // namespace ptsym
