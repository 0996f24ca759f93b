#include "ptsym/gpt.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ptsym/random.hpp"
#include "ptsym/simplex.hpp"

namespace ptsym {

namespace {

// Violations smaller than this are treated as feasible by the oracles.
constexpr double kOracleSlack = 1e-12;
// Cuts from the oracle are also emitted with a denominator shrunk by this
// factor; any nonzero denominator gives a valid idempotent.
constexpr double kDeepCut = 1e-3;
constexpr double kBox = 100.0;

double trace_product(const Matrix& a, const Matrix& b) {
  return (a.transpose().array() * b.array()).sum().real();
}

RealMatrix unit_vector_outer(int dim, int j, int k) {
  RealMatrix m = RealMatrix::Zero(dim, dim);
  m(j, k) = 1.0;
  return m;
}

// |j><j| - 2 |j><k| / gamma.
RealMatrix offdiagonal_projector(int dim, int j, int k, double gamma) {
  RealMatrix q = unit_vector_outer(dim, j, j);
  q(j, k) -= 2.0 / gamma;
  return q;
}

// |+><+| - 3 |+><-| / gamma with |+-> = (e_j +- e_k)/sqrt 2.
RealMatrix gap_projector(int dim, int j, int k, double gamma) {
  RealVector plus = RealVector::Zero(dim);
  RealVector minus = RealVector::Zero(dim);
  plus(j) = plus(k) = 1.0 / std::sqrt(2.0);
  minus(j) = 1.0 / std::sqrt(2.0);
  minus(k) = -1.0 / std::sqrt(2.0);
  return plus * plus.transpose() - (3.0 / gamma) * plus * minus.transpose();
}

double real_trace_product(const RealMatrix& a, const RealMatrix& b) {
  return (a.transpose().array() * b.array()).sum();
}

bool outside_unit(double v, double slack) { return v < -slack || v > 1.0 + slack; }

struct FrameViolation {
  RealMatrix q;
  ViolationBranch branch;
};

// The constructive search on a real kappa-frame representative X.
std::optional<FrameViolation> search_real(const RealMatrix& x, double eps) {
  const int d = static_cast<int>(x.rows());
  int worst = -1;
  double worst_excess = eps;
  for (int j = 0; j < d; ++j) {
    const double excess = std::max(-x(j, j), x(j, j) - 1.0);
    if (excess > worst_excess) {
      worst_excess = excess;
      worst = j;
    }
  }
  if (worst >= 0) return FrameViolation{unit_vector_outer(d, worst, worst), ViolationBranch::Diagonal};

  int bj = -1, bk = -1;
  double best = eps;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (j != k && std::abs(x(k, j)) > best) {
        best = std::abs(x(k, j));
        bj = j;
        bk = k;
      }
  if (bj >= 0) return FrameViolation{offdiagonal_projector(d, bj, bk, x(bk, bj)), ViolationBranch::OffDiagonal};

  best = eps;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (j != k && x(j, j) - x(k, k) > best) {
        best = x(j, j) - x(k, k);
        bj = j;
        bk = k;
      }
  if (bj >= 0)
    return FrameViolation{gap_projector(d, bj, bk, x(bj, bj) - x(bk, bk)), ViolationBranch::DiagonalGap};

  if (std::abs(x.trace() - 1.0) > eps) return FrameViolation{RealMatrix::Identity(d, d), ViolationBranch::Trace};
  return std::nullopt;
}

Matrix sample_frame_effect(TheoryKind kind, int dim, rnd::Rng& rng) {
  switch (kind) {
    case TheoryKind::KSymmetricProjectors:
      return rnd::real_idempotent(dim, rng).cast<Complex>();
    case TheoryKind::EtaHermitian:
      return rnd::hermitian_unit_spectrum(dim, rng);
    case TheoryKind::EtaHermitianKSymmetric:
      return rnd::symmetric_unit_spectrum(dim, rng).cast<Complex>();
  }
  throw InvalidArgument("unknown theory");
}

// Orthonormal (real Frobenius inner product) basis of the frame span.
std::vector<Matrix> frame_basis(TheoryKind kind, int d) {
  std::vector<Matrix> basis;
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  auto unit = [d](int j, int k) {
    Matrix m = Matrix::Zero(d, d);
    m(j, k) = 1.0;
    return m;
  };
  switch (kind) {
    case TheoryKind::KSymmetricProjectors:
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) basis.push_back(unit(j, k));
      break;
    case TheoryKind::EtaHermitian:
      for (int j = 0; j < d; ++j) basis.push_back(unit(j, j));
      for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          basis.push_back(h * (unit(j, k) + unit(k, j)));
          basis.push_back(h * i * (unit(j, k) - unit(k, j)));
        }
      break;
    case TheoryKind::EtaHermitianKSymmetric:
      for (int j = 0; j < d; ++j) basis.push_back(unit(j, j));
      for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) basis.push_back(h * (unit(j, k) + unit(k, j)));
      break;
  }
  return basis;
}

class FrameSpace {
 public:
  FrameSpace(TheoryKind kind, int d) : kind_(kind), dim_(d), basis_(frame_basis(kind, d)) {}

  int parameters() const { return static_cast<int>(basis_.size()); }

  // Coefficients of x -> Re tr(Y(x) F).
  Eigen::VectorXd functional(const Matrix& f) const {
    Eigen::VectorXd a(parameters());
    for (int k = 0; k < parameters(); ++k) a(k) = trace_product(basis_[static_cast<std::size_t>(k)], f);
    return a;
  }

  Matrix assemble(const Eigen::VectorXd& x) const {
    Matrix y = Matrix::Zero(dim_, dim_);
    for (int k = 0; k < parameters(); ++k) y += x(k) * basis_[static_cast<std::size_t>(k)];
    return y;
  }

  Eigen::VectorXd coordinates(const Matrix& y) const {
    Eigen::VectorXd x(parameters());
    for (int k = 0; k < parameters(); ++k)
      x(k) = trace_product(basis_[static_cast<std::size_t>(k)].adjoint(), y);
    return x;
  }

  // Frame effects violated by the frame representative Y by more than the
  // oracle slack. Empty means Y is a state.
  std::vector<Matrix> cuts(const Matrix& y) const {
    std::vector<Matrix> out;
    if (kind_ == TheoryKind::KSymmetricProjectors) {
      const RealMatrix x = y.real();
      auto add = [&](const RealMatrix& q) {
        if (outside_unit(real_trace_product(x, q), kOracleSlack)) out.push_back(q.cast<Complex>());
      };
      for (int j = 0; j < dim_; ++j) add(unit_vector_outer(dim_, j, j));
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          if (j == k) continue;
          const double c1 = x(k, j);
          if (std::abs(c1) > kOracleSlack) {
            add(offdiagonal_projector(dim_, j, k, c1));
            add(offdiagonal_projector(dim_, j, k, kDeepCut * c1));
          }
          const double c2 = x(j, j) - x(k, k);
          if (j < k && std::abs(c2) > kOracleSlack) {
            add(gap_projector(dim_, j, k, c2));
            add(gap_projector(dim_, j, k, kDeepCut * c2));
          }
        }
      return out;
    }
    // Hermitian (or real symmetric) frame: a state iff the spectrum of Y
    // lies in [0,1]; each offending eigenvector is a rank-1 effect.
    const Matrix herm = 0.5 * (y + y.adjoint());
    if (kind_ == TheoryKind::EtaHermitianKSymmetric) {
      const SymmetricEigen se = eigh(RealMatrix(herm.real()));
      for (int j = 0; j < dim_; ++j)
        if (outside_unit(se.values(j), kOracleSlack))
          out.push_back((se.vectors.col(j) * se.vectors.col(j).transpose()).cast<Complex>());
    } else {
      const HermitianEigen he = eigh(herm);
      for (int j = 0; j < dim_; ++j)
        if (outside_unit(he.values(j), kOracleSlack))
          out.push_back(he.vectors.col(j) * he.vectors.col(j).adjoint());
    }
    return out;
  }

 private:
  TheoryKind kind_;
  int dim_;
  std::vector<Matrix> basis_;
};

void add_effect(lp::Polytope& poly, const FrameSpace& space, const Matrix& f) {
  poly.add_range(space.functional(f), 0.0, 1.0);
}

// Removes the components along an orthonormal set (two passes).
Eigen::VectorXd project_out(Eigen::VectorXd v, const std::vector<Eigen::VectorXd>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) v -= b.dot(v) * b;
  return v;
}

}  // namespace

double evaluate(const ProbabilityWeight& w, const Matrix& e, const Tolerance& tol) {
  require_same_dim(w.t, e, "evaluate");
  const Complex tr = (w.t.transpose().array() * e.array()).sum();
  if (std::abs(tr.imag()) > tol.threshold(w.t.norm() * e.norm()))
    throw InvalidArgument("weight/effect pairing is not real: Im tr(T E) = " + std::to_string(tr.imag()));
  return tr.real();
}

const char* to_string(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::KSymmetricProjectors:
      return "k_symmetric_projectors";
    case TheoryKind::EtaHermitian:
      return "eta_hermitian";
    case TheoryKind::EtaHermitianKSymmetric:
      return "eta_hermitian_k_symmetric";
  }
  return "unknown";
}

const char* to_string(ViolationBranch branch) {
  switch (branch) {
    case ViolationBranch::Diagonal:
      return "diagonal";
    case ViolationBranch::OffDiagonal:
      return "off_diagonal";
    case ViolationBranch::DiagonalGap:
      return "diagonal_gap";
    case ViolationBranch::Trace:
      return "trace";
  }
  return "unknown";
}

EffectTheory::EffectTheory(TheoryKind kind, Matrix frame, Matrix frame_inverse)
    : kind_(kind), frame_(std::move(frame)), frame_inverse_(std::move(frame_inverse)) {}

EffectTheory EffectTheory::k_symmetric_projectors(const AntilinearOperator& k, const Tolerance& tol) {
  Matrix v = real_form(k, tol);
  Matrix vinv = v.adjoint();
  EffectTheory theory(TheoryKind::KSymmetricProjectors, std::move(v), std::move(vinv));
  theory.symmetry_ = k;
  return theory;
}

EffectTheory EffectTheory::eta_hermitian(const MetricOperator& eta) {
  EffectTheory theory(TheoryKind::EtaHermitian, eta.inv_sqrt(), eta.sqrt());
  theory.metric_ = eta;
  return theory;
}

EffectTheory EffectTheory::eta_hermitian_k_symmetric(const MetricOperator& eta, const AntilinearOperator& k_eta,
                                                     const Tolerance& tol) {
  if (k_eta.dim() != eta.dim()) throw InvalidArgument("dimension mismatch: metric and symmetry");
  const AntilinearOperator k = standardize(k_eta, eta, tol);
  const Matrix v = real_form(k, tol);
  EffectTheory theory(TheoryKind::EtaHermitianKSymmetric, eta.inv_sqrt() * v, v.adjoint() * eta.sqrt());
  theory.symmetry_ = k_eta;
  theory.metric_ = eta;
  return theory;
}

Matrix EffectTheory::from_frame(const Matrix& f) const {
  require_same_dim(f, frame_, "frame transport");
  return frame_ * f * frame_inverse_;
}

Matrix EffectTheory::to_frame(const Matrix& e) const {
  require_same_dim(e, frame_, "frame transport");
  return frame_inverse_ * e * frame_;
}

Matrix sample_effect(const EffectTheory& theory, std::uint64_t seed) {
  rnd::Rng rng(seed);
  return theory.from_frame(sample_frame_effect(theory.kind(), theory.dim(), rng));
}

std::optional<Violation> find_violating_projector(const Matrix& t, const AntilinearOperator& k,
                                                  const Tolerance& tol) {
  require_same_dim(t, k.u(), "violating projector search");
  const Matrix v = real_form(k, tol);
  const Matrix tf = v.adjoint() * t * v;
  const RealMatrix x = tf.real();
  const auto found = search_real(x, tol.threshold(x.norm()));
  if (!found) return std::nullopt;
  Violation out;
  out.projector = v * found->q.cast<Complex>() * v.adjoint();
  out.value = trace_product(t, out.projector);
  out.branch = found->branch;
  out.imag_residual = tf.imag().norm();
  return out;
}

StateSpaceReport state_space(const EffectTheory& theory, const StateSpaceOptions& opts,
                             const std::vector<Matrix>& extra_effects, const Tolerance& tol) {
  const int d = theory.dim();
  const FrameSpace space(theory.kind(), d);
  const int p = space.parameters();

  StateSpaceReport report;
  report.theory = theory.kind();
  report.dim = d;
  report.parameters = p;
  report.representative = Matrix::Identity(d, d) / static_cast<double>(d);

  lp::Polytope poly(p);
  const Eigen::VectorXd centre = space.coordinates(report.representative);
  const Eigen::VectorXd unit = space.functional(Matrix::Identity(d, d));
  poly.add_equality(unit, 1.0);
  for (int k = 0; k < p; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(p);
    e(k) = 1.0;
    poly.add_range(e, centre(k) - kBox, centre(k) + kBox);
  }

  rnd::Rng rng(opts.seed);
  const int samples = opts.samples >= 0 ? opts.samples : 64 * d * d;
  for (int s = 0; s < samples; ++s) add_effect(poly, space, sample_frame_effect(theory.kind(), d, rng));
  report.sampled_effects = samples;

  for (const Matrix& e : extra_effects) {
    if (theory.symmetry() && theory.kind() == TheoryKind::KSymmetricProjectors &&
        !commutes(e, *theory.symmetry(), Tolerance(tol.abs_tol(), 1e-7)))
      throw InvalidArgument("adversarial effect does not commute with the symmetry");
    add_effect(poly, space, theory.to_frame(e));
  }
  report.adversarial_effects = static_cast<int>(extra_effects.size());

  report.centre_violation = poly.max_violation(centre);
  report.centre_feasible = report.centre_violation <= 1e-9 && space.cuts(space.assemble(centre)).empty();

  auto feasible = [&](const Eigen::VectorXd& x) { return space.cuts(space.assemble(x)).empty(); };

  std::vector<Eigen::VectorXd> spanned{unit.normalized()};  // normals + hull, orthonormal
  int hull = 0;
  rnd::Rng probe_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> n01;

  while (static_cast<int>(spanned.size()) < p) {
    Eigen::VectorXd u(p);
    do {
      for (int k = 0; k < p; ++k) u(k) = n01(probe_rng);
      u = project_out(u, spanned);
    } while (u.norm() < 1e-6);
    u.normalize();

    std::optional<Eigen::VectorXd> open;
    bool pinned = true;
    for (double sign : {1.0, -1.0}) {
      bool settled = false;
      for (int round = 0; round < opts.max_rounds && !settled; ++round) {
        const lp::Result r = poly.maximize(sign * u);
        ++report.lp_solves;
        if (r.status != lp::Status::Optimal) {
          report.notes.push_back(std::string("LP probe ended with status ") + lp::to_string(r.status));
          break;
        }
        const Eigen::VectorXd step = r.x - centre;
        const double reach = sign * u.dot(step);
        if (reach <= opts.width_tol) {
          settled = true;
          break;
        }
        // Largest feasible fraction of the step, by bisection on the
        // segment from the centre (the true state set is convex).
        double lo = 0.0, hi = 1.0;
        if (feasible(r.x)) {
          lo = 1.0;
        } else {
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (feasible(centre + mid * step) ? lo : hi) = mid;
          }
        }
        if (lo * reach > opts.width_tol) {
          open = lo * step;
          settled = true;
          break;
        }
        const auto cuts = space.cuts(space.assemble(r.x));
        for (const Matrix& f : cuts) add_effect(poly, space, f);
        report.cutting_planes += static_cast<int>(cuts.size());
        if (cuts.empty()) break;
      }
      if (open) break;
      if (!settled) pinned = false;
    }

    if (open) {
      Eigen::VectorXd w = project_out(*open, spanned);
      if (w.norm() <= 0.5 * opts.width_tol) w = u;  // degenerate: the probe itself is open
      spanned.push_back(w.normalized());
      ++hull;
    } else {
      if (!pinned) report.conclusive = false;
      spanned.push_back(u);
    }
  }
  if (!report.conclusive) report.notes.push_back("some probe directions were not resolved; dimension is a lower bound");
  report.affine_dimension = hull;
  report.unique = report.conclusive && report.centre_feasible && hull == 0;
  return report;
}

StateSpaceReport certify_unique_state(const AntilinearOperator& k, int trials, std::uint64_t seed,
                                      const StateSpaceOptions& opts, const Tolerance& tol) {
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  const EffectTheory theory = EffectTheory::k_symmetric_projectors(k, tol);
  const int d = theory.dim();
  const Matrix& v = theory.frame();
  const Matrix centre = Matrix::Identity(d, d) / static_cast<double>(d);

  rnd::Rng rng(seed);
  std::uniform_real_distribution<double> log_norm(std::log(1e-5), 0.0);

  std::vector<CertificatePair> pairs;
  std::vector<Matrix> adversarial;
  std::array<int, 4> counts{};
  int refuted = 0;
  for (int trial = 0; trial < trials; ++trial) {
    // Cycle through shapes so every branch of the search is exercised:
    // traceless (unit-normalised) perturbations, diagonal ones, and an
    // over-normalised multiple of the identity.
    RealMatrix r = rnd::real_gaussian(d, rng);
    if (trial % 4 == 1) r = RealMatrix(r.diagonal().asDiagonal());
    if (trial % 4 == 2) {
      r = RealMatrix::Identity(d, d);
    } else {
      r.diagonal().array() -= r.trace() / d;
    }
    r *= std::exp(log_norm(rng)) / r.norm();
    const Matrix t = v * (centre + r.cast<Complex>()) * v.adjoint();
    const auto violation = find_violating_projector(t, k, tol);
    if (!violation) continue;
    const Matrix& pm = violation->projector;
    const double scale = std::max(1.0, pm.squaredNorm());
    const bool idempotent = (pm * pm - pm).norm() <= 1e-9 * scale;
    const bool symmetric = commutes(pm, k, Tolerance(tol.abs_tol(), 1e-7));
    // The unit effect refutes through normalisation, every other effect
    // through a value outside [0,1].
    const bool outside = violation->branch == ViolationBranch::Trace
                             ? std::abs(violation->value - 1.0) > 1e-8
                             : violation->value < -1e-8 || violation->value > 1.0 + 1e-8;
    if (!(idempotent && symmetric && outside)) continue;
    ++refuted;
    ++counts[static_cast<std::size_t>(violation->branch)];
    adversarial.push_back(pm);
    pairs.push_back({t, *violation});
  }

  StateSpaceReport report = state_space(theory, opts, adversarial, tol);
  report.trials = trials;
  report.refuted = refuted;
  report.branch_counts = counts;
  report.certificate = std::move(pairs);
  report.certified_by_construction = trials > 0 && refuted == trials;
  report.unique = report.unique && refuted == trials;
  report.confidence = (trials > 0 ? static_cast<double>(refuted) / trials : 0.0) * (report.conclusive ? 1.0 : 0.5);
  for (std::size_t b = 0; b < counts.size(); ++b)
    if (trials >= 4 && counts[b] == 0)
      report.notes.push_back(std::string("branch not exercised: ") +
                             to_string(static_cast<ViolationBranch>(b)));
  return report;
}

bool is_density_matrix(const Matrix& rho, const Tolerance& tol) {
  if (!is_hermitian(rho, tol)) return false;
  const HermitianEigen he = eigh(Matrix(0.5 * (rho + rho.adjoint())));
  return he.values(0) >= -tol.threshold(rho.norm()) &&
         std::abs(rho.trace() - Complex(1.0)) <= tol.threshold(1.0);
}

bool is_eta_density_matrix(const Matrix& rho, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(rho, eta.eta(), "eta-density test");
  if (!is_eta_hermitian(rho, eta, tol)) return false;
  return is_eta_psd(rho, eta, tol) && std::abs(rho.trace() - Complex(1.0)) <= tol.threshold(1.0);
}

Matrix map_effect_to_hermitian(const Matrix& e, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(e, eta.eta(), "effect map");
  if (!is_eta_hermitian(e, eta, tol)) throw InvalidArgument("effect is not eta-Hermitian");
  if (!is_eta_effect(e, eta, tol)) throw InvalidArgument("effect is not between 0 and 1 in the eta order");
  return eta.sqrt() * e * eta.inv_sqrt();
}

Matrix map_effect_from_hermitian(const Matrix& f, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(f, eta.eta(), "effect map");
  if (!is_hermitian(f, tol)) throw InvalidArgument("effect is not Hermitian");
  const HermitianEigen he = eigh(Matrix(0.5 * (f + f.adjoint())));
  const double slack = tol.threshold(f.norm());
  if (he.values(0) < -slack || he.values(he.values.size() - 1) > 1.0 + slack)
    throw InvalidArgument("effect spectrum is not inside [0,1]");
  return eta.inv_sqrt() * f * eta.sqrt();
}

Matrix map_state_from_hermitian(const Matrix& sigma, const MetricOperator& eta, const Tolerance& tol) {
  require_same_dim(sigma, eta.eta(), "state map");
  if (!is_density_matrix(sigma, tol)) throw InvalidArgument("sigma is not a density matrix");
  return eta.inv_sqrt() * sigma * eta.sqrt();
}

RealFormResult map_to_real_form(const Matrix& e, const AntilinearOperator& k,
                                const std::optional<MetricOperator>& eta, const Tolerance& tol) {
  require_same_dim(e, k.u(), "real-form map");
  Matrix hermitian_frame;
  Matrix v;
  if (eta) {
    require_same_dim(e, eta->eta(), "real-form map");
    if (!is_eta_hermitian(e, *eta, tol)) throw InvalidArgument("effect is not eta-Hermitian");
    if (!commutes(e, k, tol)) throw InvalidArgument("effect does not commute with the symmetry");
    v = real_form(standardize(k, *eta, tol), tol);
    hermitian_frame = eta->sqrt() * e * eta->inv_sqrt();
  } else {
    if (!is_hermitian(e, tol)) throw InvalidArgument("effect is not Hermitian");
    if (!commutes(e, k, tol)) throw InvalidArgument("effect does not commute with the symmetry");
    v = real_form(k, tol);
    hermitian_frame = e;
  }
  const Matrix r = v.adjoint() * hermitian_frame * v;
  RealFormResult out{r.real(), r.imag().norm()};
  if (out.imag_residual > tol.threshold(e.norm()))
    throw InvalidArgument("symmetry violation: imaginary residual " + std::to_string(out.imag_residual));
  return out;
}

Matrix map_state_from_real_form(const RealMatrix& sigma, const AntilinearOperator& k,
                                const std::optional<MetricOperator>& eta, const Tolerance& tol) {
  const Matrix s = sigma.cast<Complex>();
  require_same_dim(s, k.u(), "real-form state map");
  if (!is_density_matrix(s, tol)) throw InvalidArgument("sigma is not a real density matrix");
  if (eta) {
    const Matrix v = real_form(standardize(k, *eta, tol), tol);
    return eta->inv_sqrt() * v * s * v.adjoint() * eta->sqrt();
  }
  const Matrix v = real_form(k, tol);
  return v * s * v.adjoint();
}

}  // namespace ptsym
