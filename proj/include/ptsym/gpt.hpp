// Operational layer: probability weights on effect sets, effect-set
// generators for the three theories, the constructive uniqueness certifier
// and the equivalence maps between theories.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptsym/antilinear.hpp"
#include "ptsym/linalg.hpp"
#include "ptsym/metric.hpp"

namespace ptsym {

/// A state as a trace functional E -> tr(T E).
struct ProbabilityWeight {
  Matrix t;
};

/// Re tr(T E). Throws InvalidArgument on a dimension mismatch or when
/// |Im tr(T E)| exceeds tol.threshold(|T|_F |E|_F).
double evaluate(const ProbabilityWeight& w, const Matrix& e, const Tolerance& tol = {});

enum class TheoryKind { KSymmetricProjectors, EtaHermitian, EtaHermitianKSymmetric };

const char* to_string(TheoryKind kind);

/// One of the three effect theories. Every theory is described by a frame
/// matrix A such that effects are A F A^{-1} with F in a fixed "frame" set:
///   K-symmetric projectors:       A = V (K = V kappa V^dagger), F real idempotent
///   eta-Hermitian:                A = eta^{-1/2},                F Hermitian, spectrum in [0,1]
///   eta-Hermitian, K_eta-symmetric: A = eta^{-1/2} V,            F real symmetric, spectrum in [0,1]
/// where in the last case V is the real form of eta^{1/2} K_eta eta^{-1/2}.
class EffectTheory {
 public:
  /// Throws InvalidArgument unless K is an antiunitary involution.
  static EffectTheory k_symmetric_projectors(const AntilinearOperator& k, const Tolerance& tol = {});
  static EffectTheory eta_hermitian(const MetricOperator& eta);
  /// Throws InvalidArgument unless K_eta is an eta-antiunitary involution.
  static EffectTheory eta_hermitian_k_symmetric(const MetricOperator& eta,
                                                const AntilinearOperator& k_eta,
                                                const Tolerance& tol = {});

  TheoryKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(frame_.rows()); }

  /// K (first variant) or K_eta (third variant).
  const std::optional<AntilinearOperator>& symmetry() const { return symmetry_; }
  const std::optional<MetricOperator>& metric() const { return metric_; }

  const Matrix& frame() const { return frame_; }
  const Matrix& frame_inverse() const { return frame_inverse_; }

  /// A F A^{-1} and back.
  Matrix from_frame(const Matrix& f) const;
  Matrix to_frame(const Matrix& e) const;

 private:
  EffectTheory(TheoryKind kind, Matrix frame, Matrix frame_inverse);

  TheoryKind kind_;
  Matrix frame_;
  Matrix frame_inverse_;
  std::optional<AntilinearOperator> symmetry_;
  std::optional<MetricOperator> metric_;
};

/// A random valid effect of the theory, deterministic in the seed.
Matrix sample_effect(const EffectTheory& theory, std::uint64_t seed);

enum class ViolationBranch { Diagonal, OffDiagonal, DiagonalGap, Trace };

const char* to_string(ViolationBranch branch);

struct Violation {
  Matrix projector;  // K-symmetric idempotent, original frame
  double value = 0.0;  // evaluate(T, projector)
  ViolationBranch branch = ViolationBranch::Trace;
  double imag_residual = 0.0;  // |Im V^dagger T V|_F, ignored by the search
};

/// Follows the constructive argument that only 1/d is a state on
/// K-symmetric projectors. In the kappa-frame T' = Re V^dagger T V:
///   a diagonal entry outside [0,1]   -> the canonical rank-1 projector;
///   an off-diagonal c1 = T'_{kj}      -> |j><j| - 2 |j><k| / c1;
///   a diagonal gap c2 = T'_jj - T'_kk -> |+><+| - 3 |+><-| / c2;
///   tr T' != 1                        -> the unit effect.
/// Among several candidates the largest |c1| (|c2|, violation) is used.
/// Returns none when T represents 1/d within tolerance.
/// Throws InvalidArgument unless K is an antiunitary involution.
std::optional<Violation> find_violating_projector(const Matrix& t, const AntilinearOperator& k,
                                                  const Tolerance& tol = {});

struct CertificatePair {
  Matrix candidate;
  Violation violation;
};

struct StateSpaceReport {
  TheoryKind theory = TheoryKind::KSymmetricProjectors;
  int dim = 0;
  int parameters = 0;  // real dimension of the trace-functional span
  int affine_dimension = 0;
  bool unique = false;
  bool conclusive = true;  // false if an LP or cutting-plane budget ran out
  bool centre_feasible = false;
  double centre_violation = 0.0;  // worst sampled-constraint violation at 1/d
  Matrix representative;
  std::vector<CertificatePair> certificate;

  // Constraint bookkeeping.
  int sampled_effects = 0;
  int adversarial_effects = 0;
  int cutting_planes = 0;
  int lp_solves = 0;

  // Uniqueness certification only.
  int trials = 0;
  int refuted = 0;
  std::array<int, 4> branch_counts{};  // indexed by ViolationBranch
  bool certified_by_construction = false;
  double confidence = 0.0;
  std::vector<std::string> notes;
};

struct StateSpaceOptions {
  int samples = -1;  // -1: 64 d^2
  std::uint64_t seed = 0;
  double width_tol = 1e-6;  // displacements below this count as zero width
  int max_rounds = 60;  // cutting-plane rounds per probe
};

/// Parametrizes T = A Y A^{-1} over the real span of frame matrices Y (real,
/// Hermitian or real symmetric), imposes tr T = 1 and 0 <= tr(T E) <= 1 for
/// sampled effects, and measures the affine dimension of the state set with
/// LP probes. Probe optima are validated against an exact separation oracle
/// for the theory; infeasible optima add cuts from the oracle.
StateSpaceReport state_space(const EffectTheory& theory, const StateSpaceOptions& opts = {},
                             const std::vector<Matrix>& extra_effects = {},
                             const Tolerance& tol = {});

/// Random candidates T = V (1/d + R) V^dagger with R real, |R|_F log-uniform
/// in [1e-5, 1]. R is traceless (general or diagonal) except for every fourth
/// trial, a positive multiple of the identity. Each candidate must be refuted
/// by find_violating_projector; a state_space run that includes every
/// refuting projector then has to collapse to the single point 1/d.
StateSpaceReport certify_unique_state(const AntilinearOperator& k, int trials, std::uint64_t seed,
                                      const StateSpaceOptions& opts = {},
                                      const Tolerance& tol = {});

/// eta^{1/2} E eta^{-1/2}. Throws InvalidArgument unless E is an eta-effect.
Matrix map_effect_to_hermitian(const Matrix& e, const MetricOperator& eta, const Tolerance& tol = {});

/// eta^{-1/2} F eta^{1/2}. Throws InvalidArgument unless F is Hermitian with
/// spectrum in [0,1].
Matrix map_effect_from_hermitian(const Matrix& f, const MetricOperator& eta, const Tolerance& tol = {});

/// eta^{-1/2} sigma eta^{1/2}. Throws InvalidArgument unless sigma is a
/// density matrix.
Matrix map_state_from_hermitian(const Matrix& sigma, const MetricOperator& eta, const Tolerance& tol = {});

struct RealFormResult {
  RealMatrix real;
  double imag_residual = 0.0;
};

/// V^dagger E V (Hermitian K-symmetric E), or V^dagger eta^{1/2} E eta^{-1/2} V
/// (eta-Hermitian K_eta-symmetric E, with K read as K_eta). Throws
/// InvalidArgument on a failed precondition or an imaginary residual above
/// tolerance.
RealFormResult map_to_real_form(const Matrix& e, const AntilinearOperator& k,
                                const std::optional<MetricOperator>& eta, const Tolerance& tol = {});

/// V sigma V^dagger, or eta^{-1/2} V sigma V^dagger eta^{1/2}, for a real
/// density matrix sigma. Throws InvalidArgument unless sigma is one.
Matrix map_state_from_real_form(const RealMatrix& sigma, const AntilinearOperator& k,
                                const std::optional<MetricOperator>& eta, const Tolerance& tol = {});

/// Hermitian, PSD and unit trace.
bool is_density_matrix(const Matrix& rho, const Tolerance& tol = {});

/// eta-Hermitian, eta-PSD and unit trace.
bool is_eta_density_matrix(const Matrix& rho, const MetricOperator& eta, const Tolerance& tol = {});

}  // namespace ptsym
