// PT-phase classification and K-symmetric spectral projectors.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptsym/antilinear.hpp"
#include "ptsym/linalg.hpp"

namespace ptsym {

enum class Phase { NotSymmetric, Unbroken, Broken, ExceptionalPoint };

const char* to_string(Phase phase);

/// Diagnostic for one eigenvalue cluster.
struct ClusterReport {
  Complex value;
  int algebraic = 0;
  int geometric = 0;
  bool real = true;
  std::string note;  // empty when the cluster passed every test
};

struct PTPhase {
  Phase tag = Phase::NotSymmetric;
  double commutator_residual = 0.0;  // |U conj(O) - O U|_F
  std::vector<ClusterReport> clusters;
  std::string summary;
};

PTPhase classify(const Matrix& o, const AntilinearOperator& k, const Tolerance& tol = {});

struct KInvariantBasis {
  std::optional<Matrix> basis;  // columns: unit eigenvectors with K v = v
  std::vector<Complex> eigenvalues;  // per column
  // Set when an eigenspace has no K-invariant basis.
  std::optional<std::string> failure;
};

/// Eigenvectors of O each fixed by K. Nondegenerate eigenvectors are
/// phase-fixed (K v = e^{i t} v  ->  e^{i t/2} v); degenerate eigenspaces are
/// spanned by v + K v and i(v - K v) and orthonormalised with real
/// coefficients, which keeps the vectors fixed by K.
/// Throws InvalidArgument if O does not commute with K, is not
/// diagonalizable, or has non-real spectrum.
KInvariantBasis k_invariant_basis(const Matrix& o, const AntilinearOperator& k,
                                  const Tolerance& tol = {});

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // distinct
  std::vector<Matrix> projectors;
};

/// Lagrange-interpolation projectors P_j = prod_{k!=j} (O - l_k)/(l_j - l_k)
/// on the distinct (clustered) eigenvalues of an unbroken O.
/// Throws InvalidArgument when the phase is not Unbroken and NumericalError
/// when the eigenvalue gaps make interpolation ill-conditioned.
SpectralDecomposition spectral_projectors(const Matrix& o, const AntilinearOperator& k,
                                          const Tolerance& tol = {});

struct SpectralResiduals {
  double reconstruction = 0.0;  // |sum l_j P_j - O|_F / max(1, |O|_F)
  double idempotence = 0.0;     // max_j |P_j^2 - P_j|_F
  double annihilation = 0.0;    // max_{j!=k} |P_j P_k|_F
  double completeness = 0.0;    // |sum P_j - 1|_F
  double k_commutation = 0.0;   // max_j |U conj(P_j) - P_j U|_F
  double max() const;
};

SpectralResiduals spectral_residuals(const SpectralDecomposition& sd, const Matrix& o,
                                     const AntilinearOperator& k);

}  // namespace ptsym
