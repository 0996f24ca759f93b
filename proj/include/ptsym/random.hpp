// Seeded random generators for the matrix ensembles used by effect sampling
// and the test suites.
#pragma once

#include <cstdint>
#include <random>

#include "ptsym/linalg.hpp"

namespace ptsym::rnd {

using Rng = std::mt19937_64;

Vector complex_vector(int dim, Rng& rng);
Matrix ginibre(int dim, Rng& rng);
RealMatrix real_gaussian(int dim, Rng& rng);

/// Haar-distributed unitary / orthogonal (Gram-Schmidt of a Ginibre matrix).
Matrix unitary(int dim, Rng& rng);
RealMatrix orthogonal(int dim, Rng& rng);

/// W W^T for Haar W: a symmetric unitary, so W W^T kappa is an antiunitary
/// involution.
Matrix symmetric_unitary(int dim, Rng& rng);

/// W diag(exp(u)) W^dagger with u uniform in [-spread, spread].
Matrix positive_definite(int dim, Rng& rng, double spread = 1.0);

/// Random Hermitian / real symmetric matrix with spectrum uniform in [0, 1].
Matrix hermitian_unit_spectrum(int dim, Rng& rng);
RealMatrix symmetric_unit_spectrum(int dim, Rng& rng);

/// R D R^{-1} with R real Gaussian (condition number below 1e3) and D a
/// random 0/1 diagonal. Non-orthogonal in general.
RealMatrix real_idempotent(int dim, Rng& rng);

/// G G^dagger / tr for Ginibre G (real Gaussian for the real variant).
Matrix density_matrix(int dim, Rng& rng);
RealMatrix real_density_matrix(int dim, Rng& rng);

/// Orthogonal * diag(scales) * orthogonal with scales in [1/spread, spread].
RealMatrix well_conditioned_real(int dim, Rng& rng, double spread = 2.0);

}  // namespace ptsym::rnd
