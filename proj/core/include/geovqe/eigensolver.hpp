#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "geovqe/pauli.hpp"

namespace geovqe {

struct GroundStateResult {
  double energy = 0.0;
  /// ||H v - E v|| for the returned eigenpair.
  double residual = 0.0;
  /// Krylov iterations used (0 for the dense path).
  int iterations = 0;
  /// Ritz-value history, one entry per Krylov step (monotone non-increasing).
  std::vector<double> estimates;
};

/// Hermitian PauliSum as a dense matrix (column b holds H|b>).
Eigen::MatrixXcd dense_matrix(const PauliSum& h);

/// Exact lowest eigenvalue by full diagonalization; rejects n_qubits > 10.
GroundStateResult dense_ground_state(const PauliSum& h);

struct LanczosOptions {
  double tol = 1e-10;
  int max_iter = 300;
  std::uint64_t seed = 0xC0FFEE;
};

/// Matrix-free Lanczos with full reorthogonalization and a seeded random
/// start vector.  Throws ConvergenceError (carrying the best estimate) if the
/// residual does not reach tol within max_iter Krylov steps.
GroundStateResult lanczos_ground_energy(const PauliSum& h, const LanczosOptions& opts = {});

/// Dense path for n_qubits <= 10, Lanczos otherwise.
GroundStateResult reference_ground_energy(const PauliSum& h, std::uint64_t seed = 0xC0FFEE);

}  // namespace geovqe
