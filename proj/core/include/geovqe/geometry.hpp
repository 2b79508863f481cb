#pragma once

#include <vector>

#include <Eigen/Dense>

#include "geovqe/circuit.hpp"
#include "geovqe/fermion.hpp"
#include "geovqe/state.hpp"

namespace geovqe {

/// Selection gradient over the pool: g_j = -i<[H, O_j]> = 2 Im<H psi|O_j psi>.
struct PoolGradient {
  Eigen::VectorXd values;
};

/// Pool covariance matrix F_ij = Re<O_i psi|O_j psi> - <O_i><O_j>; symmetric
/// positive semidefinite by construction.
struct PoolMetric {
  Eigen::MatrixXd matrix;
};

/// Tikhonov-regularized metric solve (F + lambda I) x = g with
/// lambda = reg * max(1, trace(F)/M).
struct NaturalGradient {
  Eigen::VectorXd values;
  /// sqrt(g^T x), clamped at zero.
  double fnorm = 0.0;
  double lambda_reg = 0.0;
  /// ||(F + lambda I) x - g||_2.
  double solve_residual = 0.0;
};

/// Metric spectrum summary recorded per iteration: extreme eigenvalues and a
/// diagonal-dominance proxy at the selected row.
struct SpectralDiagnostics {
  double mu_hat = 0.0;      // smallest eigenvalue
  double lambda_hat = 0.0;  // largest eigenvalue
  double rho_hat = 0.0;     // 1 - sum_{t != j} |F_jt| / F_jj (-inf if F_jj == 0)
};

PoolGradient pool_gradient(const PauliSum& h, const OperatorPool& pool,
                           const StateVector& state);

/// Position-resolved form: g_j = 2 Im<bra|O_j|ket>.  With bra = H|psi> and
/// ket = |psi> this reduces to the standard pool gradient.
PoolGradient pool_gradient(const StateVector& bra, const OperatorPool& pool,
                           const StateVector& ket);

PoolMetric pool_metric(const OperatorPool& pool, const StateVector& state);

NaturalGradient natural_gradient(const PoolMetric& metric, const PoolGradient& grad,
                                 double reg);

/// True iff nat.fnorm < eps (the regularized metric norm sqrt(g^T x)).
bool fnorm_stopping(const NaturalGradient& nat, double eps);

/// Fubini-Study metric of the ansatz parameters:
/// F_ij = Re[<d_i|d_j> - <d_i|psi><psi|d_j>].
Eigen::MatrixXd ansatz_metric(const Ansatz& ansatz, const OperatorPool& pool,
                              const StateVector& ref);
Eigen::MatrixXd ansatz_metric(const TangentFrame& frame);

/// Zeroes all entries whose row and column fall in different blocks; `blocks`
/// must partition 0..k-1.
Eigen::MatrixXd block_diag_metric(const Eigen::MatrixXd& full,
                                  const std::vector<std::vector<int>>& blocks);

SpectralDiagnostics spectral_diagnostics(const PoolMetric& metric, int selected_row);

}  // namespace geovqe
