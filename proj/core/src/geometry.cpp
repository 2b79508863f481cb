#include "geovqe/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geovqe {

PoolGradient pool_gradient(const PauliSum& h, const OperatorPool& pool,
                           const StateVector& state) {
  if (!h.is_hermitian())
    throw std::invalid_argument("pool_gradient: Hamiltonian must be Hermitian");
  return pool_gradient(apply_pauli_sum(h, state), pool, state);
}

PoolGradient pool_gradient(const StateVector& bra, const OperatorPool& pool,
                           const StateVector& ket) {
  PoolGradient g;
  g.values.resize(static_cast<Eigen::Index>(pool.size()));
  for (std::size_t j = 0; j < pool.size(); ++j)
    g.values(static_cast<Eigen::Index>(j)) =
        2.0 * bra.inner(apply_pauli_sum(pool.op(j), ket)).imag();
  return g;
}

PoolMetric pool_metric(const OperatorPool& pool, const StateVector& state) {
  const Eigen::Index m = static_cast<Eigen::Index>(pool.size());
  std::vector<StateVector> applied;
  applied.reserve(pool.size());
  std::vector<double> means(pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j) {
    applied.push_back(apply_pauli_sum(pool.op(j), state));
    means[j] = state.inner(applied.back()).real();
  }
  PoolMetric f;
  f.matrix.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j) {
      const double cov =
          applied[static_cast<std::size_t>(i)].inner(applied[static_cast<std::size_t>(j)]).real() -
          means[static_cast<std::size_t>(i)] * means[static_cast<std::size_t>(j)];
      f.matrix(i, j) = cov;
      f.matrix(j, i) = cov;
    }
  return f;
}

NaturalGradient natural_gradient(const PoolMetric& metric, const PoolGradient& grad,
                                 double reg) {
  const Eigen::Index m = metric.matrix.rows();
  if (metric.matrix.cols() != m || grad.values.size() != m)
    throw std::invalid_argument("natural_gradient: dimension mismatch");
  if (m == 0) throw std::invalid_argument("natural_gradient: empty system");
  if (reg < 0.0) throw std::invalid_argument("natural_gradient: reg must be >= 0");

  NaturalGradient out;
  out.lambda_reg = reg * std::max(1.0, metric.matrix.trace() / static_cast<double>(m));
  Eigen::MatrixXd regularized = metric.matrix;
  regularized.diagonal().array() += out.lambda_reg;

  Eigen::LDLT<Eigen::MatrixXd> ldlt(regularized);
  out.values = ldlt.solve(grad.values);
  out.solve_residual = (regularized * out.values - grad.values).norm();
  if (ldlt.info() != Eigen::Success || !out.values.allFinite())
    throw std::runtime_error(
        "natural_gradient: metric solve failed after regularization (singular metric)");
  out.fnorm = std::sqrt(std::max(0.0, grad.values.dot(out.values)));
  return out;
}

bool fnorm_stopping(const NaturalGradient& nat, double eps) {
  return nat.fnorm < eps;
}

Eigen::MatrixXd ansatz_metric(const Ansatz& ansatz, const OperatorPool& pool,
                              const StateVector& ref) {
  return ansatz_metric(tangent_frame(ansatz, pool, ref));
}

Eigen::MatrixXd ansatz_metric(const TangentFrame& frame) {
  const Eigen::Index k = static_cast<Eigen::Index>(frame.derivs.size());
  Eigen::VectorXcd overlaps(k);
  for (Eigen::Index i = 0; i < k; ++i)
    overlaps(i) = frame.derivs[static_cast<std::size_t>(i)].inner(frame.psi);
  Eigen::MatrixXd f(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      const cplx gram = frame.derivs[static_cast<std::size_t>(i)].inner(
          frame.derivs[static_cast<std::size_t>(j)]);
      const double val = (gram - overlaps(i) * std::conj(overlaps(j))).real();
      f(i, j) = val;
      f(j, i) = val;
    }
  return f;
}

Eigen::MatrixXd block_diag_metric(const Eigen::MatrixXd& full,
                                  const std::vector<std::vector<int>>& blocks) {
  const Eigen::Index k = full.rows();
  if (full.cols() != k) throw std::invalid_argument("block_diag_metric: non-square");
  std::vector<int> block_of(static_cast<std::size_t>(k), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int idx : blocks[b]) {
      if (idx < 0 || idx >= k || block_of[static_cast<std::size_t>(idx)] != -1)
        throw std::invalid_argument("block_diag_metric: blocks must partition 0..k-1");
      block_of[static_cast<std::size_t>(idx)] = static_cast<int>(b);
    }
  for (int assigned : block_of)
    if (assigned == -1)
      throw std::invalid_argument("block_diag_metric: blocks must cover every index");
  Eigen::MatrixXd out = full;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(j)])
        out(i, j) = 0.0;
  return out;
}

SpectralDiagnostics spectral_diagnostics(const PoolMetric& metric, int selected_row) {
  const Eigen::Index m = metric.matrix.rows();
  if (selected_row < 0 || selected_row >= m)
    throw std::invalid_argument("spectral_diagnostics: row out of range");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric.matrix,
                                                    Eigen::EigenvaluesOnly);
  SpectralDiagnostics d;
  d.mu_hat = es.eigenvalues()(0);
  d.lambda_hat = es.eigenvalues()(m - 1);
  const double diag = metric.matrix(selected_row, selected_row);
  if (diag <= 0.0) {
    d.rho_hat = -std::numeric_limits<double>::infinity();
  } else {
    double off = 0.0;
    for (Eigen::Index t = 0; t < m; ++t)
      if (t != selected_row) off += std::abs(metric.matrix(selected_row, t));
    d.rho_hat = 1.0 - off / diag;
  }
  return d;
}

}  // namespace geovqe
