#include "geovqe/eigensolver.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "geovqe/errors.hpp"
#include "geovqe/state.hpp"

namespace geovqe {

namespace {

Eigen::VectorXcd apply(const PauliSum& h, const Eigen::VectorXcd& v, int n_qubits) {
  std::vector<cplx> amps(v.data(), v.data() + v.size());
  StateVector s = StateVector::from_amplitudes(n_qubits, std::move(amps));
  StateVector hs = apply_pauli_sum(h, s);
  return Eigen::Map<const Eigen::VectorXcd>(hs.amplitudes().data(),
                                            static_cast<Eigen::Index>(hs.dim()));
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliSum& h) {
  const int n = h.n_qubits();
  if (n < 1 || n > 14)
    throw ValidationError("dense_matrix: refusing n_qubits outside [1, 14]");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& term : h.terms()) {
    const std::uint64_t x = term.string.x_mask;
    const std::uint64_t z = term.string.z_mask;
    const cplx base = term.coeff * i_pow[std::popcount(x & z) & 3];
    for (Eigen::Index b = 0; b < dim; ++b) {
      const cplx phase =
          (std::popcount(static_cast<std::uint64_t>(b) & z) & 1) ? -base : base;
      m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ x), b) += phase;
    }
  }
  return m;
}

GroundStateResult dense_ground_state(const PauliSum& h) {
  if (h.n_qubits() > 10)
    throw ValidationError("dense_ground_state: capped at 10 qubits; use Lanczos");
  if (!h.is_hermitian())
    throw ValidationError("dense_ground_state: Hamiltonian must be Hermitian");
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_ground_state: eigensolver failed");
  GroundStateResult result;
  result.energy = solver.eigenvalues()(0);
  const Eigen::VectorXcd v = solver.eigenvectors().col(0);
  result.residual = (m * v - result.energy * v).norm();
  result.iterations = 0;
  return result;
}

GroundStateResult lanczos_ground_energy(const PauliSum& h, const LanczosOptions& opts) {
  if (!h.is_hermitian())
    throw ValidationError("lanczos_ground_energy: Hamiltonian must be Hermitian");
  const int n = h.n_qubits();
  if (n < 1 || n > 28)
    throw ValidationError("lanczos_ground_energy: n_qubits must be in [1, 28]");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const int max_iter = std::min<int>(opts.max_iter, static_cast<int>(dim));
  if (max_iter < 1) throw ValidationError("lanczos_ground_energy: max_iter must be >= 1");

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx{gauss(rng), gauss(rng)};
  v.normalize();

  std::vector<Eigen::VectorXcd> basis{v};
  std::vector<double> alphas, betas;
  GroundStateResult result;

  auto ritz = [&](Eigen::VectorXd* weights) {
    const Eigen::Index k = static_cast<Eigen::Index>(alphas.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      t(i, i) = alphas[static_cast<std::size_t>(i)];
      if (i + 1 < k) {
        t(i, i + 1) = betas[static_cast<std::size_t>(i)];
        t(i + 1, i) = betas[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    if (weights) *weights = es.eigenvectors().col(0);
    return es.eigenvalues()(0);
  };

  auto finish = [&](double energy, const Eigen::VectorXd& weights) {
    Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < static_cast<std::size_t>(weights.size()); ++i)
      ground += weights(static_cast<Eigen::Index>(i)) * basis[i];
    ground.normalize();
    result.energy = energy;
    result.residual = (apply(h, ground, n) - energy * ground).norm();
    result.iterations = static_cast<int>(alphas.size());
  };

  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = apply(h, basis.back(), n);
    const double alpha = basis.back().dot(w).real();
    alphas.push_back(alpha);

    // Full reorthogonalization, run twice for stability.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) w -= u.dot(w) * u;
    const double beta = w.norm();

    Eigen::VectorXd weights;
    const double energy = ritz(&weights);
    result.estimates.push_back(energy);

    const double residual_estimate =
        beta * std::abs(weights(weights.size() - 1));
    if (residual_estimate <= opts.tol || beta <= 1e-14 ||
        static_cast<Eigen::Index>(basis.size()) == dim) {
      finish(energy, weights);
      if (result.residual <= opts.tol) return result;
      if (beta <= 1e-14 || static_cast<Eigen::Index>(basis.size()) == dim)
        return result;  // Krylov space exhausted: Ritz pair is exact there
    }

    betas.push_back(beta);
    basis.push_back(w / beta);
  }

  Eigen::VectorXd weights;
  const double energy = ritz(&weights);
  finish(energy, weights);
  throw ConvergenceError("lanczos_ground_energy: no convergence after " +
                             std::to_string(max_iter) + " iterations",
                         result.energy, result.residual);
}

GroundStateResult reference_ground_energy(const PauliSum& h, std::uint64_t seed) {
  if (h.n_qubits() <= 10) return dense_ground_state(h);
  LanczosOptions opts;
  opts.seed = seed;
  return lanczos_ground_energy(h, opts);
}

}  // namespace geovqe
