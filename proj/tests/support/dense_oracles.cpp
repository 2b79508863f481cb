#include "dense_oracles.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

Eigen::Matrix2cd pauli_letter(char c) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const cplx i(0.0, 1.0);
  switch (c) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = -i; m(1, 0) = i; break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw std::invalid_argument("pauli_letter: bad letter");
  }
  return m;
}

Eigen::MatrixXcd dense_from_label(std::string_view label) {
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Ones(1, 1);
  // Qubit q is bit q of the index, so later letters become outer factors.
  for (char c : label)
    full = Eigen::kroneckerProduct(pauli_letter(c), full).eval();
  return full;
}

Eigen::MatrixXcd dense_string(const geovqe::PauliString& s) {
  std::string label;
  for (int q = 0; q < s.n_qubits; ++q) {
    const bool x = (s.x_mask >> q) & 1;
    const bool z = (s.z_mask >> q) & 1;
    label += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return dense_from_label(label);
}

Eigen::MatrixXcd dense_sum(const geovqe::PauliSum& h) {
  const Eigen::Index dim = Eigen::Index(1) << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) m += term.coeff * dense_string(term.string);
  return m;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

Eigen::MatrixXcd ladder_matrix(int p, bool dagger, int n_modes) {
  const Eigen::Index dim = Eigen::Index(1) << n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const bool occupied = (b >> p) & 1;
    if (occupied == dagger) continue;  // a needs occupied, a^dag needs empty
    double sign = 1.0;
    for (int q = 0; q < p; ++q)
      if ((b >> q) & 1) sign = -sign;
    m(b ^ (Eigen::Index(1) << p), b) = sign;
  }
  return m;
}

Eigen::VectorXcd to_vector(const geovqe::StateVector& s) {
  const auto amps = s.amplitudes();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = amps[static_cast<std::size_t>(i)];
  return v;
}

geovqe::StateVector to_state(int n_qubits, const Eigen::VectorXcd& v) {
  std::vector<cplx> amps(v.data(), v.data() + v.size());
  return geovqe::StateVector::from_amplitudes(n_qubits, std::move(amps));
}

geovqe::StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> amps(std::size_t(1) << n_qubits);
  for (auto& a : amps) a = cplx(gauss(rng), gauss(rng));
  auto s = geovqe::StateVector::from_amplitudes(n_qubits, std::move(amps));
  s.normalize();
  return s;
}

geovqe::PauliString random_string(int n_qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(
      0, (std::uint64_t(1) << n_qubits) - 1);
  return geovqe::PauliString(n_qubits, bits(rng), bits(rng));
}

geovqe::PauliSum random_hermitian(int n_qubits, int n_terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<geovqe::PauliTerm> terms;
  terms.reserve(static_cast<std::size_t>(n_terms));
  for (int t = 0; t < n_terms; ++t)
    terms.push_back({coeff(rng), random_string(n_qubits, rng)});
  return geovqe::PauliSum(n_qubits, std::move(terms));
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
