#include "geovqe/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace geovqe {

namespace {

// P|b> = phase(b) |b ^ x> with phase(b) = i^pc(x&z) * (-1)^pc(b&z).
inline cplx string_phase(const PauliString& p, std::uint64_t b) {
  static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx phase = i_pow[std::popcount(p.x_mask & p.z_mask) & 3];
  if (std::popcount(b & p.z_mask) & 1) phase = -phase;
  return phase;
}

void check_same_space(int state_qubits, const PauliSum& op, const char* where) {
  if (op.n_qubits() != state_qubits)
    throw std::invalid_argument(std::string(where) + ": operator/state qubit mismatch");
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 28)
    throw std::invalid_argument("StateVector: n_qubits must be in [1, 28]");
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim())
    throw std::invalid_argument("StateVector::basis_state: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amps) {
  StateVector s(n_qubits);
  if (amps.size() != s.dim())
    throw std::invalid_argument("StateVector::from_amplitudes: wrong length");
  s.amps_ = std::move(amps);
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("StateVector::normalize: zero vector");
  for (cplx& a : amps_) a /= n;
}

cplx StateVector::inner(const StateVector& other) const {
  if (n_qubits_ != other.n_qubits_)
    throw std::invalid_argument("StateVector::inner: qubit count mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i)
    acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

std::vector<double> Ansatz::thetas() const {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.theta);
  return out;
}

void Ansatz::set_thetas(std::span<const double> thetas) {
  if (thetas.size() != elements.size())
    throw std::invalid_argument("Ansatz::set_thetas: length mismatch");
  for (std::size_t i = 0; i < elements.size(); ++i) elements[i].theta = thetas[i];
}

StateVector apply_pauli_sum(const PauliSum& op, const StateVector& s) {
  check_same_space(s.n_qubits(), op, "apply_pauli_sum");
  StateVector out = StateVector::from_amplitudes(
      s.n_qubits(), std::vector<cplx>(s.dim(), cplx{0.0, 0.0}));
  auto in = s.amplitudes();
  auto acc = out.amplitudes();
  for (const auto& term : op.terms()) {
    const std::uint64_t x = term.string.x_mask;
    for (std::uint64_t b = 0; b < in.size(); ++b)
      acc[b ^ x] += term.coeff * string_phase(term.string, b) * in[b];
  }
  return out;
}

StateVector apply_exp_generator(const StateVector& s, const PauliSum& generator,
                                double theta) {
  check_same_space(s.n_qubits(), generator, "apply_exp_generator");
  if (!generator.is_hermitian())
    throw std::invalid_argument(
        "apply_exp_generator: generator must be Hermitian (real coefficients)");
  if (!generator.mutually_commuting())
    throw std::invalid_argument(
        "apply_exp_generator: strings must mutually commute; refusing to Trotterize");

  StateVector out = s;
  auto v = out.amplitudes();
  for (const auto& term : generator.terms()) {
    const double angle = theta * term.coeff.real();
    const double c = std::cos(angle);
    const cplx mis{0.0, -std::sin(angle)};  // -i sin(angle)
    const std::uint64_t x = term.string.x_mask;
    if (x == 0) {
      for (std::uint64_t b = 0; b < v.size(); ++b)
        v[b] = (c + mis * string_phase(term.string, b)) * v[b];
    } else {
      for (std::uint64_t b = 0; b < v.size(); ++b) {
        const std::uint64_t bx = b ^ x;
        if (b >= bx) continue;
        const cplx vb = v[b], vbx = v[bx];
        v[b] = c * vb + mis * string_phase(term.string, bx) * vbx;
        v[bx] = c * vbx + mis * string_phase(term.string, b) * vb;
      }
    }
  }
  return out;
}

double expectation(const PauliSum& h, const StateVector& s) {
  check_same_space(s.n_qubits(), h, "expectation");
  if (!h.is_hermitian())
    throw std::invalid_argument("expectation: operator must be Hermitian");
  const StateVector hs = apply_pauli_sum(h, s);
  const cplx val = s.inner(hs);
  if (std::abs(val.imag()) > 1e-10)
    throw std::runtime_error("expectation: imaginary residue above 1e-10");
  return val.real();
}

double covariance(const PauliSum& a, const PauliSum& b, const StateVector& s) {
  check_same_space(s.n_qubits(), a, "covariance");
  check_same_space(s.n_qubits(), b, "covariance");
  if (!a.is_hermitian() || !b.is_hermitian())
    throw std::invalid_argument("covariance: operators must be Hermitian");
  const StateVector as = apply_pauli_sum(a, s);
  const StateVector bs = apply_pauli_sum(b, s);
  const double mean_a = s.inner(as).real();
  const double mean_b = s.inner(bs).real();
  return as.inner(bs).real() - mean_a * mean_b;
}

}  // namespace geovqe
