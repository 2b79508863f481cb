#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geovqe/pauli.hpp"

namespace geovqe {

/// Exact complex statevector over n qubits.  Qubit 0 is the least significant
/// bit of the amplitude index, so basis state |b> has amplitude amps[b] and
/// bit q of b is the occupation of qubit q.
class StateVector {
 public:
  StateVector() = default;

  /// |0...0>.
  explicit StateVector(int n_qubits);

  static StateVector basis_state(int n_qubits, std::uint64_t index);
  static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx amplitude(std::uint64_t index) const { return amps_.at(index); }

  double norm() const;
  void normalize();

  /// <this|other>.
  cplx inner(const StateVector& other) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// One ansatz element: index into an operator pool plus its rotation angle.
struct AnsatzElement {
  int pool_index = 0;
  double theta = 0.0;

  friend bool operator==(const AnsatzElement&, const AnsatzElement&) = default;
};

/// Ordered product of pool rotations; element t contributes exp(-i theta_t G_t)
/// applied after elements 0..t-1.  The same pool index may appear at several
/// positions, each with its own angle.
struct Ansatz {
  std::vector<AnsatzElement> elements;

  std::size_t size() const { return elements.size(); }
  std::vector<double> thetas() const;
  void set_thetas(std::span<const double> thetas);

  friend bool operator==(const Ansatz&, const Ansatz&) = default;
};

/// op|s> as a dense statevector (generally unnormalized).
StateVector apply_pauli_sum(const PauliSum& op, const StateVector& s);

/// exp(-i theta G)|s> for a Hermitian generator G whose strings mutually
/// commute: the exponential factorizes exactly into per-string rotations
/// exp(-i theta c P) = cos(theta c) I - i sin(theta c) P.  Generators that do
/// not satisfy the precondition are rejected (no implicit Trotterization).
StateVector apply_exp_generator(const StateVector& s, const PauliSum& generator,
                                double theta);

/// Re<s|H|s>; requires Hermitian H and asserts the imaginary residue is below
/// 1e-10.
double expectation(const PauliSum& h, const StateVector& s);

/// Cov(A, B) = Re<As|Bs> - <A><B> for Hermitian A, B on a normalized state.
double covariance(const PauliSum& a, const PauliSum& b, const StateVector& s);

}  // namespace geovqe
