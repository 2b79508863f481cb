#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "geovqe/pauli.hpp"
#include "geovqe/state.hpp"

namespace geovqe {

/// Molecular problem shape.  Spin-orbitals are interleaved (even index =
/// spin-up, odd = spin-down) and map one-to-one onto qubits, occupied = |1>.
struct MoleculeSpec {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  std::string label;

  void validate() const;
};

/// Jordan-Wigner image of a_p (dagger = a_p^dag):
/// (X_p -+ i Y_p)/2 times a Z chain on qubits 0..p-1.
PauliSum jw_ladder(int p, bool dagger, int n_qubits);

/// Hermitian excitation generator G = i(tau) with tau the anti-Hermitian
/// single or double fermionic excitation; the circuit element is
/// exp(-i theta G).  Strings of G mutually commute, so the exponential is
/// exact (checked once at construction).
struct ExcitationGenerator {
  enum class Kind { single, pair };

  Kind kind = Kind::single;
  /// single: {i, a, -1, -1} for i->a; pair: {i, j, a, b} for (i,j)->(a,b).
  std::array<int, 4> indices{-1, -1, -1, -1};
  PauliSum op;

  /// "s:0->2" or "d:(0,1)->(2,3)".
  std::string description() const;
};

/// G = i(a_a^dag a_i - a_i^dag a_a), two Pauli strings with +-1/2 coefficients.
ExcitationGenerator single_excitation_generator(int i, int a, int n_qubits);

/// G = i(a_a^dag a_b^dag a_j a_i - h.c.), eight Pauli strings with +-1/8
/// coefficients. Requires i < j (occupied pair) and a < b (virtual pair).
ExcitationGenerator double_excitation_generator(int i, int j, int a, int b,
                                                int n_qubits);

struct PoolOptions {
  /// Keep only generators conserving total S_z (index-parity balance between
  /// annihilated and created spin-orbitals).
  bool spin_conserving = true;

  friend bool operator==(const PoolOptions&, const PoolOptions&) = default;
};

/// UCCSD-style operator pool: all singles (occupied -> virtual), then all
/// doubles (occupied pair -> virtual pair), each enumerated in ascending
/// index order.  Construction is deterministic.
struct OperatorPool {
  int n_qubits = 0;
  std::vector<ExcitationGenerator> generators;

  std::size_t size() const { return generators.size(); }
  const PauliSum& op(std::size_t j) const { return generators.at(j).op; }
};

OperatorPool build_pool(const MoleculeSpec& spec, const PoolOptions& opts = {});

/// Hartree-Fock determinant: qubits 0..n_electrons-1 set to |1>.
StateVector hf_reference(const MoleculeSpec& spec);

/// One parameter per pool generator, singles then doubles, all angles zero.
Ansatz uccsd_ansatz(const MoleculeSpec& spec, const PoolOptions& opts = {});

/// Total occupation-number operator sum_q (I - Z_q)/2.
PauliSum number_operator(int n_qubits);

}  // namespace geovqe
