#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "geovqe/fermion.hpp"
#include "geovqe/pauli.hpp"

namespace geovqe {

/// Parsed Hamiltonian file.  `electronic` holds the term lines as written;
/// the nuclear-repulsion offset is kept separate and folded in as an identity
/// term by total_hamiltonian(), so serialization round-trips the file shape.
struct HamiltonianFile {
  int n_qubits = 0;
  PauliSum electronic{1};
  double nuclear_repulsion = 0.0;

  // Optional metadata keys.
  std::optional<int> n_electrons;
  std::string label;
  std::optional<double> e_hf;   // stored SCF reference, Hartree
  std::optional<double> e_fci;  // stored exact ground energy, Hartree

  PauliSum total_hamiltonian() const;

  /// Molecule shape, present when n_electrons was given.
  std::optional<MoleculeSpec> molecule() const;
};

/// `origin` labels error messages (a path or "<fixture:...>").
HamiltonianFile parse_hamiltonian_text(std::string_view text, std::string_view origin);
HamiltonianFile parse_hamiltonian(const std::filesystem::path& path);

std::string serialize_hamiltonian(const HamiltonianFile& file);
void write_hamiltonian(const std::filesystem::path& path, const HamiltonianFile& file);

/// Deep consistency check: recomputes the ground energy and compares with the
/// stored e_fci to `tol`.  Throws ValidationError on mismatch; a file without
/// e_fci passes vacuously.
void validate_stored_references(const HamiltonianFile& file, double tol = 1e-9,
                                std::uint64_t seed = 0xC0FFEE);

/// Resolves "fixture:NAME" against the built-in library, otherwise treats
/// `source` as a filesystem path.
HamiltonianFile load_hamiltonian_source(const std::string& source);

}  // namespace geovqe
