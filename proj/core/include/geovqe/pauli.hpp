#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace geovqe {

using cplx = std::complex<double>;

/// An n-qubit Pauli string in symplectic form: one X bit and one Z bit per
/// qubit.  The letter on qubit q is (x, z) = (0,0) I, (1,0) X, (1,1) Y,
/// (0,1) Z, i.e. Y is stored as both bits set.  Up to 64 qubits fit in one
/// pair of machine words.
struct PauliString {
  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  PauliString() = default;
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString identity(int n_qubits);

  /// Parse a fixed-length label over {I,X,Y,Z}; the leftmost letter is
  /// qubit 0.  Throws ValidationError on other characters or empty input.
  static PauliString from_label(std::string_view label);

  /// Inverse of from_label (leftmost letter = qubit 0).
  std::string label() const;

  char letter_at(int qubit) const;

  /// Number of non-identity sites.
  int weight() const;

  bool is_identity() const { return x_mask == 0 && z_mask == 0; }

  /// Pauli strings either commute or anticommute; true iff they commute
  /// (symplectic inner product is even).
  bool commutes_with(const PauliString& other) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// Result of multiplying two Pauli strings: phase * string equals the matrix
/// product, with phase always one of {1, i, -1, -i}.
struct PauliProduct {
  cplx phase;
  PauliString string;
};

PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

struct PauliTerm {
  cplx coeff;
  PauliString string;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// A weighted sum of Pauli strings kept in canonical form: terms sorted by
/// (x_mask, z_mask), duplicate strings merged, coefficients with
/// |c| <= prune_tol dropped.  All mutating entry points re-canonicalize, so
/// equality of sums is equality of the term vectors.
class PauliSum {
 public:
  static constexpr double prune_tol = 1e-12;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(int n_qubits, cplx coeff = 1.0);
  static PauliSum single(int n_qubits, cplx coeff, const PauliString& string);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// True iff every canonical coefficient is real to within tol.
  bool is_hermitian(double tol = 1e-10) const;

  /// True iff all pairs of strings commute (quadratic in term count).
  bool mutually_commuting() const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx scalar) { return a *= scalar; }
  friend PauliSum operator*(cplx scalar, PauliSum a) { return a *= scalar; }

  /// Operator product; expands all cross terms and re-canonicalizes.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  void canonicalize();

  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// [A, B] = AB - BA, computed pairwise: commuting string pairs are skipped,
/// anticommuting pairs contribute twice their product.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

}  // namespace geovqe
