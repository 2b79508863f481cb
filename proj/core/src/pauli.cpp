#include "geovqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "geovqe/errors.hpp"

namespace geovqe {

namespace {

std::uint64_t qubit_mask(int n_qubits) {
  return n_qubits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 64)
    throw std::invalid_argument("PauliString: n_qubits must be in [1, 64], got " +
                                std::to_string(n_qubits));
}

int pc(std::uint64_t v) { return std::popcount(v); }

constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits(n_qubits), x_mask(x_mask), z_mask(z_mask) {
  check_qubit_count(n_qubits);
  const std::uint64_t mask = qubit_mask(n_qubits);
  if ((x_mask & ~mask) != 0 || (z_mask & ~mask) != 0)
    throw std::invalid_argument("PauliString: mask bits outside qubit range");
}

PauliString PauliString::identity(int n_qubits) { return {n_qubits, 0, 0}; }

PauliString PauliString::from_label(std::string_view label) {
  if (label.empty() || label.size() > 64)
    throw ValidationError("Pauli label must have 1..64 letters");
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    switch (label[q]) {
      case 'I': break;
      case 'X': x |= std::uint64_t{1} << q; break;
      case 'Y': x |= std::uint64_t{1} << q; z |= std::uint64_t{1} << q; break;
      case 'Z': z |= std::uint64_t{1} << q; break;
      default:
        throw ValidationError(std::string("invalid Pauli letter '") + label[q] +
                              "' in label \"" + std::string(label) + "\"");
    }
  }
  return {static_cast<int>(label.size()), x, z};
}

std::string PauliString::label() const {
  std::string out(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) out[static_cast<std::size_t>(q)] = letter_at(q);
  return out;
}

char PauliString::letter_at(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("PauliString::letter_at: qubit out of range");
  const bool x = (x_mask >> qubit) & 1;
  const bool z = (z_mask >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return pc(x_mask | z_mask); }

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_qubits != other.n_qubits)
    throw std::invalid_argument("commutes_with: qubit count mismatch");
  return ((pc(x_mask & other.z_mask) + pc(z_mask & other.x_mask)) & 1) == 0;
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("pauli_mul: qubit count mismatch");
  // Write each letter as i^(x z) X^x Z^z; commuting Z^z1 past X^x2 gives
  // (-1)^(z1 x2), and the result is put back into the same canonical form.
  const std::uint64_t x = a.x_mask ^ b.x_mask;
  const std::uint64_t z = a.z_mask ^ b.z_mask;
  const int k = (pc(a.x_mask & a.z_mask) + pc(b.x_mask & b.z_mask) +
                 2 * pc(a.z_mask & b.x_mask) + 3 * pc(x & z)) & 3;
  return {i_pow[k], PauliString(a.n_qubits, x, z)};
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) { check_qubit_count(n_qubits); }

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  check_qubit_count(n_qubits);
  for (const auto& t : terms_)
    if (t.string.n_qubits != n_qubits_)
      throw std::invalid_argument("PauliSum: term qubit count mismatch");
  canonicalize();
}

PauliSum PauliSum::identity(int n_qubits, cplx coeff) {
  return PauliSum(n_qubits, {{coeff, PauliString::identity(n_qubits)}});
}

PauliSum PauliSum::single(int n_qubits, cplx coeff, const PauliString& string) {
  return PauliSum(n_qubits, {{coeff, string}});
}

void PauliSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return std::tie(a.string.x_mask, a.string.z_mask) <
           std::tie(b.string.x_mask, b.string.z_mask);
  });
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().string == t.string)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const PauliTerm& t) { return std::abs(t.coeff) <= prune_tol; });
  terms_ = std::move(merged);
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& t : terms_)
    if (std::abs(t.coeff.imag()) > tol) return false;
  return true;
}

bool PauliSum::mutually_commuting() const {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (!terms_[i].string.commutes_with(terms_[j].string)) return false;
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (n_qubits_ == 0) {
    *this = other;
    return *this;
  }
  if (other.n_qubits_ == 0) return *this;
  if (n_qubits_ != other.n_qubits_)
    throw std::invalid_argument("PauliSum: qubit count mismatch in +=");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  PauliSum negated = other;
  negated *= cplx(-1.0, 0.0);
  return *this += negated;
}

PauliSum& PauliSum::operator*=(cplx scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  canonicalize();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_)
    throw std::invalid_argument("PauliSum: qubit count mismatch in *");
  std::vector<PauliTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [phase, str] = pauli_mul(ta.string, tb.string);
      out.push_back({ta.coeff * tb.coeff * phase, str});
    }
  return PauliSum(a.n_qubits_, std::move(out));
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("commutator: qubit count mismatch");
  std::vector<PauliTerm> out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      if (ta.string.commutes_with(tb.string)) continue;
      auto [phase, str] = pauli_mul(ta.string, tb.string);
      out.push_back({2.0 * ta.coeff * tb.coeff * phase, str});
    }
  return PauliSum(a.n_qubits(), std::move(out));
}

}  // namespace geovqe
