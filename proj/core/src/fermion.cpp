#include "geovqe/fermion.hpp"

#include <stdexcept>
#include <string>

#include "geovqe/errors.hpp"

namespace geovqe {

namespace {

void check_orbital(int p, int n_qubits, const char* where) {
  if (p < 0 || p >= n_qubits)
    throw std::invalid_argument(std::string(where) + ": orbital index out of range");
}

const cplx kImag{0.0, 1.0};

}  // namespace

void MoleculeSpec::validate() const {
  if (n_spin_orbitals < 1 || n_spin_orbitals > 64)
    throw ValidationError("MoleculeSpec: n_spin_orbitals must be in [1, 64]");
  if (n_electrons < 0 || n_electrons > n_spin_orbitals)
    throw ValidationError("MoleculeSpec: n_electrons must be in [0, n_spin_orbitals]");
}

PauliSum jw_ladder(int p, bool dagger, int n_qubits) {
  check_orbital(p, n_qubits, "jw_ladder");
  std::uint64_t chain = (std::uint64_t{1} << p) - 1;  // Z on qubits 0..p-1
  const std::uint64_t site = std::uint64_t{1} << p;
  // a^dag = (X - iY)/2 * chain, a = (X + iY)/2 * chain, with occupied = |1>.
  const cplx y_coeff = dagger ? cplx{0.0, -0.5} : cplx{0.0, 0.5};
  return PauliSum(n_qubits, {{0.5, PauliString(n_qubits, site, chain)},
                             {y_coeff, PauliString(n_qubits, site, chain | site)}});
}

std::string ExcitationGenerator::description() const {
  if (kind == Kind::single)
    return "s:" + std::to_string(indices[0]) + "->" + std::to_string(indices[1]);
  return "d:(" + std::to_string(indices[0]) + "," + std::to_string(indices[1]) +
         ")->(" + std::to_string(indices[2]) + "," + std::to_string(indices[3]) + ")";
}

ExcitationGenerator single_excitation_generator(int i, int a, int n_qubits) {
  check_orbital(i, n_qubits, "single_excitation_generator");
  check_orbital(a, n_qubits, "single_excitation_generator");
  if (i == a)
    throw std::invalid_argument("single_excitation_generator: i == a");
  const PauliSum tau = jw_ladder(a, true, n_qubits) * jw_ladder(i, false, n_qubits) -
                       jw_ladder(i, true, n_qubits) * jw_ladder(a, false, n_qubits);
  ExcitationGenerator gen;
  gen.kind = ExcitationGenerator::Kind::single;
  gen.indices = {i, a, -1, -1};
  gen.op = kImag * tau;
  if (!gen.op.is_hermitian() || !gen.op.mutually_commuting())
    throw std::logic_error("single excitation generator failed its contract");
  return gen;
}

ExcitationGenerator double_excitation_generator(int i, int j, int a, int b,
                                                int n_qubits) {
  check_orbital(i, n_qubits, "double_excitation_generator");
  check_orbital(j, n_qubits, "double_excitation_generator");
  check_orbital(a, n_qubits, "double_excitation_generator");
  check_orbital(b, n_qubits, "double_excitation_generator");
  if (!(i < j) || !(a < b))
    throw std::invalid_argument("double_excitation_generator: need i < j and a < b");
  if (i == a || i == b || j == a || j == b)
    throw std::invalid_argument("double_excitation_generator: index collision");
  const PauliSum fwd = jw_ladder(a, true, n_qubits) * jw_ladder(b, true, n_qubits) *
                       jw_ladder(j, false, n_qubits) * jw_ladder(i, false, n_qubits);
  const PauliSum tau = fwd - fwd.adjoint();
  ExcitationGenerator gen;
  gen.kind = ExcitationGenerator::Kind::pair;
  gen.indices = {i, j, a, b};
  gen.op = kImag * tau;
  if (!gen.op.is_hermitian() || !gen.op.mutually_commuting())
    throw std::logic_error("double excitation generator failed its contract");
  return gen;
}

OperatorPool build_pool(const MoleculeSpec& spec, const PoolOptions& opts) {
  spec.validate();
  const int n = spec.n_spin_orbitals;
  const int ne = spec.n_electrons;
  OperatorPool pool;
  pool.n_qubits = n;

  for (int i = 0; i < ne; ++i)
    for (int a = ne; a < n; ++a) {
      if (opts.spin_conserving && (i % 2) != (a % 2)) continue;
      pool.generators.push_back(single_excitation_generator(i, a, n));
    }

  for (int i = 0; i < ne; ++i)
    for (int j = i + 1; j < ne; ++j)
      for (int a = ne; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (opts.spin_conserving && (i % 2 + j % 2) != (a % 2 + b % 2)) continue;
          pool.generators.push_back(double_excitation_generator(i, j, a, b, n));
        }

  return pool;
}

StateVector hf_reference(const MoleculeSpec& spec) {
  spec.validate();
  const std::uint64_t index = (std::uint64_t{1} << spec.n_electrons) - 1;
  return StateVector::basis_state(spec.n_spin_orbitals, index);
}

Ansatz uccsd_ansatz(const MoleculeSpec& spec, const PoolOptions& opts) {
  const OperatorPool pool = build_pool(spec, opts);
  Ansatz ansatz;
  ansatz.elements.reserve(pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j)
    ansatz.elements.push_back({static_cast<int>(j), 0.0});
  return ansatz;
}

PauliSum number_operator(int n_qubits) {
  std::vector<PauliTerm> terms;
  terms.push_back({0.5 * n_qubits, PauliString::identity(n_qubits)});
  for (int q = 0; q < n_qubits; ++q)
    terms.push_back({-0.5, PauliString(n_qubits, 0, std::uint64_t{1} << q)});
  return PauliSum(n_qubits, std::move(terms));
}

}  // namespace geovqe
