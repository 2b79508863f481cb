// Microbenchmarks for the kernels that dominate a run: Pauli-sum application,
// generator exponentials, the pool metric/gradient, and the eigensolver.

#include <random>

#include <benchmark/benchmark.h>

#include "geovqe/adapt.hpp"
#include "geovqe/circuit.hpp"
#include "geovqe/eigensolver.hpp"
#include "geovqe/fermion.hpp"
#include "geovqe/geometry.hpp"
#include "geovqe/hamiltonian_file.hpp"
#include "geovqe/pauli.hpp"
#include "geovqe/state.hpp"

namespace {

using namespace geovqe;

StateVector random_state(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> amps(1ull << n_qubits);
  for (cplx& a : amps) a = cplx(gauss(rng), gauss(rng));
  StateVector s = StateVector::from_amplitudes(n_qubits, std::move(amps));
  s.normalize();
  return s;
}

PauliSum random_sum(int n_qubits, int n_terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const std::uint64_t mask = (n_qubits == 64) ? ~0ull : (1ull << n_qubits) - 1;
  std::vector<PauliTerm> terms;
  terms.reserve(n_terms);
  for (int t = 0; t < n_terms; ++t)
    terms.push_back({coeff(rng), PauliString(n_qubits, rng() & mask, rng() & mask)});
  return PauliSum(n_qubits, std::move(terms));
}

const PauliSum& h4_hamiltonian() {
  static const PauliSum h =
      load_hamiltonian_source("fixture:h4_chain_0p90").total_hamiltonian();
  return h;
}

void BM_PauliSumProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum a = random_sum(n, 24, 11);
  const PauliSum b = random_sum(n, 24, 13);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PauliSumProduct)->Arg(8)->Arg(16);

void BM_ApplyPauliSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum h = (n == 8) ? h4_hamiltonian() : random_sum(n, 128, 17);
  const StateVector psi = random_state(n, 23);
  for (auto _ : state) benchmark::DoNotOptimize(apply_pauli_sum(h, psi));
}
BENCHMARK(BM_ApplyPauliSum)->Arg(8)->Arg(12)->Arg(16);

void BM_ApplyExpGenerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliSum g = double_excitation_generator(0, 1, n - 2, n - 1, n).op;
  StateVector psi = random_state(n, 29);
  for (auto _ : state) {
    psi = apply_exp_generator(psi, g, 0.137);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_ApplyExpGenerator)->Arg(8)->Arg(12)->Arg(16);

void BM_PoolGradient(benchmark::State& state) {
  const MoleculeSpec spec{8, 4, "bench"};
  const OperatorPool pool = build_pool(spec);
  const StateVector psi = random_state(8, 31);
  for (auto _ : state) benchmark::DoNotOptimize(pool_gradient(h4_hamiltonian(), pool, psi));
}
BENCHMARK(BM_PoolGradient);

void BM_PoolMetric(benchmark::State& state) {
  const MoleculeSpec spec{8, 4, "bench"};
  const OperatorPool pool = build_pool(spec);
  const StateVector psi = random_state(8, 37);
  for (auto _ : state) benchmark::DoNotOptimize(pool_metric(pool, psi));
}
BENCHMARK(BM_PoolMetric);

void BM_LanczosGroundEnergy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lanczos_ground_energy(h4_hamiltonian()));
}
BENCHMARK(BM_LanczosGroundEnergy);

void BM_GeoAdaptH2(benchmark::State& state) {
  const HamiltonianFile file = load_hamiltonian_source("fixture:h2_sto3g_0p74");
  const PauliSum h = file.total_hamiltonian();
  const MoleculeSpec spec = *file.molecule();
  RunConfig cfg;
  cfg.algorithm = Algorithm::geo_adapt;
  cfg.max_outer = 8;
  for (auto _ : state) benchmark::DoNotOptimize(run_algorithm(cfg, h, spec));
}
BENCHMARK(BM_GeoAdaptH2);

}  // namespace

BENCHMARK_MAIN();
