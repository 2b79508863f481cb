#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include <doctest/doctest.h>

#include "geovqe/adapt.hpp"
#include "geovqe/errors.hpp"
#include "geovqe/fixtures.hpp"
#include "geovqe/hamiltonian_file.hpp"
#include "geovqe/trace_io.hpp"
#include "support/dense_oracles.hpp"

using namespace geovqe;

namespace {

OperatorPool single_op_pool(int n, const char* label) {
  OperatorPool pool;
  pool.n_qubits = n;
  ExcitationGenerator g;
  g.op = PauliSum::single(n, 1.0, PauliString::from_label(label));
  pool.generators.push_back(std::move(g));
  return pool;
}

const HamiltonianFile& h2_file() {
  static const HamiltonianFile f = load_hamiltonian_source("fixture:h2_sto3g_0p74");
  return f;
}

RunConfig base_config(Algorithm a) {
  RunConfig cfg;
  cfg.algorithm = a;
  return cfg;
}

}  // namespace

TEST_SUITE("adapt") {

TEST_CASE("select_operator") {
  Eigen::VectorXd v(3);
  v << 0.1, -0.5, 0.2;
  CHECK(select_operator(v, std::nullopt) == std::pair(1, false));

  Eigen::VectorXd tie(2);
  tie << 0.5, -0.5;
  CHECK(select_operator(tie, std::nullopt) == std::pair(0, false));

  Eigen::VectorXd again(2);
  again << 0.0, -0.5;
  CHECK(select_operator(again, 1) == std::pair(1, true));
  CHECK(select_operator(again, 0) == std::pair(1, false));

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS((void)select_operator(zero, std::nullopt), std::logic_error);
  CHECK_THROWS_AS((void)select_operator(Eigen::VectorXd(), std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("inner_gd takes plain gradient steps") {
  const OperatorPool pool = build_pool(*h2_file().molecule());
  const StateVector ref = hf_reference(*h2_file().molecule());
  const PauliSum h = h2_file().total_hamiltonian();

  Ansatz a;
  a.elements = {{2, 0.2}, {0, -0.1}};
  const double eta = 0.05;
  const InnerResult one = inner_gd(a, h, pool, ref, eta, 1);

  const std::vector<double> g = energy_gradient(h, a, pool, ref);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(one.ansatz.elements[i].theta ==
          doctest::Approx(a.elements[i].theta - eta * g[i]).epsilon(1e-15));
  REQUIRE(one.energies.size() == 2);
  CHECK(one.energies[0] == expectation(h, prepare_state(a, pool, ref)));
}

TEST_CASE("inner_gd is inner_qngd with the identity metric, bit for bit") {
  const OperatorPool pool = build_pool(*h2_file().molecule());
  const StateVector ref = hf_reference(*h2_file().molecule());
  const PauliSum h = h2_file().total_hamiltonian();
  Ansatz a;
  a.elements = {{2, 0.3}, {1, 0.05}, {2, -0.2}};

  const InnerResult gd = inner_gd(a, h, pool, ref, 0.1, 4);
  const InnerResult qng = inner_qngd(a, h, pool, ref, 0.1, 4, 0.0, InnerMetric::identity);
  CHECK(gd.ansatz == qng.ansatz);
  CHECK(gd.energies == qng.energies);
}

TEST_CASE("inner_qngd: one full block equals the full metric, bit for bit") {
  const OperatorPool pool = build_pool(*h2_file().molecule());
  const StateVector ref = hf_reference(*h2_file().molecule());
  const PauliSum h = h2_file().total_hamiltonian();
  Ansatz a;
  a.elements = {{2, 0.3}, {0, -0.1}, {1, 0.2}};

  const std::vector<std::vector<int>> one_block{{0, 1, 2}};
  const InnerResult full = inner_qngd(a, h, pool, ref, 0.1, 3, 1e-8, InnerMetric::full);
  const InnerResult block =
      inner_qngd(a, h, pool, ref, 0.1, 3, 1e-8, InnerMetric::block_diag, &one_block);
  CHECK(full.ansatz == block.ansatz);
  CHECK(full.energies == block.energies);
}

TEST_CASE("inner_qngd: singleton default equals explicit singleton blocks") {
  const OperatorPool pool = build_pool(*h2_file().molecule());
  const StateVector ref = hf_reference(*h2_file().molecule());
  const PauliSum h = h2_file().total_hamiltonian();
  Ansatz a;
  a.elements = {{2, 0.3}, {0, -0.1}};

  const std::vector<std::vector<int>> singles{{0}, {1}};
  const InnerResult defaulted =
      inner_qngd(a, h, pool, ref, 0.1, 3, 1e-8, InnerMetric::block_diag);
  const InnerResult explicit_blocks =
      inner_qngd(a, h, pool, ref, 0.1, 3, 1e-8, InnerMetric::block_diag, &singles);
  CHECK(defaulted.ansatz == explicit_blocks.ansatz);
  CHECK(defaulted.energies == explicit_blocks.energies);
}

TEST_CASE("inner_qngd on the scalar rotation follows the closed form") {
  // H = Z0, G = Y0, ref = |0>: psi(theta) = cos(theta)|0> + sin(theta)|1>,
  // E = cos(2 theta), dE/dtheta = -2 sin(2 theta), and the Fubini-Study
  // metric is exactly 1, so QNGD reduces to theta += 2 eta sin(2 theta)/(1+lambda).
  const OperatorPool pool = single_op_pool(1, "Y");
  const StateVector ref(1);
  const PauliSum h = PauliSum::single(1, 1.0, PauliString::from_label("Z"));

  Ansatz a;
  a.elements = {{0, 0.3}};
  const double eta = 0.1, reg = 1e-8;
  const InnerResult res = inner_qngd(a, h, pool, ref, eta, 5, reg);

  double theta = 0.3;
  const double lambda = reg;  // trace(F)/M = 1
  REQUIRE(res.energies.size() == 6);
  CHECK(res.energies[0] == doctest::Approx(std::cos(2 * theta)).epsilon(1e-12));
  for (int l = 1; l <= 5; ++l) {
    theta += eta * 2.0 * std::sin(2.0 * theta) / (1.0 + lambda);
    CHECK(res.energies[l] == doctest::Approx(std::cos(2 * theta)).epsilon(1e-10));
    CHECK(res.energies[l] < res.energies[l - 1]);  // strict descent on (0, pi/2)
  }
  CHECK(res.ansatz.elements[0].theta == doctest::Approx(theta).epsilon(1e-10));
}

TEST_CASE("inner loop on an empty ansatz repeats the reference energy") {
  const OperatorPool pool = build_pool(*h2_file().molecule());
  const StateVector ref = hf_reference(*h2_file().molecule());
  const PauliSum h = h2_file().total_hamiltonian();
  const InnerResult res = inner_qngd(Ansatz{}, h, pool, ref, 0.1, 3, 1e-8);
  REQUIRE(res.energies.size() == 4);
  for (double e : res.energies) CHECK(e == res.energies.front());
  CHECK(res.ansatz.elements.empty());
}

TEST_CASE("toy problem converges in a few outer iterations") {
  // H = -X0, pool {Y0}: E(theta) = -sin(2 theta), minimum -1 at pi/4.
  // eta = 0.25 makes the GD update a Newton step at the optimum.
  const PauliSum h = PauliSum::single(1, -1.0, PauliString::from_label("X"));
  const OperatorPool pool = single_op_pool(1, "Y");
  const StateVector ref(1);

  RunConfig cfg = base_config(Algorithm::geo_adapt);
  cfg.eta = 0.25;
  cfg.kappa = 5;
  cfg.eps = 1e-4;
  cfg.max_outer = 10;
  const RunTrace trace = run_algorithm(cfg, h, pool, ref, "toy");

  CHECK(trace.converged);
  CHECK(trace.records.size() <= 3);
  REQUIRE(!trace.records.empty());
  CHECK(trace.records.back().energy == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(trace.e_fci == doctest::Approx(-1.0).epsilon(1e-12));
  for (const auto& rec : trace.records) CHECK(rec.descent_pass);
}

TEST_CASE("stationary reference stops immediately with an empty trace") {
  // |0> is an eigenstate of Z0, so the very first stopping check fires.
  const PauliSum h = PauliSum::single(1, 1.0, PauliString::from_label("Z"));
  const OperatorPool pool = single_op_pool(1, "Y");
  const StateVector ref(1);

  for (Algorithm alg : {Algorithm::geo_adapt, Algorithm::adapt,
                        Algorithm::pos_geo_adapt, Algorithm::pos_adapt}) {
    RunConfig cfg = base_config(alg);
    const RunTrace trace = run_algorithm(cfg, h, pool, ref, "stationary");
    CHECK(trace.converged);
    CHECK(trace.stop_outer_k == 1);
    CHECK(trace.records.empty());
    CHECK(trace.final_ansatz.elements.empty());
    CHECK(trace.hf_energy == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eps = inf stops before any work") {
  RunConfig cfg = base_config(Algorithm::geo_adapt);
  cfg.eps = std::numeric_limits<double>::infinity();
  const RunTrace trace =
      run_algorithm(cfg, h2_file().total_hamiltonian(), *h2_file().molecule());
  CHECK(trace.converged);
  CHECK(trace.records.empty());
  CHECK(trace.stop_outer_k == 1);
}

TEST_CASE("gradient-only reduction: geo with identity metric and GD is adapt") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();

  RunConfig geo = base_config(Algorithm::geo_adapt);
  geo.selection_metric = SelectionMetric::identity;
  geo.inner = InnerOpt::gd;
  geo.max_outer = 8;
  RunConfig plain = base_config(Algorithm::adapt);
  plain.max_outer = 8;

  const RunTrace a = geo_adapt_run(geo, h, spec);
  const RunTrace b = adapt_vqe_run(plain, h, spec);
  // Identical trajectories, compared through the serialized trace.
  CHECK(trace_csv(a) == trace_csv(b));
  CHECK(a.final_ansatz == b.final_ansatz);
  CHECK(a.converged == b.converged);
}

TEST_CASE("positional run with max_outer = 1 reduces to the append-only run") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();

  RunConfig pos = base_config(Algorithm::pos_geo_adapt);
  pos.max_outer = 1;
  RunConfig geo = base_config(Algorithm::geo_adapt);
  geo.max_outer = 1;

  const RunTrace a = pos_geo_adapt_run(pos, h, spec);
  const RunTrace b = geo_adapt_run(geo, h, spec);
  CHECK(trace_csv(a) == trace_csv(b));
  CHECK(a.final_ansatz == b.final_ansatz);
}

TEST_CASE("run invariants on the H2 fixture") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();

  for (Algorithm alg : {Algorithm::geo_adapt, Algorithm::adapt,
                        Algorithm::pos_geo_adapt, Algorithm::pos_adapt}) {
    RunConfig cfg = base_config(alg);
    cfg.max_outer = 12;
    const RunTrace trace = run_algorithm(cfg, h, spec);
    REQUIRE(!trace.records.empty());

    int prev_total = 0;
    double prev_energy = trace.hf_energy;
    int params = 0;
    for (std::size_t t = 0; t < trace.records.size(); ++t) {
      const IterationRecord& rec = trace.records[t];
      CHECK(rec.outer_k == static_cast<int>(t) + 1);
      CHECK(rec.total_iter == prev_total + cfg.kappa);
      prev_total = rec.total_iter;

      // The inner loop starts exactly where the last iteration ended.
      REQUIRE(!rec.inner_energies.empty());
      CHECK(rec.inner_energies.front() == prev_energy);
      CHECK(rec.energy == rec.inner_energies.back());
      prev_energy = rec.energy;

      if (rec.skipped) {
        CHECK(rec.position == -1);
        CHECK(rec.n_params == params);
      } else {
        CHECK(rec.position >= 0);
        CHECK(rec.position <= params);
        params += 1;
        CHECK(rec.n_params == params);
      }
      CHECK(rec.energy_error == rec.energy - trace.e_fci);
      CHECK(rec.descent_pass);
      CHECK(rec.mu_hat >= -1e-10);
      CHECK(rec.solve_residual < 1e-8);
      // Energy stays variational.
      CHECK(rec.energy >= trace.e_fci - 1e-9);
    }
    CHECK(trace.final_ansatz.size() == static_cast<std::size_t>(params));

    // Appended ops never repeat the immediately preceding appended op: a
    // repeat selection is a skip by construction.
    if (alg == Algorithm::geo_adapt || alg == Algorithm::adapt) {
      std::optional<int> prev;
      for (std::size_t t = 0; t < trace.records.size(); ++t) {
        const IterationRecord& rec = trace.records[t];
        if (!rec.skipped) {
          if (prev.has_value()) CHECK(rec.selected_op != *prev);
          prev = rec.selected_op;
        } else if (prev.has_value()) {
          CHECK(rec.selected_op == *prev);
        }
      }
    }
  }
}

TEST_CASE("positional dominance: the best position scores at least the append slot") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();
  RunConfig cfg = base_config(Algorithm::pos_geo_adapt);
  cfg.max_outer = 10;
  const RunTrace trace = pos_geo_adapt_run(cfg, h, spec);
  REQUIRE(!trace.records.empty());
  for (const auto& rec : trace.records)
    CHECK(rec.nat_grad_max >= rec.append_score - 1e-12);
}

TEST_CASE("fixed-ansatz runs: shape and full-parameter count") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();

  for (Algorithm alg : {Algorithm::vqe_gd, Algorithm::vqe_qng_bd}) {
    RunConfig cfg = base_config(alg);
    cfg.max_outer = 6;
    const RunTrace trace = vqe_fixed_run(cfg, h, spec);
    REQUIRE(trace.records.size() == 6);  // no stopping rule
    CHECK_FALSE(trace.converged);
    for (const auto& rec : trace.records) {
      CHECK(rec.selected_op == -1);
      CHECK(rec.position == -1);
      CHECK_FALSE(rec.skipped);
      CHECK(rec.n_params == static_cast<int>(trace.pool_size));
    }
    CHECK(trace.records[0].inner_energies.front() == trace.hf_energy);
    CHECK(trace.records.back().total_iter == 6 * cfg.kappa);
    // Descent from the very first block (theta = 0 start).
    CHECK(trace.records.back().energy < trace.hf_energy);
  }

  RunConfig wrong = base_config(Algorithm::geo_adapt);
  CHECK_THROWS_AS((void)vqe_fixed_run(wrong, h, spec), ValidationError);
}

TEST_CASE("trace energies descend monotonically at a conservative step size") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();
  for (Algorithm alg : {Algorithm::geo_adapt, Algorithm::adapt, Algorithm::pos_geo_adapt,
                        Algorithm::pos_adapt, Algorithm::vqe_gd, Algorithm::vqe_qng_bd}) {
    RunConfig cfg = base_config(alg);
    cfg.eta = 1e-2;
    cfg.max_outer = 6;
    const RunTrace trace = run_algorithm(cfg, h, spec);
    double prev = trace.hf_energy;
    for (const auto& rec : trace.records) {
      CHECK(rec.energy <= prev + 1e-9);
      prev = rec.energy;
    }
  }
}

TEST_CASE("descent_check validates a finished run from its snapshots") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();
  const OperatorPool pool = build_pool(spec);
  const StateVector ref = hf_reference(spec);

  for (Algorithm alg : {Algorithm::geo_adapt, Algorithm::pos_geo_adapt}) {
    RunConfig cfg = base_config(alg);
    cfg.eta = 1e-2;
    cfg.max_outer = 8;
    const RunTrace trace = run_algorithm(cfg, h, spec);
    const DescentReport report = descent_check(trace, h, pool, ref);
    REQUIRE(report.iterations.size() == trace.records.size());
    CHECK(report.all_pass());
    CHECK(report.min_ratio > 0.0);
  }

  // An absurd step size may violate descent; the check must report rather
  // than throw.
  RunConfig wild = base_config(Algorithm::geo_adapt);
  wild.eta = 10.0;
  wild.max_outer = 4;
  wild.eps = 0.0;
  const RunTrace trace = run_algorithm(wild, h, spec);
  const DescentReport report = descent_check(trace, h, pool, ref);
  CHECK(report.iterations.size() == trace.records.size());
}

TEST_CASE("library-level determinism: identical runs serialize identically") {
  const PauliSum h = h2_file().total_hamiltonian();
  const MoleculeSpec spec = *h2_file().molecule();
  RunConfig cfg = base_config(Algorithm::pos_geo_adapt);
  cfg.max_outer = 6;
  const RunTrace a = run_algorithm(cfg, h, spec);
  const RunTrace b = run_algorithm(cfg, h, spec);
  CHECK(trace_csv(a) == trace_csv(b));
  CHECK(a.final_ansatz == b.final_ansatz);
}

TEST_CASE("recursion bound: zero perturbations give exact geometric decay") {
  const RecursionBoundResult r =
      recursion_bound_check(0.8, 0.5, std::vector<double>{}, 40);
  CHECK(r.bound_holds);
  CHECK(r.final_tail == 0.0);
  double want = 0.8;
  for (int k = 0; k < 40; ++k) want *= 0.5;
  CHECK(r.final_delta == want);
}

TEST_CASE("recursion bound: geometric perturbations hit the bound at equality") {
  // rho = 1/2, delta_m = 2^-m: Delta_k = 2^-k (Delta_0 + k/1... ) — the tail
  // R_k = sum_{m=1..k} rho^{k-m} delta_m = k 2^-k, so Delta_k = (1 + k) 2^-k
  // exactly when Delta_0 = 1, and both sides of the bound coincide.
  std::vector<double> deltas(50);
  for (int m = 0; m < 50; ++m) deltas[m] = std::pow(0.5, m + 1);
  const RecursionBoundResult r = recursion_bound_check(1.0, 0.5, deltas, 50);
  CHECK(r.bound_holds);
  CHECK(r.final_tail == doctest::Approx(50.0 * std::pow(0.5, 50)).epsilon(1e-12));
  CHECK(r.final_delta ==
        doctest::Approx((1.0 + 50.0) * std::pow(0.5, 50)).epsilon(1e-12));
  // Vanishing-perturbation limit: the tail itself goes to zero.
  CHECK(r.final_tail < 1e-8);

  // Delta_0 = 0 leaves exactly the tail.
  const RecursionBoundResult r0 = recursion_bound_check(0.0, 0.5, deltas, 50);
  CHECK(r0.bound_holds);
  CHECK(r0.final_delta == doctest::Approx(r0.final_tail).epsilon(1e-12));
}

TEST_CASE("recursion bound: randomized configurations always hold") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> rho_dist(0.0, 0.95);
  std::uniform_real_distribution<double> d0(0.0, 2.0);
  std::exponential_distribution<double> mag(4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double rho = rho_dist(rng);
    std::vector<double> deltas(static_cast<std::size_t>(rng() % 30));
    for (auto& d : deltas) d = mag(rng);
    const int k_max = 1 + static_cast<int>(rng() % 60);
    const RecursionBoundResult r = recursion_bound_check(d0(rng), rho, deltas, k_max);
    CHECK(r.bound_holds);
    CHECK(r.final_delta >= 0.0);
    CHECK(r.final_tail >= 0.0);
  }
}

TEST_CASE("recursion bound rejects invalid parameters") {
  CHECK_THROWS_AS((void)recursion_bound_check(1.0, 1.0, std::vector<double>{}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)recursion_bound_check(1.0, -0.1, std::vector<double>{}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)recursion_bound_check(-1.0, 0.5, std::vector<double>{}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)recursion_bound_check(1.0, 0.5, std::vector<double>{-0.1}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)recursion_bound_check(1.0, 0.5, std::vector<double>{}, 0),
                  std::invalid_argument);
}

TEST_CASE("config validation and algorithm names") {
  RunConfig cfg;
  cfg.eta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = RunConfig{};
  cfg.kappa = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = RunConfig{};
  cfg.eps = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = RunConfig{};
  cfg.max_outer = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = RunConfig{};
  cfg.reg = -1e-9;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  RunConfig{}.validate();

  for (const char* name : {"geo_adapt", "adapt", "pos_geo_adapt", "pos_adapt", "vqe_gd",
                           "vqe_qng_bd"}) {
    const auto alg = algorithm_from_name(name);
    REQUIRE(alg.has_value());
    CHECK(algorithm_name(*alg) == std::string(name));
  }
  CHECK_FALSE(algorithm_from_name("does_not_exist").has_value());
}

TEST_CASE("run rejects inconsistent inputs") {
  const PauliSum h = h2_file().total_hamiltonian();
  RunConfig cfg = base_config(Algorithm::geo_adapt);

  MoleculeSpec wrong{6, 2, "wrong"};
  CHECK_THROWS_AS((void)run_algorithm(cfg, h, wrong), ValidationError);

  MoleculeSpec no_pool{4, 4, "full"};
  CHECK_THROWS_AS((void)run_algorithm(cfg, h, no_pool), ValidationError);

  const OperatorPool pool = single_op_pool(2, "XY");
  CHECK_THROWS_AS((void)run_algorithm(cfg, h, pool, StateVector(2), "bad"),
                  ValidationError);
  CHECK_THROWS_AS(
      (void)run_algorithm(cfg, PauliSum::single(2, 1.0, PauliString::from_label("ZI")),
                          pool, StateVector(3), "bad"),
      ValidationError);
}

}  // TEST_SUITE
