#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geovqe/circuit.hpp"
#include "geovqe/fermion.hpp"
#include "geovqe/geometry.hpp"
#include "geovqe/pauli.hpp"

namespace geovqe {

enum class Algorithm {
  geo_adapt,      // metric-aware selection, QNGD inner loop
  adapt,          // gradient-only selection (identity metric), GD inner loop
  pos_geo_adapt,  // geo_adapt with position-resolved selection/insertion
  pos_adapt,      // adapt with position-resolved selection/insertion
  vqe_gd,         // fixed UCCSD ansatz, plain gradient descent
  vqe_qng_bd,     // fixed UCCSD ansatz, block-diagonal QNGD
};

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Inner-loop optimizer override; by_algorithm picks QNGD for geo variants
/// and GD for the gradient-only ones.
enum class InnerOpt { by_algorithm, gd, qngd };

/// Selection-metric override; by_algorithm picks the pool covariance for geo
/// variants and the identity for the gradient-only ones.
enum class SelectionMetric { by_algorithm, pool, identity };

struct RunConfig {
  Algorithm algorithm = Algorithm::geo_adapt;
  double eta = 0.1;
  int kappa = 5;
  double eps = 1e-4;
  int max_outer = 20;
  double reg = 1e-8;
  std::uint64_t seed = 0;
  InnerOpt inner = InnerOpt::by_algorithm;
  SelectionMetric selection_metric = SelectionMetric::by_algorithm;
  PoolOptions pool;

  void validate() const;  // throws ValidationError
};

/// One outer iteration of any run.  The first fourteen fields are the CSV
/// columns, in order; the rest are extra diagnostics kept for the summary and
/// for post-hoc verification.
struct IterationRecord {
  int outer_k = 0;
  int total_iter = 0;     // cumulative inner steps
  double energy = 0.0;    // E^(k), after the inner loop
  double energy_error = 0.0;
  int selected_op = -1;   // pool index; -1 for fixed-ansatz runs
  int position = -1;      // insertion index; -1 if skipped or fixed
  bool skipped = false;
  double nat_grad_max = 0.0;
  double fnorm = 0.0;
  double mu_hat = 0.0;
  double lambda_hat = 0.0;
  double rho_hat = 0.0;
  int n_params = 0;
  bool descent_pass = true;

  double solve_residual = 0.0;
  double g_selected = 0.0;       // selection gradient at the chosen coordinate
  double f_selected_diag = 0.0;  // metric diagonal at the chosen coordinate
  double delta_slack = 0.0;      // max(0, E^(k) - min inner energy)
  double append_score = 0.0;     // positional runs: best |x_j| at the append slot
  std::vector<double> inner_energies;     // kappa + 1 values, start included
  std::vector<AnsatzElement> ansatz_after;
};

struct RunTrace {
  RunConfig config;
  std::string hamiltonian_label;
  int n_qubits = 0;
  int n_electrons = 0;
  int pool_size = 0;
  double e_fci = 0.0;
  double hf_energy = 0.0;
  std::vector<IterationRecord> records;
  Ansatz final_ansatz;
  bool converged = false;  // stopping rule fired before max_outer
  int stop_outer_k = 0;
  /// Pool-gradient diagnostics evaluated on the final state.
  double final_fnorm = std::numeric_limits<double>::quiet_NaN();
  double final_nat_grad_max = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
};

/// argmax_j |values_j| with ties broken by the lowest index; `skipped` is true
/// iff the winner equals prev_index (re-optimize without growing the ansatz).
/// All-zero input is a logic error: the stopping rule must fire first.
std::pair<int, bool> select_operator(const Eigen::VectorXd& values,
                                     std::optional<int> prev_index);

enum class InnerMetric { full, block_diag, identity };

struct InnerResult {
  Ansatz ansatz;
  /// kappa + 1 energies: the starting energy, then one per update.
  std::vector<double> energies;
};

/// kappa natural-gradient updates theta -= eta * (F + lambda I)^{-1} grad on
/// all parameters, with the same Tikhonov policy as natural_gradient.  The
/// identity mode takes the plain GD step theta -= eta * grad (no solve).
/// block_diag defaults to singleton blocks when `blocks` is null.
InnerResult inner_qngd(const Ansatz& ansatz, const PauliSum& h, const OperatorPool& pool,
                       const StateVector& ref, double eta, int kappa, double reg,
                       InnerMetric metric = InnerMetric::full,
                       const std::vector<std::vector<int>>* blocks = nullptr);

/// Plain gradient descent; identical to inner_qngd with the identity metric.
InnerResult inner_gd(const Ansatz& ansatz, const PauliSum& h, const OperatorPool& pool,
                     const StateVector& ref, double eta, int kappa);

RunTrace geo_adapt_run(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);
RunTrace adapt_vqe_run(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);
RunTrace pos_geo_adapt_run(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);
RunTrace pos_adapt_run(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);
RunTrace vqe_fixed_run(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);

/// Dispatch on config.algorithm.  The MoleculeSpec form builds the
/// spin-conserving pool and HF reference; the explicit form runs on any pool
/// and reference state (fixed-ansatz runs then use one parameter per pool
/// operator).
RunTrace run_algorithm(const RunConfig& config, const PauliSum& h, const MoleculeSpec& spec);
RunTrace run_algorithm(const RunConfig& config, const PauliSum& h,
                       const OperatorPool& pool, const StateVector& ref,
                       std::string_view label = {});

struct DescentIterationCheck {
  bool trial_pass = true;  // phi^(k)(beta e_sel) <= E^(k-1) + 1e-10
  bool inner_pass = true;  // E^(k) <= E^(k-1) + delta_slack + 1e-10
  double ratio = std::numeric_limits<double>::quiet_NaN();
};

struct DescentReport {
  std::vector<DescentIterationCheck> iterations;
  /// min over non-skipped iterations of (E^(k-1) - phi^(k)) / x_sel^2, an
  /// empirical proxy for rho^2 mu / (2 L).
  double min_ratio = std::numeric_limits<double>::quiet_NaN();

  bool all_pass() const;
};

/// Re-verifies the per-iteration descent inequalities from the trace's
/// recorded snapshots (trial coordinate step and inner-loop slack bound).
DescentReport descent_check(const RunTrace& trace, const PauliSum& h,
                            const OperatorPool& pool, const StateVector& ref);

struct RecursionBoundResult {
  bool bound_holds = false;  // Delta_k <= rho^k Delta_0 + R_k for all k
  double final_delta = 0.0;
  double final_tail = 0.0;   // R_{k_max} = sum_m rho^(k-m) delta_m
};

/// Simulates Delta_{k+1} = rho Delta_k + delta_{k+1} at equality and checks it
/// against the independently summed geometric bound.  Deltas beyond the span
/// of `deltas` are treated as zero.
RecursionBoundResult recursion_bound_check(double delta0, double rho,
                                           std::span<const double> deltas, int k_max);

}  // namespace geovqe
