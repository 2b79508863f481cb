#include "geovqe/adapt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "geovqe/eigensolver.hpp"
#include "geovqe/errors.hpp"

namespace geovqe {

namespace {

constexpr double kDescentTol = 1e-10;

struct Modes {
  bool positional = false;
  bool fixed = false;
  SelectionMetric selection = SelectionMetric::pool;
  InnerMetric inner = InnerMetric::full;
};

Modes resolve_modes(const RunConfig& cfg) {
  Modes m;
  switch (cfg.algorithm) {
    case Algorithm::geo_adapt:
      m = {false, false, SelectionMetric::pool, InnerMetric::full};
      break;
    case Algorithm::adapt:
      m = {false, false, SelectionMetric::identity, InnerMetric::identity};
      break;
    case Algorithm::pos_geo_adapt:
      m = {true, false, SelectionMetric::pool, InnerMetric::full};
      break;
    case Algorithm::pos_adapt:
      m = {true, false, SelectionMetric::identity, InnerMetric::identity};
      break;
    case Algorithm::vqe_gd:
      m = {false, true, SelectionMetric::identity, InnerMetric::identity};
      break;
    case Algorithm::vqe_qng_bd:
      m = {false, true, SelectionMetric::identity, InnerMetric::block_diag};
      break;
  }
  if (cfg.selection_metric != SelectionMetric::by_algorithm)
    m.selection = cfg.selection_metric;
  if (cfg.inner == InnerOpt::gd)
    m.inner = InnerMetric::identity;
  else if (cfg.inner == InnerOpt::qngd)
    m.inner = cfg.algorithm == Algorithm::vqe_qng_bd ? InnerMetric::block_diag
                                                     : InnerMetric::full;
  return m;
}

PoolMetric selection_metric_matrix(SelectionMetric mode, const OperatorPool& pool,
                                   const StateVector& state) {
  if (mode == SelectionMetric::pool) return pool_metric(pool, state);
  PoolMetric f;
  f.matrix = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(pool.size()),
                                       static_cast<Eigen::Index>(pool.size()));
  return f;
}

InnerResult run_inner(InnerMetric mode, const Ansatz& ansatz, const PauliSum& h,
                      const OperatorPool& pool, const StateVector& ref,
                      const RunConfig& cfg) {
  if (mode == InnerMetric::identity)
    return inner_gd(ansatz, h, pool, ref, cfg.eta, cfg.kappa);
  return inner_qngd(ansatz, h, pool, ref, cfg.eta, cfg.kappa, cfg.reg, mode);
}

double min_of(const std::vector<double>& xs) {
  return *std::min_element(xs.begin(), xs.end());
}

struct RunContext {
  const PauliSum& h;
  const OperatorPool& pool;
  const StateVector& ref;
  const RunConfig& cfg;
  double e_fci;
};

/// Fills the post-inner-loop part of a record: energies, slack, and the
/// inner-loop descent inequality E^(k) <= E^(k-1) + delta_slack.
void finish_record(IterationRecord& rec, const InnerResult& inner, double prev_energy,
                   const RunContext& ctx, const Ansatz& ansatz, bool trial_pass) {
  rec.energy = inner.energies.back();
  rec.energy_error = rec.energy - ctx.e_fci;
  rec.inner_energies = inner.energies;
  rec.delta_slack = std::max(0.0, rec.energy - min_of(inner.energies));
  const bool inner_pass = rec.energy <= prev_energy + rec.delta_slack + kDescentTol;
  rec.descent_pass = trial_pass && inner_pass;
  rec.n_params = static_cast<int>(ansatz.size());
  rec.ansatz_after = ansatz.elements;
}

void final_diagnostics(RunTrace& trace, const RunContext& ctx, const Ansatz& ansatz,
                       SelectionMetric selection) {
  const StateVector psi = prepare_state(ansatz, ctx.pool, ctx.ref);
  const PoolGradient g = pool_gradient(ctx.h, ctx.pool, psi);
  const PoolMetric f = selection_metric_matrix(selection, ctx.pool, psi);
  const NaturalGradient nat = natural_gradient(f, g, ctx.cfg.reg);
  trace.final_nat_grad_max = nat.values.cwiseAbs().maxCoeff();
  trace.final_fnorm = nat.fnorm;
}

struct TraceMeta {
  std::string label;
  int n_electrons = 0;
};

RunTrace start_trace(const RunContext& ctx, const TraceMeta& meta) {
  RunTrace trace;
  trace.config = ctx.cfg;
  trace.hamiltonian_label = meta.label;
  trace.n_qubits = ctx.h.n_qubits();
  trace.n_electrons = meta.n_electrons;
  trace.pool_size = static_cast<int>(ctx.pool.size());
  trace.e_fci = ctx.e_fci;
  trace.hf_energy = expectation(ctx.h, ctx.ref);
  return trace;
}

RunTrace run_adaptive(const RunConfig& cfg, const PauliSum& h, const OperatorPool& pool,
                      const StateVector& ref, const TraceMeta& meta, const Modes& modes) {
  const auto t_start = std::chrono::steady_clock::now();
  const RunContext ctx{h, pool, ref, cfg, reference_ground_energy(h, cfg.seed).energy};
  RunTrace trace = start_trace(ctx, meta);

  Ansatz ansatz;
  std::optional<int> prev_appended;
  double prev_energy = trace.hf_energy;
  int total_inner = 0;

  for (int k = 1; k <= cfg.max_outer; ++k) {
    const StateVector psi = prepare_state(ansatz, pool, ref);
    IterationRecord rec;
    rec.outer_k = k;

    int sel = -1;
    int position = -1;
    bool skipped = false;
    double trial_phi = 0.0;
    bool trial_pass = true;
    const Ansatz before = ansatz;

    if (!modes.positional) {
      const PoolGradient g = pool_gradient(h, pool, psi);
      const PoolMetric f = selection_metric_matrix(modes.selection, pool, psi);
      const NaturalGradient nat = natural_gradient(f, g, cfg.reg);
      if (fnorm_stopping(nat, cfg.eps)) {
        trace.converged = true;
        trace.stop_outer_k = k;
        break;
      }
      std::tie(sel, skipped) = select_operator(nat.values, prev_appended);
      rec.g_selected = g.values(sel);
      rec.f_selected_diag = f.matrix(sel, sel);
      rec.nat_grad_max = std::abs(nat.values(sel));
      rec.append_score = rec.nat_grad_max;
      rec.fnorm = nat.fnorm;
      rec.solve_residual = nat.solve_residual;
      const SpectralDiagnostics sd = spectral_diagnostics(f, sel);
      rec.mu_hat = sd.mu_hat;
      rec.lambda_hat = sd.lambda_hat;
      rec.rho_hat = sd.rho_hat;
      if (!skipped) {
        position = static_cast<int>(ansatz.size());
        ansatz.elements.push_back({sel, 0.0});
        prev_appended = sel;
      }
    } else {
      // chi_p = U_{<=p}|ref>, xi_p = U_{>p}^dag H|psi>; scan all insertion
      // slots p = 0..len and all pool indices jointly.
      const std::size_t len = ansatz.size();
      std::vector<StateVector> chi;
      chi.reserve(len + 1);
      chi.push_back(ref);
      for (std::size_t t = 0; t < len; ++t)
        chi.push_back(apply_exp_generator(chi.back(), pool.op(static_cast<std::size_t>(
                                                          ansatz.elements[t].pool_index)),
                                          ansatz.elements[t].theta));
      std::vector<StateVector> xi(len + 1, StateVector());
      xi[len] = apply_pauli_sum(h, psi);
      for (std::size_t p = len; p-- > 0;)
        xi[p] = apply_exp_generator(xi[p + 1],
                                    pool.op(static_cast<std::size_t>(
                                        ansatz.elements[p].pool_index)),
                                    -ansatz.elements[p].theta);

      int best_p = -1, best_i = -1;
      double best_score = -1.0;
      NaturalGradient best_nat;
      PoolMetric best_metric;
      double best_g = 0.0, best_fdiag = 0.0, append_best = 0.0;
      for (std::size_t p = 0; p <= len; ++p) {
        const PoolGradient g = pool_gradient(xi[p], pool, chi[p]);
        const PoolMetric f = selection_metric_matrix(modes.selection, pool, chi[p]);
        const NaturalGradient nat = natural_gradient(f, g, cfg.reg);
        for (Eigen::Index i = 0; i < nat.values.size(); ++i) {
          const double score = std::abs(nat.values(i));
          if (p == len) append_best = std::max(append_best, score);
          if (score > best_score) {
            best_score = score;
            best_p = static_cast<int>(p);
            best_i = static_cast<int>(i);
            best_nat = nat;
            best_metric = f;
            best_g = g.values(i);
            best_fdiag = f.matrix(i, i);
          }
        }
      }
      if (fnorm_stopping(best_nat, cfg.eps)) {
        trace.converged = true;
        trace.stop_outer_k = k;
        break;
      }
      if (best_score <= 0.0)
        throw std::logic_error(
            "positional selection: all-zero scores; stopping rule should have fired");
      sel = best_i;
      skipped = best_p == static_cast<int>(len) && len > 0 &&
                ansatz.elements.back().pool_index == sel;
      rec.g_selected = best_g;
      rec.f_selected_diag = best_fdiag;
      rec.nat_grad_max = best_score;
      rec.append_score = append_best;
      rec.fnorm = best_nat.fnorm;
      rec.solve_residual = best_nat.solve_residual;
      const SpectralDiagnostics sd = spectral_diagnostics(best_metric, sel);
      rec.mu_hat = sd.mu_hat;
      rec.lambda_hat = sd.lambda_hat;
      rec.rho_hat = sd.rho_hat;
      if (!skipped) {
        position = best_p;
        ansatz.elements.insert(ansatz.elements.begin() + best_p, {sel, 0.0});
      }
    }

    rec.selected_op = sel;
    rec.position = position;
    rec.skipped = skipped;

    // Lemma-style trial step along the selected coordinate, taken from the
    // pre-insertion state: beta = -eta * g / F_jj.
    if (!skipped) {
      const double beta = std::abs(rec.f_selected_diag) <= 1e-14
                              ? 0.0
                              : -cfg.eta * rec.g_selected / rec.f_selected_diag;
      const std::size_t trial_pos =
          position >= 0 ? static_cast<std::size_t>(position) : before.size();
      trial_phi = inserted_trial_energy(h, before, pool, ref,
                                        pool.op(static_cast<std::size_t>(sel)), beta,
                                        trial_pos);
      trial_pass = trial_phi <= prev_energy + kDescentTol;
    }

    const InnerResult inner = run_inner(modes.inner, ansatz, h, pool, ref, cfg);
    ansatz = inner.ansatz;
    total_inner += cfg.kappa;
    rec.total_iter = total_inner;
    finish_record(rec, inner, prev_energy, ctx, ansatz, trial_pass);
    prev_energy = rec.energy;
    trace.records.push_back(std::move(rec));
  }

  trace.final_ansatz = ansatz;
  final_diagnostics(trace, ctx, ansatz, modes.selection);
  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return trace;
}

RunTrace run_fixed(const RunConfig& cfg, const PauliSum& h, const OperatorPool& pool,
                   const StateVector& ref, const TraceMeta& meta, const Modes& modes) {
  const auto t_start = std::chrono::steady_clock::now();
  const RunContext ctx{h, pool, ref, cfg, reference_ground_energy(h, cfg.seed).energy};
  RunTrace trace = start_trace(ctx, meta);

  // One parameter per pool operator, all starting at zero.
  Ansatz ansatz;
  ansatz.elements.reserve(pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j)
    ansatz.elements.push_back({static_cast<int>(j), 0.0});
  double prev_energy = trace.hf_energy;
  int total_inner = 0;

  for (int k = 1; k <= cfg.max_outer; ++k) {
    IterationRecord rec;
    rec.outer_k = k;
    const InnerResult inner = run_inner(modes.inner, ansatz, h, pool, ref, cfg);
    ansatz = inner.ansatz;
    total_inner += cfg.kappa;
    rec.total_iter = total_inner;

    // Parameter-space gradient diagnostics at the end of the block.
    const TangentFrame frame = tangent_frame(ansatz, pool, ref);
    std::vector<double> gv = energy_gradient(h, frame);
    PoolGradient pg;
    pg.values = Eigen::Map<const Eigen::VectorXd>(gv.data(),
                                                  static_cast<Eigen::Index>(gv.size()));
    PoolMetric pm;
    if (modes.inner == InnerMetric::identity) {
      pm.matrix = Eigen::MatrixXd::Identity(pg.values.size(), pg.values.size());
    } else {
      pm.matrix = ansatz_metric(frame);
      if (modes.inner == InnerMetric::block_diag) {
        std::vector<std::vector<int>> singles(ansatz.size());
        for (std::size_t i = 0; i < ansatz.size(); ++i)
          singles[i] = {static_cast<int>(i)};
        pm.matrix = block_diag_metric(pm.matrix, singles);
      }
    }
    const NaturalGradient nat = natural_gradient(pm, pg, cfg.reg);
    Eigen::Index arg = 0;
    nat.values.cwiseAbs().maxCoeff(&arg);
    rec.nat_grad_max = std::abs(nat.values(arg));
    rec.fnorm = nat.fnorm;
    rec.solve_residual = nat.solve_residual;
    const SpectralDiagnostics sd = spectral_diagnostics(pm, static_cast<int>(arg));
    rec.mu_hat = sd.mu_hat;
    rec.lambda_hat = sd.lambda_hat;
    rec.rho_hat = sd.rho_hat;

    finish_record(rec, inner, prev_energy, ctx, ansatz, /*trial_pass=*/true);
    prev_energy = rec.energy;
    trace.records.push_back(std::move(rec));
  }

  trace.final_ansatz = ansatz;
  final_diagnostics(trace, ctx, ansatz, SelectionMetric::pool);
  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return trace;
}

RunTrace run_on_pool(RunConfig cfg, const PauliSum& h, const OperatorPool& pool,
                     const StateVector& ref, const TraceMeta& meta) {
  cfg.validate();
  if (!h.is_hermitian())
    throw ValidationError("run: Hamiltonian must be Hermitian");
  if (pool.size() == 0) throw ValidationError("run: operator pool is empty");
  if (pool.n_qubits != h.n_qubits())
    throw ValidationError("run: pool qubit count != Hamiltonian qubit count");
  if (ref.n_qubits() != h.n_qubits())
    throw ValidationError("run: reference qubit count != Hamiltonian qubit count");
  const Modes modes = resolve_modes(cfg);
  return modes.fixed ? run_fixed(cfg, h, pool, ref, meta, modes)
                     : run_adaptive(cfg, h, pool, ref, meta, modes);
}

RunTrace run_checked(RunConfig cfg, Algorithm forced, const PauliSum& h,
                     const MoleculeSpec& spec) {
  cfg.algorithm = forced;
  spec.validate();
  if (h.n_qubits() != spec.n_spin_orbitals)
    throw ValidationError("run: Hamiltonian qubit count != molecule spin-orbital count");
  return run_on_pool(cfg, h, build_pool(spec, cfg.pool), hf_reference(spec),
                     {spec.label, spec.n_electrons});
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::geo_adapt: return "geo_adapt";
    case Algorithm::adapt: return "adapt";
    case Algorithm::pos_geo_adapt: return "pos_geo_adapt";
    case Algorithm::pos_adapt: return "pos_adapt";
    case Algorithm::vqe_gd: return "vqe_gd";
    case Algorithm::vqe_qng_bd: return "vqe_qng_bd";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : {Algorithm::geo_adapt, Algorithm::adapt, Algorithm::pos_geo_adapt,
                      Algorithm::pos_adapt, Algorithm::vqe_gd, Algorithm::vqe_qng_bd})
    if (name == algorithm_name(a)) return a;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (!(eta > 0.0)) throw ValidationError("config: eta must be > 0");
  if (kappa < 1) throw ValidationError("config: kappa must be >= 1");
  if (!(eps >= 0.0)) throw ValidationError("config: eps must be >= 0");
  if (max_outer < 1) throw ValidationError("config: max_outer must be >= 1");
  if (!(reg >= 0.0)) throw ValidationError("config: reg must be >= 0");
}

std::pair<int, bool> select_operator(const Eigen::VectorXd& values,
                                     std::optional<int> prev_index) {
  if (values.size() == 0)
    throw std::invalid_argument("select_operator: empty score vector");
  int best = -1;
  double best_score = 0.0;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const double score = std::abs(values(j));
    if (score > best_score) {  // strict: ties keep the lowest index
      best_score = score;
      best = static_cast<int>(j);
    }
  }
  if (best < 0)
    throw std::logic_error(
        "select_operator: all scores are zero; the stopping rule should have fired");
  return {best, prev_index.has_value() && *prev_index == best};
}

InnerResult inner_qngd(const Ansatz& ansatz, const PauliSum& h, const OperatorPool& pool,
                       const StateVector& ref, double eta, int kappa, double reg,
                       InnerMetric metric, const std::vector<std::vector<int>>* blocks) {
  if (kappa < 1) throw std::invalid_argument("inner_qngd: kappa must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("inner_qngd: eta must be > 0");

  InnerResult out;
  out.ansatz = ansatz;
  out.energies.reserve(static_cast<std::size_t>(kappa) + 1);
  out.energies.push_back(expectation(h, prepare_state(out.ansatz, pool, ref)));

  const std::size_t k = out.ansatz.size();
  if (k == 0) {
    out.energies.insert(out.energies.end(), static_cast<std::size_t>(kappa),
                        out.energies.front());
    return out;
  }

  std::vector<std::vector<int>> singleton;
  if (metric == InnerMetric::block_diag && blocks == nullptr) {
    singleton.resize(k);
    for (std::size_t i = 0; i < k; ++i) singleton[i] = {static_cast<int>(i)};
    blocks = &singleton;
  }

  for (int l = 0; l < kappa; ++l) {
    if (metric == InnerMetric::identity) {
      const std::vector<double> g = energy_gradient(h, out.ansatz, pool, ref);
      for (std::size_t i = 0; i < k; ++i) out.ansatz.elements[i].theta -= eta * g[i];
    } else {
      const TangentFrame frame = tangent_frame(out.ansatz, pool, ref);
      PoolMetric pm;
      pm.matrix = ansatz_metric(frame);
      if (metric == InnerMetric::block_diag)
        pm.matrix = block_diag_metric(pm.matrix, *blocks);
      std::vector<double> gv = energy_gradient(h, frame);
      PoolGradient pg;
      pg.values = Eigen::Map<const Eigen::VectorXd>(
          gv.data(), static_cast<Eigen::Index>(gv.size()));
      const NaturalGradient nat = natural_gradient(pm, pg, reg);
      for (std::size_t i = 0; i < k; ++i)
        out.ansatz.elements[i].theta -= eta * nat.values(static_cast<Eigen::Index>(i));
    }
    out.energies.push_back(expectation(h, prepare_state(out.ansatz, pool, ref)));
  }
  return out;
}

InnerResult inner_gd(const Ansatz& ansatz, const PauliSum& h, const OperatorPool& pool,
                     const StateVector& ref, double eta, int kappa) {
  return inner_qngd(ansatz, h, pool, ref, eta, kappa, 0.0, InnerMetric::identity);
}

RunTrace geo_adapt_run(const RunConfig& config, const PauliSum& h,
                       const MoleculeSpec& spec) {
  return run_checked(config, Algorithm::geo_adapt, h, spec);
}

RunTrace adapt_vqe_run(const RunConfig& config, const PauliSum& h,
                       const MoleculeSpec& spec) {
  return run_checked(config, Algorithm::adapt, h, spec);
}

RunTrace pos_geo_adapt_run(const RunConfig& config, const PauliSum& h,
                           const MoleculeSpec& spec) {
  return run_checked(config, Algorithm::pos_geo_adapt, h, spec);
}

RunTrace pos_adapt_run(const RunConfig& config, const PauliSum& h,
                       const MoleculeSpec& spec) {
  return run_checked(config, Algorithm::pos_adapt, h, spec);
}

RunTrace vqe_fixed_run(const RunConfig& config, const PauliSum& h,
                       const MoleculeSpec& spec) {
  if (config.algorithm != Algorithm::vqe_gd && config.algorithm != Algorithm::vqe_qng_bd)
    throw ValidationError("vqe_fixed_run: algorithm must be vqe_gd or vqe_qng_bd");
  return run_checked(config, config.algorithm, h, spec);
}

RunTrace run_algorithm(const RunConfig& config, const PauliSum& h,
                       const MoleculeSpec& spec) {
  return run_checked(config, config.algorithm, h, spec);
}

RunTrace run_algorithm(const RunConfig& config, const PauliSum& h,
                       const OperatorPool& pool, const StateVector& ref,
                       std::string_view label) {
  return run_on_pool(config, h, pool, ref, {std::string(label), 0});
}

bool DescentReport::all_pass() const {
  for (const auto& it : iterations)
    if (!it.trial_pass || !it.inner_pass) return false;
  return true;
}

DescentReport descent_check(const RunTrace& trace, const PauliSum& h,
                            const OperatorPool& pool, const StateVector& ref) {
  DescentReport report;
  report.iterations.reserve(trace.records.size());
  double prev_energy = trace.hf_energy;
  Ansatz prev_ansatz;

  for (const auto& rec : trace.records) {
    DescentIterationCheck check;
    if (rec.selected_op >= 0 && !rec.skipped) {
      const double beta = std::abs(rec.f_selected_diag) <= 1e-14
                              ? 0.0
                              : -trace.config.eta * rec.g_selected / rec.f_selected_diag;
      const std::size_t pos = rec.position >= 0 ? static_cast<std::size_t>(rec.position)
                                                : prev_ansatz.size();
      const double phi = inserted_trial_energy(
          h, prev_ansatz, pool, ref, pool.op(static_cast<std::size_t>(rec.selected_op)),
          beta, pos);
      check.trial_pass = phi <= prev_energy + kDescentTol;
      const double x2 = rec.nat_grad_max * rec.nat_grad_max;
      if (x2 > 1e-30) check.ratio = (prev_energy - phi) / x2;
    }
    const double slack =
        rec.inner_energies.empty()
            ? rec.delta_slack
            : std::max(0.0, rec.energy - min_of(rec.inner_energies));
    check.inner_pass = rec.energy <= prev_energy + slack + kDescentTol;
    report.iterations.push_back(check);

    prev_energy = rec.energy;
    prev_ansatz.elements = rec.ansatz_after;
  }

  for (const auto& it : report.iterations)
    if (std::isfinite(it.ratio) &&
        (!std::isfinite(report.min_ratio) || it.ratio < report.min_ratio))
      report.min_ratio = it.ratio;
  return report;
}

RecursionBoundResult recursion_bound_check(double delta0, double rho,
                                           std::span<const double> deltas, int k_max) {
  if (!(delta0 >= 0.0))
    throw std::invalid_argument("recursion_bound_check: delta0 must be >= 0");
  if (!(rho >= 0.0) || rho >= 1.0)
    throw std::invalid_argument("recursion_bound_check: rho must be in [0, 1)");
  if (k_max < 1) throw std::invalid_argument("recursion_bound_check: k_max must be >= 1");
  for (double d : deltas)
    if (!(d >= 0.0))
      throw std::invalid_argument("recursion_bound_check: deltas must be >= 0");

  RecursionBoundResult result;
  result.bound_holds = true;
  double delta = delta0;        // exact recursion Delta_{k+1} = rho Delta_k + delta_{k+1}
  double decayed_init = delta0; // rho^k * Delta_0, same multiplication order
  for (int k = 1; k <= k_max; ++k) {
    const double perturb =
        static_cast<std::size_t>(k - 1) < deltas.size() ? deltas[k - 1] : 0.0;
    delta = rho * delta + perturb;
    decayed_init *= rho;

    double tail = 0.0;  // independent direct sum: sum_m rho^(k-m) delta_m
    for (int m = 1; m <= k && static_cast<std::size_t>(m - 1) < deltas.size(); ++m)
      tail += std::pow(rho, k - m) * deltas[m - 1];

    const double bound = decayed_init + tail;
    if (delta > bound + 1e-12 * std::max(1.0, std::abs(bound)))
      result.bound_holds = false;
    result.final_delta = delta;
    result.final_tail = tail;
  }
  return result;
}

}  // namespace geovqe
