// geovqe: adaptive variational ground-state solver.
//
// Subcommands: run, fci, pool, plot, sweep, validate.
// Exit codes: 0 ok, 2 validation error, 3 convergence error, 4 I/O error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "geovqe/adapt.hpp"
#include "geovqe/eigensolver.hpp"
#include "geovqe/errors.hpp"
#include "geovqe/fixtures.hpp"
#include "geovqe/hamiltonian_file.hpp"
#include "geovqe/plot.hpp"
#include "geovqe/run_config.hpp"
#include "geovqe/text.hpp"
#include "geovqe/trace_io.hpp"

namespace fs = std::filesystem;
using namespace geovqe;

namespace {

struct CliOverrides {
  std::string config_path;
  std::string hamiltonian;
  std::string out_dir;
  std::optional<std::string> algorithm;
  std::optional<double> eta;
  std::optional<int> kappa;
  std::optional<double> eps;
  std::optional<int> max_outer;
  std::optional<std::uint64_t> seed;
  bool svg = false;
};

/// Merge config-file settings with command-line overrides (flags win).
LoadedConfig assemble_config(const CliOverrides& cli) {
  LoadedConfig cfg;
  if (!cli.config_path.empty()) cfg = parse_run_config(cli.config_path);
  if (!cli.hamiltonian.empty()) cfg.hamiltonian_source = cli.hamiltonian;
  if (!cli.out_dir.empty()) cfg.out_dir = cli.out_dir;
  if (cli.algorithm) {
    const auto a = algorithm_from_name(*cli.algorithm);
    if (!a) throw ValidationError("unknown algorithm '" + *cli.algorithm + "'");
    cfg.run.algorithm = *a;
  }
  if (cli.eta) cfg.run.eta = *cli.eta;
  if (cli.kappa) cfg.run.kappa = *cli.kappa;
  if (cli.eps) cfg.run.eps = *cli.eps;
  if (cli.max_outer) cfg.run.max_outer = *cli.max_outer;
  if (cli.seed) cfg.run.seed = *cli.seed;
  if (cli.svg) cfg.svg = true;
  cfg.run.validate();
  if (cfg.hamiltonian_source.empty())
    throw ValidationError(
        "no Hamiltonian given: set [hamiltonian] source in the config or pass "
        "--hamiltonian");
  return cfg;
}

MoleculeSpec require_molecule(const HamiltonianFile& file) {
  const auto spec = file.molecule();
  if (!spec)
    throw ValidationError(
        "Hamiltonian file lacks n_electrons; a molecule spec is required for this "
        "command");
  return *spec;
}

void write_run_outputs(const fs::path& dir, const RunTrace& trace, bool svg) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  write_trace_csv(dir / "trace.csv", trace);
  write_summary_json(dir / "summary.json", trace);
  if (svg) {
    TraceSeries series{algorithm_name(trace.config.algorithm), trace.records,
                       trace.pool_size};
    write_svg(dir / "error_vs_iterations.svg", error_vs_iterations_svg({series}));
    write_svg(dir / "error_vs_params.svg", error_vs_params_svg({series}));
  }
}

void print_run_summary(const RunTrace& trace, const fs::path& dir) {
  const RunSummary s = summarize(trace);
  std::printf("algorithm             %s\n", s.algorithm.c_str());
  std::printf("hamiltonian           %s\n", s.hamiltonian_label.c_str());
  std::printf("outer iterations      %d%s\n", s.n_outer,
              s.converged ? " (converged)" : "");
  std::printf("final energy          %.12g Ha\n", s.final_energy);
  std::printf("E_FCI                 %.12g Ha\n", s.e_fci);
  std::printf("energy error          %.3e Ha\n", s.energy_error);
  std::printf("chemical accuracy     %s\n",
              s.chemical_accuracy_reached ? "reached" : "not reached");
  if (s.eac) std::printf("EAC                   %lld\n", *s.eac);
  std::printf("ansatz parameters     %d\n", s.n_params);
  std::printf("outputs               %s\n", dir.string().c_str());
}

int cmd_run(const CliOverrides& cli) {
  const LoadedConfig cfg = assemble_config(cli);
  const HamiltonianFile file = load_hamiltonian_source(cfg.hamiltonian_source);
  const MoleculeSpec spec = require_molecule(file);
  const RunTrace trace = run_algorithm(cfg.run, file.total_hamiltonian(), spec);
  write_run_outputs(cfg.out_dir, trace, cfg.svg);
  print_run_summary(trace, cfg.out_dir);
  return 0;
}

int cmd_fci(const std::string& source, std::uint64_t seed) {
  const HamiltonianFile file = load_hamiltonian_source(source);
  const GroundStateResult res =
      reference_ground_energy(file.total_hamiltonian(), seed);
  std::printf("ground energy  %.12g Ha\n", res.energy);
  std::printf("residual       %.3e\n", res.residual);
  std::printf("iterations     %d\n", res.iterations);
  if (file.e_fci) std::printf("stored e_fci   %.12g Ha\n", *file.e_fci);
  return 0;
}

int cmd_pool(const std::string& source, bool verbose) {
  const HamiltonianFile file = load_hamiltonian_source(source);
  const MoleculeSpec spec = require_molecule(file);
  const OperatorPool pool = build_pool(spec);
  std::size_t singles = 0;
  for (const auto& g : pool.generators)
    if (g.kind == ExcitationGenerator::Kind::single) ++singles;
  std::printf("spin orbitals  %d\n", spec.n_spin_orbitals);
  std::printf("electrons      %d\n", spec.n_electrons);
  std::printf("pool size      %zu (%zu singles, %zu doubles)\n", pool.size(), singles,
              pool.size() - singles);
  if (verbose)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto& g = pool.generators[j];
      std::printf("%4zu  %-18s %zu strings\n", j, g.description().c_str(),
                  g.op.size());
    }
  return 0;
}

/// Label + pool size for a plotted trace come from the sibling summary.json
/// when present; otherwise the file stem and the records themselves.
TraceSeries load_series(const fs::path& trace_path) {
  TraceSeries s;
  s.records = read_trace_csv(trace_path);
  s.label = trace_path.stem().string();
  const fs::path summary = trace_path.parent_path() / "summary.json";
  if (fs::exists(summary)) {
    std::ifstream in(summary);
    try {
      const auto j = nlohmann::json::parse(in);
      if (j.contains("algorithm")) s.label = j["algorithm"].get<std::string>();
      if (j.contains("pool_size")) s.pool_size = j["pool_size"].get<int>();
    } catch (const nlohmann::json::exception&) {
      // Unparseable sidecar: keep the fallbacks.
    }
  }
  if (s.pool_size == 0)
    for (const auto& r : s.records) s.pool_size = std::max(s.pool_size, r.n_params);
  return s;
}

int cmd_plot(const std::vector<std::string>& traces, const std::string& out_dir) {
  std::vector<TraceSeries> series;
  series.reserve(traces.size());
  for (const auto& t : traces) series.push_back(load_series(t));
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir);
  const fs::path iters = fs::path(out_dir) / "error_vs_iterations.svg";
  const fs::path params = fs::path(out_dir) / "error_vs_params.svg";
  write_svg(iters, error_vs_iterations_svg(series));
  write_svg(params, error_vs_params_svg(series));
  std::printf("wrote %s\n", iters.string().c_str());
  std::printf("wrote %s\n", params.string().c_str());
  return 0;
}

std::string grid_point_name(double eta, int kappa) {
  std::string name = "eta_" + format_double(eta) + "_kappa_" + std::to_string(kappa);
  for (auto& c : name)
    if (c == '.' || c == '+') c = 'p';
  return name;
}

int cmd_sweep(const CliOverrides& cli) {
  const LoadedConfig cfg = assemble_config(cli);
  std::vector<double> etas = cfg.sweep_eta;
  std::vector<int> kappas = cfg.sweep_kappa;
  if (etas.empty() && kappas.empty())
    throw ValidationError("sweep: config has no [sweep] eta or kappa grid");
  if (etas.empty()) etas = {cfg.run.eta};
  if (kappas.empty()) kappas = {cfg.run.kappa};

  const HamiltonianFile file = load_hamiltonian_source(cfg.hamiltonian_source);
  const MoleculeSpec spec = require_molecule(file);
  const PauliSum h = file.total_hamiltonian();

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir);

  nlohmann::ordered_json index;
  index["algorithm"] = algorithm_name(cfg.run.algorithm);
  index["hamiltonian"] = cfg.hamiltonian_source;
  index["points"] = nlohmann::ordered_json::array();
  double best_energy = std::numeric_limits<double>::infinity();
  std::string best_dir;

  for (double eta : etas)
    for (int kappa : kappas) {
      RunConfig rc = cfg.run;
      rc.eta = eta;
      rc.kappa = kappa;
      const fs::path dir = fs::path(cfg.out_dir) / grid_point_name(eta, kappa);
      nlohmann::ordered_json point;
      point["eta"] = eta;
      point["kappa"] = kappa;
      point["dir"] = dir.string();
      try {
        const RunTrace trace = run_algorithm(rc, h, spec);
        write_run_outputs(dir, trace, cfg.svg);
        const RunSummary s = summarize(trace);
        point["status"] = "ok";
        point["final_energy"] = s.final_energy;
        point["energy_error"] = s.energy_error;
        point["chemical_accuracy_reached"] = s.chemical_accuracy_reached;
        if (s.eac)
          point["eac"] = *s.eac;
        else
          point["eac"] = nullptr;
        if (s.final_energy < best_energy) {
          best_energy = s.final_energy;
          best_dir = dir.string();
        }
        std::printf("eta=%-8g kappa=%-3d E=%.10f err=%.3e%s\n", eta, kappa,
                    s.final_energy, s.energy_error,
                    s.chemical_accuracy_reached ? "  [chem acc]" : "");
      } catch (const std::exception& e) {
        // A failed grid point is recorded and the sweep moves on.
        point["status"] = "failed";
        point["error"] = e.what();
        std::printf("eta=%-8g kappa=%-3d FAILED: %s\n", eta, kappa, e.what());
      }
      index["points"].push_back(point);
    }

  if (best_dir.empty()) {
    index["best"] = nullptr;
  } else {
    index["best"] = nlohmann::ordered_json{{"dir", best_dir},
                                           {"final_energy", best_energy}};
  }
  const fs::path index_path = fs::path(cfg.out_dir) / "index.json";
  std::ofstream out(index_path, std::ios::binary);
  if (!out) throw IoError("cannot write sweep index: " + index_path.string());
  out << index.dump(2) << "\n";
  std::printf("wrote %s\n", index_path.string().c_str());
  return 0;
}

int cmd_validate(const std::string& hamiltonian, const std::string& config_path) {
  if (hamiltonian.empty() && config_path.empty())
    throw ValidationError("validate: pass --hamiltonian and/or --config");
  if (!hamiltonian.empty()) {
    const HamiltonianFile file = load_hamiltonian_source(hamiltonian);
    validate_stored_references(file);
    std::printf("hamiltonian ok: %d qubits, %zu terms%s\n", file.n_qubits,
                file.electronic.size(),
                file.e_fci ? ", stored e_fci reproduced" : "");
  }
  if (!config_path.empty()) {
    const LoadedConfig cfg = parse_run_config(config_path);
    std::printf("config ok: algorithm %s, eta %g, kappa %d\n",
                algorithm_name(cfg.run.algorithm), cfg.run.eta, cfg.run.kappa);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive variational ground-state solver (exact statevector)"};
  app.require_subcommand(1);

  CliOverrides cli;

  auto* run = app.add_subcommand("run", "Run one algorithm and write trace outputs");
  run->add_option("--config", cli.config_path, "Config file (see docs/formats.md)");
  run->add_option("--hamiltonian", cli.hamiltonian,
                  "Hamiltonian file path or fixture:NAME");
  run->add_option("--out-dir", cli.out_dir, "Output directory");
  run->add_option("--algorithm", cli.algorithm,
                  "geo_adapt|adapt|pos_geo_adapt|pos_adapt|vqe_gd|vqe_qng_bd");
  run->add_option("--eta", cli.eta, "Learning rate");
  run->add_option("--kappa", cli.kappa, "Inner steps per outer iteration");
  run->add_option("--eps", cli.eps, "F-norm stopping threshold");
  run->add_option("--max-outer", cli.max_outer, "Outer iteration cap");
  run->add_option("--seed", cli.seed, "Seed for the eigensolver start vector");
  run->add_flag("--svg", cli.svg, "Also write convergence SVGs");

  std::string fci_source;
  std::uint64_t fci_seed = 0xC0FFEE;
  auto* fci = app.add_subcommand("fci", "Print the exact ground-state energy");
  fci->add_option("--hamiltonian", fci_source, "Hamiltonian file path or fixture:NAME")
      ->required();
  fci->add_option("--seed", fci_seed, "Seed for the Lanczos start vector");

  std::string pool_source;
  bool pool_verbose = false;
  auto* pool = app.add_subcommand("pool", "Print the operator pool for a molecule");
  pool->add_option("--hamiltonian", pool_source,
                   "Hamiltonian file path or fixture:NAME")
      ->required();
  pool->add_flag("-v,--verbose", pool_verbose, "List every generator");

  std::vector<std::string> plot_traces;
  std::string plot_out = "out";
  auto* plot = app.add_subcommand("plot", "Render convergence SVGs from trace CSVs");
  plot->add_option("traces", plot_traces, "Trace CSV paths")->required();
  plot->add_option("--out-dir", plot_out, "Output directory");

  auto* sweep = app.add_subcommand("sweep", "Run a learning-rate / kappa grid");
  sweep->add_option("--config", cli.config_path, "Config file with a [sweep] section")
      ->required();
  sweep->add_option("--hamiltonian", cli.hamiltonian,
                    "Hamiltonian file path or fixture:NAME");
  sweep->add_option("--out-dir", cli.out_dir, "Output directory");
  sweep->add_option("--algorithm", cli.algorithm, "Algorithm override");
  sweep->add_option("--seed", cli.seed, "Seed override");

  std::string val_ham, val_config;
  auto* validate = app.add_subcommand("validate", "Check files without running");
  validate->add_option("--hamiltonian", val_ham,
                       "Hamiltonian file path or fixture:NAME");
  validate->add_option("--config", val_config, "Config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(cli);
    if (fci->parsed()) return cmd_fci(fci_source, fci_seed);
    if (pool->parsed()) return cmd_pool(pool_source, pool_verbose);
    if (plot->parsed()) return cmd_plot(plot_traces, plot_out);
    if (sweep->parsed()) return cmd_sweep(cli);
    if (validate->parsed()) return cmd_validate(val_ham, val_config);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what()
              << " (best estimate " << format_double(e.best_estimate) << ", residual "
              << format_double(e.residual) << ")\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
