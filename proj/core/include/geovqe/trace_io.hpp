#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geovqe/adapt.hpp"

namespace geovqe {

/// Chemical-accuracy threshold on |E - E_FCI|, Hartree.
inline constexpr double kChemicalAccuracy = 1.6e-3;

inline constexpr std::string_view kTraceCsvHeader =
    "outer_k,total_iter,energy,energy_error,selected_op,position,skipped,"
    "nat_grad_max,fnorm,mu_hat,lambda_hat,rho_hat,n_params,descent_pass";

/// Header plus one row per outer iteration; doubles in shortest round-trip
/// form, booleans as 0/1.  Byte-deterministic for a given trace.
std::string trace_csv(const RunTrace& trace);
void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace);

/// Parses the CSV columns back into records (extra diagnostic fields that are
/// not serialized stay default-initialized).
std::vector<IterationRecord> parse_trace_csv_text(std::string_view text,
                                                  std::string_view origin);
std::vector<IterationRecord> read_trace_csv(const std::filesystem::path& path);

/// Effective ansatz complexity: n_params x total_iter at the first record
/// with |energy_error| < threshold; nullopt if the trace never crosses.
std::optional<long long> compute_eac(const RunTrace& trace,
                                     double threshold = kChemicalAccuracy);

struct RunSummary {
  std::string algorithm;
  std::string hamiltonian_label;
  double final_energy = 0.0;
  double e_fci = 0.0;
  double energy_error = 0.0;
  bool chemical_accuracy_reached = false;
  int first_crossing_outer_k = -1;    // -1 when never crossed
  int first_crossing_total_iter = -1;
  std::optional<long long> eac;
  int n_params = 0;
  int n_outer = 0;
  int total_inner_iters = 0;
  bool converged = false;
  double final_fnorm = 0.0;
  double final_nat_grad_max = 0.0;
  double hf_energy = 0.0;
  int pool_size = 0;
  double wall_seconds = 0.0;
};

RunSummary summarize(const RunTrace& trace, double threshold = kChemicalAccuracy);

std::string summary_json_text(const RunTrace& trace,
                              double threshold = kChemicalAccuracy);
void write_summary_json(const std::filesystem::path& path, const RunTrace& trace,
                        double threshold = kChemicalAccuracy);

}  // namespace geovqe
