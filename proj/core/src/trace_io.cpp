#include "geovqe/trace_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geovqe/errors.hpp"
#include "geovqe/text.hpp"

namespace geovqe {

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream out;
  out << kTraceCsvHeader << "\n";
  for (const auto& r : trace.records) {
    out << r.outer_k << ',' << r.total_iter << ',' << format_double(r.energy) << ','
        << format_double(r.energy_error) << ',' << r.selected_op << ',' << r.position
        << ',' << (r.skipped ? 1 : 0) << ',' << format_double(r.nat_grad_max) << ','
        << format_double(r.fnorm) << ',' << format_double(r.mu_hat) << ','
        << format_double(r.lambda_hat) << ',' << format_double(r.rho_hat) << ','
        << r.n_params << ',' << (r.descent_pass ? 1 : 0) << "\n";
  }
  return out.str();
}

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write trace CSV: " + path.string());
  out << trace_csv(trace);
  if (!out) throw IoError("write error on trace CSV: " + path.string());
}

std::vector<IterationRecord> parse_trace_csv_text(std::string_view text,
                                                  std::string_view origin) {
  std::vector<IterationRecord> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::string ctx = std::string(origin) + ":" + std::to_string(line_no);

    if (line_no == 1) {
      if (line != kTraceCsvHeader)
        throw ValidationError(ctx + ": unexpected CSV header '" + std::string(line) +
                              "'");
      continue;
    }
    const auto fields = split_char(line, ',');
    if (fields.size() != 14)
      throw ValidationError(ctx + ": expected 14 fields, got " +
                            std::to_string(fields.size()));
    IterationRecord r;
    r.outer_k = static_cast<int>(parse_int_token(fields[0], ctx));
    r.total_iter = static_cast<int>(parse_int_token(fields[1], ctx));
    r.energy = parse_double_token(fields[2], ctx);
    r.energy_error = parse_double_token(fields[3], ctx);
    r.selected_op = static_cast<int>(parse_int_token(fields[4], ctx));
    r.position = static_cast<int>(parse_int_token(fields[5], ctx));
    r.skipped = parse_bool_token(fields[6], ctx);
    r.nat_grad_max = parse_double_token(fields[7], ctx);
    r.fnorm = parse_double_token(fields[8], ctx);
    r.mu_hat = parse_double_token(fields[9], ctx);
    r.lambda_hat = parse_double_token(fields[10], ctx);
    r.rho_hat = parse_double_token(fields[11], ctx);
    r.n_params = static_cast<int>(parse_int_token(fields[12], ctx));
    r.descent_pass = parse_bool_token(fields[13], ctx);
    records.push_back(std::move(r));
  }
  if (line_no == 0)
    throw ValidationError(std::string(origin) + ": empty trace CSV");
  return records;
}

std::vector<IterationRecord> read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open trace CSV: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error on trace CSV: " + path.string());
  return parse_trace_csv_text(buf.str(), path.string());
}

std::optional<long long> compute_eac(const RunTrace& trace, double threshold) {
  for (const auto& r : trace.records)
    if (std::abs(r.energy_error) < threshold)
      return static_cast<long long>(r.n_params) * r.total_iter;
  return std::nullopt;
}

RunSummary summarize(const RunTrace& trace, double threshold) {
  RunSummary s;
  s.algorithm = algorithm_name(trace.config.algorithm);
  s.hamiltonian_label = trace.hamiltonian_label;
  s.e_fci = trace.e_fci;
  s.hf_energy = trace.hf_energy;
  s.pool_size = trace.pool_size;
  s.converged = trace.converged;
  s.final_fnorm = trace.final_fnorm;
  s.final_nat_grad_max = trace.final_nat_grad_max;
  s.wall_seconds = trace.wall_seconds;
  s.n_outer = static_cast<int>(trace.records.size());
  s.n_params = static_cast<int>(trace.final_ansatz.size());

  if (trace.records.empty()) {
    s.final_energy = trace.hf_energy;
    s.energy_error = s.final_energy - trace.e_fci;
    if (std::abs(s.energy_error) < threshold) {
      s.chemical_accuracy_reached = true;
      s.first_crossing_outer_k = 0;
      s.first_crossing_total_iter = 0;
      s.eac = 0;
    }
    return s;
  }

  const auto& last = trace.records.back();
  s.final_energy = last.energy;
  s.energy_error = last.energy_error;
  s.total_inner_iters = last.total_iter;
  for (const auto& r : trace.records)
    if (std::abs(r.energy_error) < threshold) {
      s.chemical_accuracy_reached = true;
      s.first_crossing_outer_k = r.outer_k;
      s.first_crossing_total_iter = r.total_iter;
      break;
    }
  s.eac = compute_eac(trace, threshold);
  return s;
}

std::string summary_json_text(const RunTrace& trace, double threshold) {
  const RunSummary s = summarize(trace, threshold);
  nlohmann::ordered_json j;
  j["algorithm"] = s.algorithm;
  j["hamiltonian"] = s.hamiltonian_label;
  j["n_qubits"] = trace.n_qubits;
  j["n_electrons"] = trace.n_electrons;
  j["pool_size"] = s.pool_size;
  j["hf_energy"] = s.hf_energy;
  j["e_fci"] = s.e_fci;
  j["final_energy"] = s.final_energy;
  j["energy_error"] = s.energy_error;
  j["chemical_accuracy_threshold"] = threshold;
  j["chemical_accuracy_reached"] = s.chemical_accuracy_reached;
  if (s.chemical_accuracy_reached) {
    j["first_crossing_outer_k"] = s.first_crossing_outer_k;
    j["first_crossing_total_iter"] = s.first_crossing_total_iter;
  } else {
    j["first_crossing_outer_k"] = nullptr;
    j["first_crossing_total_iter"] = nullptr;
  }
  if (s.eac)
    j["eac"] = *s.eac;
  else
    j["eac"] = nullptr;
  j["n_params"] = s.n_params;
  j["n_outer"] = s.n_outer;
  j["total_inner_iters"] = s.total_inner_iters;
  j["converged"] = s.converged;
  j["stop_outer_k"] = trace.stop_outer_k;
  j["final_fnorm"] = s.final_fnorm;
  j["final_nat_grad_max"] = s.final_nat_grad_max;
  j["eta"] = trace.config.eta;
  j["kappa"] = trace.config.kappa;
  j["eps"] = trace.config.eps;
  j["max_outer"] = trace.config.max_outer;
  j["seed"] = trace.config.seed;
  j["wall_seconds"] = s.wall_seconds;
  return j.dump(2) + "\n";
}

void write_summary_json(const std::filesystem::path& path, const RunTrace& trace,
                        double threshold) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write summary JSON: " + path.string());
  out << summary_json_text(trace, threshold);
  if (!out) throw IoError("write error on summary JSON: " + path.string());
}

}  // namespace geovqe
