#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "geovqe/adapt.hpp"

namespace geovqe {

/// A parsed run-configuration file: the engine RunConfig plus everything the
/// CLI layers on top (Hamiltonian source, sweep grid, output options).
struct LoadedConfig {
  RunConfig run;
  /// Path or "fixture:NAME"; may be empty when supplied on the command line.
  std::string hamiltonian_source;
  std::vector<double> sweep_eta;
  std::vector<int> sweep_kappa;
  std::string out_dir = "out";
  bool svg = false;
};

/// Sectioned key-value format ([run], [pool], [hamiltonian], [sweep],
/// [output]); see docs/formats.md.  Unknown sections or keys are errors.
LoadedConfig parse_run_config_text(std::string_view text, std::string_view origin);
LoadedConfig parse_run_config(const std::filesystem::path& path);

}  // namespace geovqe
