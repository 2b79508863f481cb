#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "geovqe/adapt.hpp"

namespace geovqe {

/// One plotted series: a trace's records plus the pool size (= UCCSD
/// parameter count, marked in the params plot).
struct TraceSeries {
  std::string label;
  std::vector<IterationRecord> records;
  int pool_size = 0;
};

/// |energy_error| (log y) against cumulative inner iterations.
std::string error_vs_iterations_svg(const std::vector<TraceSeries>& series);

/// |energy_error| (log y) against ansatz parameter count, with a dashed
/// vertical marker at the UCCSD parameter count.
std::string error_vs_params_svg(const std::vector<TraceSeries>& series);

void write_svg(const std::filesystem::path& path, const std::string& content);

}  // namespace geovqe
