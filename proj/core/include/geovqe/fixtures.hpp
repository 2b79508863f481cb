#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace geovqe {

/// Hamiltonian fixtures compiled into the library (the same text as the
/// files under fixtures/), addressable as "fixture:NAME" wherever a
/// Hamiltonian source is accepted.
std::vector<std::string_view> builtin_fixture_names();
std::optional<std::string_view> builtin_fixture_text(std::string_view name);

}  // namespace geovqe
