// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "twrnoma/config.hpp"

namespace twrnoma {

/// Contents of a scenario file: the system configuration plus optional
/// Monte Carlo run settings.
struct ScenarioFile {
  SystemConfig config;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
};

/// Parses flat `key=value` text. Blank lines and `#` comments are ignored.
/// Keys missing from the text keep the reference defaults of SystemConfig.
/// Channel variances come either from omega1..omega4 or from d1,d2,alpha,
/// never both. Unknown or duplicate keys and malformed numbers throw
/// ConfigError with the offending line number. The result is validated.
ScenarioFile parse_scenario(std::string_view text);

ScenarioFile load_scenario(const std::filesystem::path& path);

}  // namespace twrnoma
