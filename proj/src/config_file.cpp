// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/config_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "twrnoma/errors.hpp"

namespace twrnoma {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view value, int line) {
  // from_chars for double is unavailable on older libstdc++; strtod on a copy.
  const std::string copy(value);
  char* end = nullptr;
  const double x = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw ConfigError(fmt::format("line {}: '{}' is not a number", line, value));
  }
  return x;
}

std::uint64_t parse_count(std::string_view value, int line) {
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("line {}: '{}' is not a non-negative integer", line, value));
  }
  return x;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  ScenarioFile out;
  SystemConfig& cfg = out.config;

  std::map<std::string, double*> reals{
      {"rho_db", &cfg.rho_db},         {"omega_i_db", &cfg.omega_i_db},
      {"varpi1", &cfg.varpi1},         {"varpi2", &cfg.varpi2},
  };
  for (int i = 0; i < 4; ++i) {
    reals.emplace(fmt::format("a{}", i + 1), &cfg.a[i]);
    reals.emplace(fmt::format("b{}", i + 1), &cfg.b[i]);
    reals.emplace(fmt::format("r{}", i + 1), &cfg.rates[i]);
  }

  std::optional<double> d1, d2, alpha;
  std::array<std::optional<double>, 4> omegas;
  std::set<std::string> seen;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key=value", line_no));
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError(fmt::format("line {}: duplicate key '{}'", line_no, key));
    }

    if (auto it = reals.find(key); it != reals.end()) {
      *it->second = parse_real(value, line_no);
    } else if (key.size() == 6 && key.starts_with("omega") && key[5] >= '1' && key[5] <= '4') {
      omegas[key[5] - '1'] = parse_real(value, line_no);
    } else if (key == "d1") {
      d1 = parse_real(value, line_no);
    } else if (key == "d2") {
      d2 = parse_real(value, line_no);
    } else if (key == "alpha") {
      alpha = parse_real(value, line_no);
    } else if (key == "sic_mode") {
      cfg.sic_mode = parse_sic_mode(value);
    } else if (key == "trials") {
      out.trials = parse_count(value, line_no);
    } else if (key == "seed") {
      out.seed = parse_count(value, line_no);
    } else {
      throw ConfigError(fmt::format("line {}: unknown key '{}'", line_no, key));
    }
  }

  const bool any_omega = omegas[0] || omegas[1] || omegas[2] || omegas[3];
  const bool any_geometry = d1 || d2 || alpha;
  if (any_omega && any_geometry) {
    throw ConfigError("give either omega1..omega4 or d1,d2,alpha, not both");
  }
  if (any_geometry) {
    if (!(d1 && d2 && alpha)) throw ConfigError("d1, d2 and alpha must be given together");
    cfg.omega = omegas_from_distances(*d1, *d2, *alpha);
  }
  for (int i = 0; i < 4; ++i) {
    if (omegas[i]) cfg.omega[i] = *omegas[i];
  }

  cfg.validate();
  return out;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace twrnoma
