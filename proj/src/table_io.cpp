// SPDX-License-Identifier: Apache-2.0
#include "twrnoma/table_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "twrnoma/errors.hpp"

namespace twrnoma {

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  throw ConfigError(fmt::format("unknown output format '{}' (expected csv or json)", text));
}

namespace {

template <class T>
std::string optional_field(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string{};
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << "rho_db,signal,sic_mode,method,value,ci_low,ci_high,trials,seed\n";
  for (const CurveRow& r : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.rho_db, r.signal, r.sic_mode, r.method, r.value,
                       optional_field(r.ci_low), optional_field(r.ci_high), optional_field(r.trials),
                       optional_field(r.seed));
  }
}

void write_json(std::ostream& out, const std::vector<CurveRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  for (const CurveRow& r : rows) {
    arr.push_back({{"rho_db", r.rho_db},
                   {"signal", r.signal},
                   {"sic_mode", r.sic_mode},
                   {"method", r.method},
                   {"value", r.value},
                   {"ci_low", opt(r.ci_low)},
                   {"ci_high", opt(r.ci_high)},
                   {"trials", opt(r.trials)},
                   {"seed", opt(r.seed)}});
  }
  out << arr.dump(2) << '\n';
}

std::string format_table(const std::vector<CurveRow>& rows, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv) {
    write_csv(os, rows);
  } else {
    write_json(os, rows);
  }
  return os.str();
}

void write_table_file(const std::filesystem::path& path, const std::vector<CurveRow>& rows,
                      TableFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("{}: cannot open for writing", path.string()));
  out << format_table(rows, format);
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("{}: write failed", path.string()));
}

}  // namespace twrnoma
