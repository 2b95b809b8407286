// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twrnoma/sweep.hpp"

namespace twrnoma {

enum class TableFormat { csv, json };

TableFormat parse_table_format(std::string_view text);

/// Header `rho_db,signal,sic_mode,method,value,ci_low,ci_high,trials,seed`, LF
/// line endings, shortest round-trip decimals. Missing fields are left empty.
void write_csv(std::ostream& out, const std::vector<CurveRow>& rows);

/// Array of row objects; missing fields are null.
void write_json(std::ostream& out, const std::vector<CurveRow>& rows);

std::string format_table(const std::vector<CurveRow>& rows, TableFormat format);

/// Writes to `path`; I/O failures throw std::runtime_error naming the path.
void write_table_file(const std::filesystem::path& path, const std::vector<CurveRow>& rows,
                      TableFormat format);

}  // namespace twrnoma
