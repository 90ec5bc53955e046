#pragma once

// Tabular output for the command-line front end: CSV and JSON writers and a
// small CSV reader for observation files.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "orient/table.hpp"

namespace orient::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  static Dataset from_table(const Table& t);
};

/// 12 significant digits, "%g" style; negative zero prints as 0.
std::string format_number(double v);
std::string format_cell(const Cell& c);

/// Header line, then one line per row. Cells are never quoted: string cells
/// produced by the tool contain no separators.
void write_csv(const Dataset& d, std::ostream& os);

/// {"metadata": ..., "columns": [...], "data": {column: [values...]}}.
void write_json(const Dataset& d, const nlohmann::ordered_json& metadata, std::ostream& os);

/// Parses a headed, comma-separated numeric file. Throws InvalidInput on
/// ragged rows or non-numeric cells.
Table read_csv(std::istream& is);

}  // namespace orient::cli
