#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace sgcor::cli {

/// Comma-separated table with one header row. Quoted fields are not supported.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Throws UsageError on an empty input or a row whose width differs from the header.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// Column by header name, or by 0-based index when the selector is all digits.
std::size_t resolve_column(const CsvTable& table, std::string_view selector);

/// Parses every cell of a column as a number. Any non-numeric cell is a
/// UsageError naming the row; rows are never skipped.
std::vector<double> numeric_column(const CsvTable& table, std::size_t column);

}  // namespace sgcor::cli
