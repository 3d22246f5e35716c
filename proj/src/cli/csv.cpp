#include "csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "cli_error.hpp"

namespace sgcor::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw UsageError("line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                       " fields, header has " + std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw UsageError("input has no header row");
  return t;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  return read_csv(in);
}

std::size_t resolve_column(const CsvTable& table, std::string_view selector) {
  const auto it = std::find(table.header.begin(), table.header.end(), selector);
  if (it != table.header.end()) return static_cast<std::size_t>(it - table.header.begin());
  std::size_t index = 0;
  const auto r = std::from_chars(selector.data(), selector.data() + selector.size(), index);
  if (r.ec == std::errc{} && r.ptr == selector.data() + selector.size()) {
    if (index < table.header.size()) return index;
  }
  throw UsageError("no such column: " + std::string(selector));
}

std::vector<double> numeric_column(const CsvTable& table, std::size_t column) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& cell = table.rows[r][column];
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (cell.empty() || res.ec != std::errc{} || res.ptr != last) {
      throw UsageError("non-numeric value '" + cell + "' in column '" + table.header[column] +
                       "' at data row " + std::to_string(r + 1));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace sgcor::cli
