#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgcor/core.hpp"
#include "sgcor/iris.hpp"
#include "sgcor/simulation.hpp"

namespace sgcor::cli {

enum class Format { csv, json };

/// Shortest round-trip text of a double, identical in CSV and JSON output.
/// Non-finite values print as "nan" (CSV) and null (JSON).
std::string format_number(double v);

/// Writes a header row and data rows of preformatted cells.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

nlohmann::json to_json(const EstimateReport& report);
void write_estimate(std::ostream& out, const EstimateReport& report, Format format);

void write_rmse(std::ostream& out, const RmseResultTable& table, Format format);

void write_iris_rows(std::ostream& out, const std::vector<iris::CorrelationRow>& rows,
                     Format format);
void write_iris_summary(std::ostream& out, const std::vector<iris::Summary>& rows, Format format);

}  // namespace sgcor::cli
