#include "report.hpp"

#include <cmath>

namespace sgcor::cli {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "nan";
  return json(v).dump();
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  out << join(header) << '\n';
  for (const auto& r : rows) out << join(r) << '\n';
}

json to_json(const EstimateReport& report) {
  json estimates = json::array();
  for (const auto& e : report.entries) {
    json item{{"estimator", std::string(to_string(e.correlation.estimator))},
              {"value", number(e.correlation.value)}};
    if (e.stderr_value) item["stderr"] = number(*e.stderr_value);
    estimates.push_back(std::move(item));
  }
  json diagnostics = json::object();
  if (report.affine) {
    diagnostics["affine"] = {{"iterations", report.affine->iterations},
                             {"final_residual", number(report.affine->final_residual)},
                             {"converged", report.affine->converged}};
  }
  diagnostics["warnings"] = report.warnings;
  return {{"dataset", report.dataset},
          {"n", report.n},
          {"estimates", std::move(estimates)},
          {"diagnostics", std::move(diagnostics)}};
}

void write_estimate(std::ostream& out, const EstimateReport& report, Format format) {
  if (format == Format::json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : report.entries) {
    rows.push_back({std::string(to_string(e.correlation.estimator)),
                    format_number(e.correlation.value),
                    e.stderr_value ? format_number(*e.stderr_value) : std::string()});
  }
  write_csv(out, {"estimator", "value", "stderr"}, rows);
}

void write_rmse(std::ostream& out, const RmseResultTable& table, Format format) {
  const auto& c = table.config;
  const std::string dist = c.spec.label();
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"estimator", std::string(to_string(r.estimator))},
                      {"sqrt_n_rmse", number(r.sqrt_n_rmse)},
                      {"mc_se", number(r.mc_se)},
                      {"failures", r.failures},
                      {"used", r.used}});
    }
    const json doc{{"dist", dist},
                   {"rho", c.true_rho},
                   {"n", c.n},
                   {"M", c.replicates},
                   {"batches", c.batches},
                   {"seed", c.master_seed},
                   {"inversion", c.inversion == InversionDomain::full ? "full" : "nonnegative"},
                   {"results", std::move(rows)}};
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    rows.push_back({std::string(to_string(r.estimator)), format_number(r.sqrt_n_rmse),
                    format_number(r.mc_se), std::to_string(c.n), std::to_string(c.replicates),
                    dist, format_number(c.true_rho), std::to_string(c.master_seed)});
  }
  write_csv(out, {"estimator", "sqrt_n_rmse", "mc_se", "n", "M", "dist", "rho", "seed"}, rows);
}

void write_iris_rows(std::ostream& out, const std::vector<iris::CorrelationRow>& rows,
                     Format format) {
  if (format == Format::json) {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"species", std::string(iris::to_string(r.group))},
                     {"x", std::string(iris::to_string(r.x))},
                     {"y", std::string(iris::to_string(r.y))},
                     {"pearson", number(r.pearson)},
                     {"kendall_tau", number(r.kendall_tau)},
                     {"affine_symmetric_gini", number(r.affine_gini)},
                     {"gini_xy", number(r.gini_xy)},
                     {"gini_yx", number(r.gini_yx)},
                     {"affine_iterations", r.affine.iterations},
                     {"affine_residual", number(r.affine.final_residual)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::string(iris::to_string(r.group)), std::string(iris::to_string(r.x)),
                     std::string(iris::to_string(r.y)), format_number(r.pearson),
                     format_number(r.kendall_tau), format_number(r.affine_gini),
                     format_number(r.gini_xy), format_number(r.gini_yx),
                     std::to_string(r.affine.iterations), format_number(r.affine.final_residual)});
  }
  write_csv(out,
            {"species", "x", "y", "pearson", "kendall_tau", "affine_symmetric_gini", "gini_xy",
             "gini_yx", "affine_iterations", "affine_residual"},
            cells);
}

void write_iris_summary(std::ostream& out, const std::vector<iris::Summary>& rows, Format format) {
  if (format == Format::json) {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"species", std::string(iris::to_string(r.group))},
                     {"variable", std::string(iris::to_string(r.variable))},
                     {"mean", number(r.mean)},
                     {"sd", number(r.sd)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::string(iris::to_string(r.group)),
                     std::string(iris::to_string(r.variable)), format_number(r.mean),
                     format_number(r.sd)});
  }
  write_csv(out, {"species", "variable", "mean", "sd"}, cells);
}

}  // namespace sgcor::cli
