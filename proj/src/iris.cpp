#include "sgcor/iris.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "sgcor/estimators.hpp"
#include "sgcor/summation.hpp"

namespace sgcor::detail {
extern const std::string_view kIrisCsv;
}

namespace sgcor::iris {

const std::string_view kSha256 = SGCOR_IRIS_SHA256;

namespace {

struct Table {
  // columns[group][variable]
  std::array<std::array<std::vector<double>, 4>, 4> columns;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Table parse() {
  Table t;
  std::string_view text = detail::kIrisCsv;
  bool header = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 5) throw Error(ErrorCode::DomainError, "malformed bundled Iris row");
    const Group g = parse_group(cells[4]);
    for (std::size_t v = 0; v < 4; ++v) {
      double value = 0.0;
      const auto r = std::from_chars(cells[v].data(), cells[v].data() + cells[v].size(), value);
      if (r.ec != std::errc{}) throw Error(ErrorCode::DomainError, "malformed bundled Iris value");
      t.columns[static_cast<std::size_t>(g)][v].push_back(value);
      t.columns[static_cast<std::size_t>(Group::all)][v].push_back(value);
    }
  }
  return t;
}

const Table& table() {
  static const Table t = parse();
  return t;
}

}  // namespace

std::string_view to_string(Group g) {
  switch (g) {
    case Group::all: return "all";
    case Group::setosa: return "setosa";
    case Group::versicolor: return "versicolor";
    case Group::virginica: return "virginica";
  }
  return "?";
}

std::string_view to_string(Variable v) {
  switch (v) {
    case Variable::sepal_length: return "sepal_length";
    case Variable::sepal_width: return "sepal_width";
    case Variable::petal_length: return "petal_length";
    case Variable::petal_width: return "petal_width";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  for (Group g : kGroups) {
    if (to_string(g) == name) return g;
  }
  throw Error(ErrorCode::DomainError, "unknown Iris species: " + std::string(name));
}

Variable parse_variable(std::string_view name) {
  for (Variable v : kVariables) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::DomainError, "unknown Iris variable: " + std::string(name));
}

std::string_view csv_text() { return detail::kIrisCsv; }

std::span<const double> column(Group g, Variable v) {
  return table().columns[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)];
}

BivariateSample pair_sample(Group g, Variable x, Variable y) {
  return validate_sample(column(g, x), column(g, y));
}

std::vector<Summary> summaries() {
  std::vector<Summary> out;
  for (Group g : kGroups) {
    for (Variable v : kVariables) {
      const auto c = column(g, v);
      NeumaierSum s;
      for (double x : c) s.add(x);
      const double mean = s.value() / static_cast<double>(c.size());
      NeumaierSum ss;
      for (double x : c) ss.add((x - mean) * (x - mean));
      out.push_back({g, v, mean, std::sqrt(ss.value() / static_cast<double>(c.size() - 1))});
    }
  }
  return out;
}

CorrelationRow correlations(Group g, Variable x, Variable y, const FixedPointConfig& config) {
  const BivariateSample s = pair_sample(g, x, y);
  const FixedPointReport fit = fit_gini_scatter(s, config);
  CorrelationRow row{};
  row.group = g;
  row.x = x;
  row.y = y;
  row.pearson = pearson(s).value;
  row.kendall_tau = kendall_tau(s).value;
  row.affine_gini = fit.correlation().value;
  row.gini_xy = gini_regular(s, GiniDirection::xy, TieBreak::observation_order).value;
  row.gini_yx = gini_regular(s, GiniDirection::yx, TieBreak::observation_order).value;
  row.affine = fit.diagnostics();
  return row;
}

}  // namespace sgcor::iris
