#include "sgcor/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "cli_error.hpp"
#include "csv.hpp"
#include "report.hpp"
#include "sgcor/affine.hpp"
#include "sgcor/asymptotics.hpp"
#include "sgcor/elliptic.hpp"
#include "sgcor/estimators.hpp"
#include "sgcor/iris.hpp"
#include "sgcor/parallel.hpp"
#include "sgcor/simulation.hpp"

namespace sgcor {

namespace {

using cli::Format;
using cli::UsageError;
using nlohmann::json;

struct CommonOptions {
  std::string format = "csv";
  int threads = 0;
};

struct AffineOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 200;

  FixedPointConfig config() const { return {tolerance, max_iterations}; }
};

void add_affine_options(CLI::App* sub, AffineOptions& a) {
  sub->add_option("--tol", a.tolerance, "Relative Frobenius tolerance of the scatter fixed point")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", a.max_iterations, "Iteration cap for the scatter fixed point")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
}

Format parse_format(const std::string& f) { return f == "json" ? Format::json : Format::csv; }

std::vector<Estimator> parse_estimators(const std::vector<std::string>& names) {
  std::vector<Estimator> out;
  for (const auto& n : names) {
    try {
      out.push_back(parse_estimator(n));
    } catch (const Error&) {
      throw UsageError("unknown estimator: " + n);
    }
  }
  return out;
}

EllipticalModelSpec make_spec(const std::string& dist, double nu, double rho) {
  if (!(std::abs(rho) < 1.0)) throw UsageError("--rho must lie in (-1, 1)");
  const ScatterMatrix2 sigma = ScatterMatrix2::from_correlation(rho);
  if (dist == "normal") return EllipticalModelSpec::normal(sigma);
  if (dist == "kotz") return EllipticalModelSpec::kotz(sigma);
  if (!(nu > 0.0)) throw UsageError("--nu must be positive for the t family");
  return EllipticalModelSpec::student_t(nu, sigma);
}

// ---- estimate ---------------------------------------------------------------

struct EstimateOptions {
  std::string input;
  std::string x = "0";
  std::string y = "1";
  std::string dataset;
  std::vector<std::string> estimators;
  bool stderr_values = false;
  std::string ties = "midrank";
  bool if_grid = false;
  double grid_min = -3.0;
  double grid_max = 3.0;
  std::size_t grid_steps = 61;
  AffineOptions affine;
};

std::optional<double> asv_for(Estimator e, const BivariateSample& s) {
  switch (e) {
    case Estimator::pearson: return asv_pearson(s).value;
    case Estimator::tau_to_rho: return asv_tau_rho(s).value;
    case Estimator::gini_xy: return asv_regular_gini(s, GiniDirection::xy).value;
    case Estimator::gini_yx: return asv_regular_gini(s, GiniDirection::yx).value;
    case Estimator::symmetric_gini: return asv_symmetric_gini(s).value;
    case Estimator::corrected_symmetric_gini: return asv_corrected(s).value;
    case Estimator::kendall_tau:
    case Estimator::affine_symmetric_gini: return std::nullopt;
  }
  return std::nullopt;
}

BivariateSample load_sample(const std::string& path, const std::string& xsel,
                            const std::string& ysel) {
  const cli::CsvTable table = cli::read_csv_file(path);
  const auto xs = cli::numeric_column(table, cli::resolve_column(table, xsel));
  const auto ys = cli::numeric_column(table, cli::resolve_column(table, ysel));
  return validate_sample(xs, ys);
}

void write_if_grid(std::ostream& out, const BivariateSample& s, const EstimateOptions& o,
                   Format format) {
  if (o.grid_steps < 2 || !(o.grid_max > o.grid_min)) {
    throw UsageError("--grid-steps must be >= 2 and --grid-max > --grid-min");
  }
  const RhoGInfluence rho_g(s);
  const MomentSet moments = MomentSet::from_sample(s);
  const double step = (o.grid_max - o.grid_min) / static_cast<double>(o.grid_steps - 1);
  std::vector<std::vector<std::string>> rows;
  json doc = json::array();
  for (std::size_t i = 0; i < o.grid_steps; ++i) {
    for (std::size_t j = 0; j < o.grid_steps; ++j) {
      const Point2 p{o.grid_min + step * static_cast<double>(i),
                     o.grid_min + step * static_cast<double>(j)};
      const double fp = influence_pearson(p, moments);
      const double fg = rho_g(p);
      const double fk = influence_kendall(p, s);
      if (format == Format::json) {
        doc.push_back({{"x", p[0]}, {"y", p[1]}, {"pearson", fp}, {"symmetric_gini", fg},
                       {"kendall_tau", fk}});
      } else {
        rows.push_back({cli::format_number(p[0]), cli::format_number(p[1]),
                        cli::format_number(fp), cli::format_number(fg), cli::format_number(fk)});
      }
    }
  }
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    cli::write_csv(out, {"x", "y", "if_pearson", "if_symmetric_gini", "if_kendall_tau"}, rows);
  }
}

void run_estimate(const EstimateOptions& o, Format format, std::ostream& out) {
  const BivariateSample s = load_sample(o.input, o.x, o.y);
  if (o.if_grid) {
    write_if_grid(out, s, o, format);
    return;
  }
  const TieBreak ties = o.ties == "ordinal" ? TieBreak::observation_order : TieBreak::midrank;
  const std::vector<Estimator> list =
      o.estimators.empty()
          ? std::vector<Estimator>(all_estimators().begin(), all_estimators().end())
          : parse_estimators(o.estimators);
  EstimateReport report;
  report.dataset = o.dataset.empty() ? o.input : o.dataset;
  report.n = s.size();
  for (Estimator e : list) {
    CorrelationValue v;
    switch (e) {
      case Estimator::pearson: v = pearson(s); break;
      case Estimator::kendall_tau: v = kendall_tau(s); break;
      case Estimator::tau_to_rho: v = rho_from_tau(kendall_tau(s).value); break;
      case Estimator::gini_xy: v = gini_regular(s, GiniDirection::xy, ties); break;
      case Estimator::gini_yx: v = gini_regular(s, GiniDirection::yx, ties); break;
      case Estimator::symmetric_gini: v = symmetric_gini(s); break;
      case Estimator::corrected_symmetric_gini: v = corrected_symmetric_gini(s); break;
      case Estimator::affine_symmetric_gini: {
        const FixedPointReport fit = iterate_gini_scatter(s, o.affine.config());
        report.affine = fit.diagnostics();
        if (!fit.converged) {
          report.warnings.push_back("affine scatter did not converge; value is the last iterate");
        }
        v = fit.correlation();
        break;
      }
    }
    ReportEntry entry{v, std::nullopt};
    if (o.stderr_values) {
      try {
        if (const auto asv = asv_for(e, s)) {
          entry.stderr_value = std::sqrt(*asv / static_cast<double>(s.size()));
        }
      } catch (const Error& err) {
        report.warnings.push_back(std::string(to_string(e)) + " stderr unavailable: " + err.what());
      }
    }
    report.entries.push_back(entry);
  }
  cli::write_estimate(out, report, format);
}

// ---- simulate ---------------------------------------------------------------

struct SimulateOptions {
  std::string dist = "normal";
  double nu = 5.0;
  double rho = 0.5;
  std::size_t n = 300;
  std::size_t replicates = 3000;
  std::uint64_t seed = 1;
  std::size_t batches = 1;
  std::vector<std::string> estimators;
  std::string inversion = "full";
  bool drop_failures = false;
  AffineOptions affine;
};

void run_simulate(const SimulateOptions& o, Format format, std::ostream& out) {
  RmseExperimentConfig c;
  c.spec = make_spec(o.dist, o.nu, o.rho);
  c.true_rho = c.spec.sigma.correlation();
  c.n = o.n;
  c.replicates = o.replicates;
  c.master_seed = o.seed;
  c.batches = o.batches;
  if (!o.estimators.empty()) c.estimators = parse_estimators(o.estimators);
  c.inversion = o.inversion == "nonnegative" ? InversionDomain::nonnegative : InversionDomain::full;
  c.drop_failures = o.drop_failures;
  c.affine = o.affine.config();
  try {
    c.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  cli::write_rmse(out, rmse_experiment(c), format);
}

// ---- ktable / validate-k / are ----------------------------------------------

void run_ktable(double step, Format format, std::ostream& out) {
  if (!(step > 0.0) || step > 1.0) throw UsageError("--step must lie in (0, 1]");
  const double intervals = std::round(2.0 / step);
  if (std::abs(intervals * step - 2.0) > 1e-9) throw UsageError("--step must divide 2 evenly");
  const auto count = static_cast<std::size_t>(intervals);
  std::vector<std::vector<std::string>> rows;
  json doc = json::array();
  for (std::size_t i = 0; i <= count; ++i) {
    // Symmetric about 0 so that the table is exactly odd.
    const double rho = i == 0       ? -1.0
                       : i == count ? 1.0
                                    : (2.0 * static_cast<double>(i) - intervals) / intervals;
    const double k = k_of_rho(rho);
    if (format == Format::json) {
      doc.push_back({{"rho", rho}, {"k_rho", k}});
    } else {
      rows.push_back({cli::format_number(rho), cli::format_number(k)});
    }
  }
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    cli::write_csv(out, {"rho", "k_rho"}, rows);
  }
}

void run_validate_k(const std::vector<double>& rhos, std::size_t pairs, std::uint64_t seed,
                    Format format, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  json doc = json::array();
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const double rho = rhos[i];
    const KOracleResult r = k_oracle(rho, pairs, RngStream{seed, i});
    const double k = k_of_rho(rho);
    const double z = r.se > 0.0 ? (k - r.estimate) / r.se : 0.0;
    const bool pass = std::abs(k - r.estimate) <= 3.0 * r.se;
    if (format == Format::json) {
      doc.push_back({{"rho", rho}, {"k_rho", k}, {"oracle", r.estimate}, {"oracle_se", r.se},
                     {"z", z}, {"pairs", pairs}, {"pass", pass}});
    } else {
      rows.push_back({cli::format_number(rho), cli::format_number(k),
                      cli::format_number(r.estimate), cli::format_number(r.se),
                      cli::format_number(z), std::to_string(pairs), pass ? "true" : "false"});
    }
  }
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    cli::write_csv(out, {"rho", "k_rho", "oracle", "oracle_se", "z", "pairs", "pass"}, rows);
  }
}

void run_are(const std::string& dist, double nu, const std::vector<double>& rhos, std::size_t n,
             std::uint64_t seed, Format format, std::ostream& out) {
  const EllipticalModelSpec model = make_spec(dist, nu, 0.0);
  const auto table = are_table(model, rhos, n, seed);
  std::vector<std::vector<std::string>> rows;
  json doc = json::array();
  for (const auto& r : table) {
    if (format == Format::json) {
      doc.push_back({{"dist", model.label()},
                     {"rho", r.rho},
                     {"are_corrected_symmetric_gini", r.are_corrected_gini},
                     {"are_gini", r.are_regular_gini},
                     {"are_tau_to_rho", r.are_tau},
                     {"asv_pearson", r.asv_pearson},
                     {"heavy_tail_warning", r.heavy_tail_warning}});
    } else {
      rows.push_back({model.label(), cli::format_number(r.rho),
                      cli::format_number(r.are_corrected_gini),
                      cli::format_number(r.are_regular_gini), cli::format_number(r.are_tau),
                      cli::format_number(r.asv_pearson), r.heavy_tail_warning ? "true" : "false"});
    }
  }
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    cli::write_csv(out,
                   {"dist", "rho", "are_corrected_symmetric_gini", "are_gini", "are_tau_to_rho",
                    "asv_pearson", "heavy_tail_warning"},
                   rows);
  }
}

// ---- iris / exchangeability -------------------------------------------------

std::pair<iris::Variable, iris::Variable> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two names separated by a comma");
  try {
    return {iris::parse_variable(text.substr(0, comma)), iris::parse_variable(text.substr(comma + 1))};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

iris::Group parse_species(const std::string& name) {
  try {
    return iris::parse_group(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct IrisOptions {
  std::string species;
  std::string pair;
  bool summary = false;
  AffineOptions affine;
};

void run_iris(const IrisOptions& o, Format format, std::ostream& out) {
  if (o.summary) {
    cli::write_iris_summary(out, iris::summaries(), format);
    return;
  }
  std::vector<iris::Group> groups(iris::kSpecies.begin(), iris::kSpecies.end());
  if (!o.species.empty()) groups = {parse_species(o.species)};
  std::vector<std::array<iris::Variable, 2>> pairs(iris::kPairs.begin(), iris::kPairs.end());
  if (!o.pair.empty()) {
    const auto [a, b] = parse_pair(o.pair);
    pairs = {{a, b}};
  }
  std::vector<iris::CorrelationRow> rows;
  for (auto g : groups) {
    for (const auto& p : pairs) rows.push_back(iris::correlations(g, p[0], p[1], o.affine.config()));
  }
  cli::write_iris_rows(out, rows, format);
}

struct ExchangeOptions {
  std::string input;
  std::string x = "0";
  std::string y = "1";
  std::string species;
  std::string pair;
  std::size_t permutations = 9999;
  std::uint64_t seed = 1;
};

void run_exchangeability(const ExchangeOptions& o, Format format, std::ostream& out) {
  std::optional<BivariateSample> s;
  std::string dataset;
  if (!o.species.empty()) {
    if (o.pair.empty()) throw UsageError("--species needs --pair");
    const auto [a, b] = parse_pair(o.pair);
    s = iris::pair_sample(parse_species(o.species), a, b);
    dataset = "iris:" + o.species + ":" + std::string(iris::to_string(a)) + "/" +
              std::string(iris::to_string(b));
  } else if (!o.input.empty()) {
    s = load_sample(o.input, o.x, o.y);
    dataset = o.input;
  } else {
    throw UsageError("exchangeability needs --input or --species with --pair");
  }
  const ExchangeabilityResult r = exchangeability_test(*s, o.permutations, o.seed);
  if (format == Format::json) {
    const json doc{{"dataset", dataset},
                   {"n", s->size()},
                   {"statistic", r.statistic},
                   {"p_value", r.p_value},
                   {"n_permutations", r.n_permutations},
                   {"seed", r.seed}};
    out << doc.dump(2) << '\n';
  } else {
    cli::write_csv(out, {"dataset", "n", "statistic", "p_value", "n_permutations", "seed"},
                   {{dataset, std::to_string(s->size()), cli::format_number(r.statistic),
                     cli::format_number(r.p_value), std::to_string(r.n_permutations),
                     std::to_string(r.seed)}});
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust correlation toolkit: symmetric Gini correlations and friends", "sgcor"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  CommonOptions common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", common.threads, "Worker threads (default: all cores or SGCOR_THREADS)")
      ->check(CLI::NonNegativeNumber);

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Estimate correlations from a CSV file");
  estimate->add_option("--input", est.input, "CSV file with a header row")->required();
  estimate->add_option("--x", est.x, "First column (name or 0-based index)");
  estimate->add_option("--y", est.y, "Second column (name or 0-based index)");
  estimate->add_option("--dataset", est.dataset, "Label for the report");
  estimate->add_option("--estimators", est.estimators, "Subset of estimators")->delimiter(',');
  estimate->add_flag("--stderr", est.stderr_values, "Add plug-in asymptotic standard errors");
  estimate->add_option("--ties", est.ties, "Regular Gini tie handling")
      ->check(CLI::IsMember({"midrank", "ordinal"}));
  estimate->add_flag("--if-grid", est.if_grid, "Emit influence functions on a square grid");
  estimate->add_option("--grid-min", est.grid_min);
  estimate->add_option("--grid-max", est.grid_max);
  estimate->add_option("--grid-steps", est.grid_steps);
  add_affine_options(estimate, est.affine);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sqrt(n) RMSE study");
  simulate->add_option("--dist", sim.dist)->check(CLI::IsMember({"normal", "t", "kotz"}));
  simulate->add_option("--nu", sim.nu, "Degrees of freedom for --dist t");
  simulate->add_option("--rho", sim.rho);
  simulate->add_option("--n", sim.n);
  simulate->add_option("--M", sim.replicates, "Replicates");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--batches", sim.batches, "Split replicates into equal batches");
  simulate->add_option("--estimators", sim.estimators)->delimiter(',');
  simulate->add_option("--inversion", sim.inversion, "Domain of the k inversion")
      ->check(CLI::IsMember({"full", "nonnegative"}));
  simulate->add_flag("--drop-failures", sim.drop_failures,
                     "Exclude non-converged affine replicates");
  add_affine_options(simulate, sim.affine);

  double step = 0.01;
  auto* ktable = app.add_subcommand("ktable", "Tabulate k(rho) on [-1, 1]");
  ktable->add_option("--step", step);

  std::vector<double> vk_rhos{0.1, 0.3, 0.5, 0.7, 0.9};
  std::size_t vk_pairs = 1000000;
  std::uint64_t vk_seed = 1;
  auto* validate_k = app.add_subcommand("validate-k", "Compare k(rho) with a Monte Carlo oracle");
  validate_k->add_option("--rhos", vk_rhos)->delimiter(',');
  validate_k->add_option("--pairs", vk_pairs)->check(CLI::Range(std::size_t{10000}, std::size_t{1} << 40));
  validate_k->add_option("--seed", vk_seed);

  std::string are_dist = "normal";
  double are_nu = 5.0;
  std::vector<double> are_rhos{0.1, 0.5, 0.9};
  std::size_t are_n = 20000;
  std::uint64_t are_seed = 1;
  auto* are_cmd = app.add_subcommand("are", "Plug-in asymptotic relative efficiencies");
  are_cmd->add_option("--dist", are_dist)->check(CLI::IsMember({"normal", "t", "kotz"}));
  are_cmd->add_option("--nu", are_nu);
  are_cmd->add_option("--rhos", are_rhos)->delimiter(',');
  are_cmd->add_option("--n", are_n);
  are_cmd->add_option("--seed", are_seed);

  IrisOptions iris_opts;
  auto* iris_cmd = app.add_subcommand("iris", "Correlations on the bundled Iris data");
  iris_cmd->add_option("--species", iris_opts.species, "setosa, versicolor, virginica or all");
  iris_cmd->add_option("--pair", iris_opts.pair, "Two variables, e.g. sepal_length,sepal_width");
  iris_cmd->add_flag("--summary", iris_opts.summary, "Means and standard deviations");
  add_affine_options(iris_cmd, iris_opts.affine);

  ExchangeOptions ex;
  auto* exchange = app.add_subcommand("exchangeability", "Permutation test of gamma_xy = gamma_yx");
  exchange->add_option("--input", ex.input);
  exchange->add_option("--x", ex.x);
  exchange->add_option("--y", ex.y);
  exchange->add_option("--species", ex.species, "Use the bundled Iris data for this species");
  exchange->add_option("--pair", ex.pair);
  exchange->add_option("--permutations", ex.permutations);
  exchange->add_option("--seed", ex.seed);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  parallel::configure_from_environment();
  if (common.threads > 0) parallel::set_threads(common.threads);
  const Format format = parse_format(common.format);

  try {
    if (estimate->parsed()) run_estimate(est, format, out);
    else if (simulate->parsed()) run_simulate(sim, format, out);
    else if (ktable->parsed()) run_ktable(step, format, out);
    else if (validate_k->parsed()) run_validate_k(vk_rhos, vk_pairs, vk_seed, format, out);
    else if (are_cmd->parsed()) run_are(are_dist, are_nu, are_rhos, are_n, are_seed, format, out);
    else if (iris_cmd->parsed()) run_iris(iris_opts, format, out);
    else if (exchange->parsed()) run_exchangeability(ex, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sgcor
