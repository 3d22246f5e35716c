#include "sgcor/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "sgcor/asymptotics.hpp"
#include "sgcor/elliptic.hpp"
#include "sgcor/estimators.hpp"
#include "sgcor/summation.hpp"

namespace sgcor {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kOracleChunk = 1 << 16;

struct ReplicateValue {
  double value = kNaN;  // NaN: excluded from the RMSE
  bool failed = false;
};

ReplicateValue evaluate(Estimator e, const BivariateSample& s, const RmseExperimentConfig& c) {
  switch (e) {
    case Estimator::pearson:
      return {pearson(s).value};
    case Estimator::tau_to_rho:
      return {rho_from_tau(kendall_tau(s).value).value};
    case Estimator::gini_xy:
      return {gini_regular(s, GiniDirection::xy).value};
    case Estimator::gini_yx:
      return {gini_regular(s, GiniDirection::yx).value};
    case Estimator::symmetric_gini:
      return {symmetric_gini(s).value};
    case Estimator::corrected_symmetric_gini: {
      double g = symmetric_gini(s).value;
      if (c.inversion == InversionDomain::nonnegative) g = std::max(g, 0.0);
      return {KGrid::standard().interpolate_inverse(g)};
    }
    case Estimator::affine_symmetric_gini: {
      try {
        const FixedPointReport r = iterate_gini_scatter(s, c.affine);
        if (!r.converged && c.drop_failures) return {kNaN, true};
        return {r.correlation().value, !r.converged};
      } catch (const Error& err) {
        if (err.code() != ErrorCode::DegenerateSample) throw;
        return {kNaN, true};
      }
    }
    case Estimator::kendall_tau:
      break;
  }
  throw Error(ErrorCode::DomainError, "estimator does not target rho");
}

struct BatchStats {
  double sqrt_n_rmse = 0.0;
  double se = 0.0;
  std::size_t used = 0;
};

BatchStats batch_stats(std::span<const double> values, double rho, double n) {
  NeumaierSum sse;
  std::size_t used = 0;
  for (double v : values) {
    if (std::isnan(v)) continue;
    sse.add((v - rho) * (v - rho));
    ++used;
  }
  BatchStats b;
  b.used = used;
  if (used == 0) return {kNaN, kNaN, 0};
  const double mse = sse.value() / static_cast<double>(used);
  b.sqrt_n_rmse = std::sqrt(n * mse);
  if (used > 1 && mse > 0.0) {
    NeumaierSum dev;
    for (double v : values) {
      if (std::isnan(v)) continue;
      const double d = (v - rho) * (v - rho) - mse;
      dev.add(d * d);
    }
    const double sd = std::sqrt(dev.value() / static_cast<double>(used - 1));
    const double se_mse = sd / std::sqrt(static_cast<double>(used));
    b.se = std::sqrt(n) * se_mse / (2.0 * std::sqrt(mse));
  }
  return b;
}

}  // namespace

void RmseExperimentConfig::validate() const {
  spec.validate();
  if (replicates < 1) throw Error(ErrorCode::DomainError, "replicates must be >= 1");
  if (n < 2) throw Error(ErrorCode::DomainError, "sample size must be >= 2");
  if (!(std::abs(true_rho) < 1.0)) {
    throw Error(ErrorCode::DomainError, "true rho must lie in (-1, 1)");
  }
  if (std::abs(spec.sigma.correlation() - true_rho) > 1e-12) {
    throw Error(ErrorCode::DomainError, "true rho does not match the scatter matrix");
  }
  if (batches < 1 || replicates % batches != 0) {
    throw Error(ErrorCode::DomainError, "batches must divide the replicate count");
  }
  if (estimators.empty()) throw Error(ErrorCode::DomainError, "no estimators requested");
  for (Estimator e : estimators) {
    if (e == Estimator::kendall_tau) {
      throw Error(ErrorCode::DomainError, "kendall_tau estimates tau, not rho; use tau_to_rho");
    }
  }
  affine.validate();
}

const RmseRow* RmseResultTable::find(Estimator e) const {
  for (const auto& r : rows) {
    if (r.estimator == e) return &r;
  }
  return nullptr;
}

RmseResultTable rmse_experiment(const RmseExperimentConfig& config) {
  config.validate();
  const std::size_t m_total = config.replicates;
  const std::size_t n_est = config.estimators.size();
  std::vector<double> values(n_est * m_total, kNaN);
  std::vector<unsigned char> failed(n_est * m_total, 0);
  // Lowest failing replicate wins so the reported error does not depend on scheduling.
  std::exception_ptr first_error;
  std::size_t first_error_index = m_total;

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t mi = 0; mi < static_cast<std::int64_t>(m_total); ++mi) {
    const auto m = static_cast<std::size_t>(mi);
    try {
      const BivariateSample s = sample_elliptical(config.spec, config.n, RngStream{config.master_seed, m});
      for (std::size_t e = 0; e < n_est; ++e) {
        const ReplicateValue r = evaluate(config.estimators[e], s, config);
        values[e * m_total + m] = r.value;
        failed[e * m_total + m] = r.failed;
      }
    } catch (...) {
#pragma omp critical(sgcor_rmse_error)
      if (m < first_error_index) {
        first_error_index = m;
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  RmseResultTable table;
  table.config = config;
  const auto n = static_cast<double>(config.n);
  const std::size_t per_batch = m_total / config.batches;
  for (std::size_t e = 0; e < n_est; ++e) {
    const std::span<const double> all(values.data() + e * m_total, m_total);
    RmseRow row;
    row.estimator = config.estimators[e];
    row.failures = static_cast<std::size_t>(
        std::count(failed.begin() + static_cast<std::ptrdiff_t>(e * m_total),
                   failed.begin() + static_cast<std::ptrdiff_t>((e + 1) * m_total), 1));
    if (config.batches == 1) {
      const BatchStats b = batch_stats(all, config.true_rho, n);
      row.sqrt_n_rmse = b.sqrt_n_rmse;
      row.mc_se = b.se;
      row.used = b.used;
    } else {
      std::vector<double> per;
      for (std::size_t b = 0; b < config.batches; ++b) {
        const BatchStats s = batch_stats(all.subspan(b * per_batch, per_batch), config.true_rho, n);
        row.used += s.used;
        if (s.used > 0) per.push_back(s.sqrt_n_rmse);
      }
      NeumaierSum sum;
      for (double v : per) sum.add(v);
      const double mean = per.empty() ? kNaN : sum.value() / static_cast<double>(per.size());
      NeumaierSum dev;
      for (double v : per) dev.add((v - mean) * (v - mean));
      row.sqrt_n_rmse = mean;
      row.mc_se = per.size() > 1 ? std::sqrt(dev.value() / static_cast<double>(per.size() - 1)) : 0.0;
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<AreRow> are_table(const EllipticalModelSpec& model, std::span<const double> rhos,
                              std::size_t n_mc, std::uint64_t master_seed) {
  if (n_mc < 3) throw Error(ErrorCode::DomainError, "n_mc must be >= 3");
  std::vector<AreRow> out;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const double rho = rhos[i];
    if (!(std::abs(rho) < 1.0)) throw Error(ErrorCode::DomainError, "rho must lie in (-1, 1)");
    EllipticalModelSpec spec = model;
    spec.sigma = ScatterMatrix2::from_correlation(rho);
    const BivariateSample s = sample_elliptical(spec, n_mc, RngStream{master_seed, i});
    const AsvEstimate p = asv_pearson(s, spec);
    AreRow row;
    row.rho = rho;
    row.asv_pearson = p.value;
    row.are_corrected_gini = are(asv_corrected(s), p);
    row.are_regular_gini = are(asv_regular_gini(s), p);
    row.are_tau = are(asv_tau_rho(s), p);
    row.heavy_tail_warning = p.heavy_tail_warning;
    out.push_back(row);
  }
  return out;
}

KOracleResult k_oracle(double rho, std::size_t n_pairs, const RngStream& stream) {
  if (!std::isfinite(rho) || !(std::abs(rho) < 1.0)) {
    throw Error(ErrorCode::DomainError, "k_oracle needs |rho| < 1");
  }
  if (n_pairs < 10000) throw Error(ErrorCode::DomainError, "k_oracle needs at least 10^4 pairs");

  // Moments of (a, b, c) = (dx^2, dx dy, dy^2) / d: 3 means and 6 cross products.
  struct Acc {
    NeumaierSum s[9];
  };
  const std::size_t chunks = (n_pairs + kOracleChunk - 1) / kOracleChunk;
  std::vector<Acc> acc(chunks);
  const double c = std::sqrt(1.0 - rho * rho);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t ki = 0; ki < static_cast<std::int64_t>(chunks); ++ki) {
    const auto k = static_cast<std::size_t>(ki);
    Rng rng(stream.substream(k));
    const std::size_t count = std::min(kOracleChunk, n_pairs - k * kOracleChunk);
    Acc& a = acc[k];
    for (std::size_t p = 0; p < count; ++p) {
      const auto [u1, v1] = rng.normal_pair();
      const auto [u2, v2] = rng.normal_pair();
      const double x1 = u1, y1 = rho * u1 + c * v1;
      const double x2 = u2, y2 = rho * u2 + c * v2;
      const double dx = x1 - x2, dy = y1 - y2;
      const double d = std::hypot(dx, dy);
      if (d == 0.0) continue;
      const double va = dx * dx / d, vb = dx * dy / d, vc = dy * dy / d;
      a.s[0].add(va);
      a.s[1].add(vb);
      a.s[2].add(vc);
      a.s[3].add(va * va);
      a.s[4].add(vb * vb);
      a.s[5].add(vc * vc);
      a.s[6].add(va * vb);
      a.s[7].add(va * vc);
      a.s[8].add(vb * vc);
    }
  }
  Acc total;
  for (const Acc& a : acc) {
    for (int j = 0; j < 9; ++j) total.s[j].merge(a.s[j]);
  }
  const auto n = static_cast<double>(n_pairs);
  double mom[9];
  for (int j = 0; j < 9; ++j) mom[j] = total.s[j].value() / n;
  const double ma = mom[0], mb = mom[1], mc = mom[2];
  const double caa = mom[3] - ma * ma, cbb = mom[4] - mb * mb, ccc = mom[5] - mc * mc;
  const double cab = mom[6] - ma * mb, cac = mom[7] - ma * mc, cbc = mom[8] - mb * mc;

  KOracleResult r;
  r.n_pairs = n_pairs;
  r.estimate = mb / std::sqrt(ma * mc);
  // Gradient of b / sqrt(a c).
  const double ga = -0.5 * r.estimate / ma;
  const double gb = 1.0 / std::sqrt(ma * mc);
  const double gc = -0.5 * r.estimate / mc;
  const double var = ga * ga * caa + gb * gb * cbb + gc * gc * ccc + 2.0 * ga * gb * cab +
                     2.0 * ga * gc * cac + 2.0 * gb * gc * cbc;
  r.se = std::sqrt(std::max(var, 0.0) / n);
  return r;
}

}  // namespace sgcor
