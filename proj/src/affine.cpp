#include "sgcor/affine.hpp"

#include <cmath>
#include <string>

#include "sgcor/kernels.hpp"

namespace sgcor {

namespace {

// Relative determinant below which an iterate is treated as singular.
constexpr double kSingularRatio = 1e-13;

double frobenius(double a11, double a12, double a22) {
  return std::sqrt(a11 * a11 + 2.0 * a12 * a12 + a22 * a22);
}

bool has_two_distinct_points(const BivariateSample& s) {
  const auto xs = s.xs();
  const auto ys = s.ys();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (xs[i] != xs[0] || ys[i] != ys[0]) return true;
  }
  return false;
}

}  // namespace

void FixedPointConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::DomainError, "fixed-point tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::DomainError, "max_iterations must be at least 1");
  }
}

CorrelationValue FixedPointReport::correlation() const {
  return CorrelationValue::make(Estimator::affine_symmetric_gini, sigma.correlation());
}

NonConvergenceError::NonConvergenceError(const FixedPointReport& report)
    : Error(ErrorCode::NonConvergence,
            "Gini scatter iteration stopped after " + std::to_string(report.iterations) +
                " iterations with residual " + std::to_string(report.final_residual)),
      report_(report) {}

ScatterMatrix2 spd_sqrt(const ScatterMatrix2& m) {
  const double s = std::sqrt(m.determinant());
  const double t = std::sqrt(m.g11() + m.g22() + 2.0 * s);
  return ScatterMatrix2((m.g11() + s) / t, m.g12() / t, (m.g22() + s) / t);
}

ScatterMatrix2 gini_scatter_update(const BivariateSample& sample, const ScatterMatrix2& current) {
  const double det = current.determinant();
  if (!(det > 1e-300)) throw Error(ErrorCode::DegenerateSample, "scatter iterate is singular");
  const kernels::Weight2 w{current.g22() / det, -current.g12() / det, current.g11() / det};
  const auto sums = kernels::scatter_sums(sample.xs(), sample.ys(), w);
  const auto n = static_cast<double>(sample.size());
  const double scale = 2.0 / (n * (n - 1.0));
  const double a11 = scale * sums.s11;
  const double a12 = scale * sums.s12;
  const double a22 = scale * sums.s22;
  if (!(a11 > 0.0) || !(a22 > 0.0) || !(a11 * a22 - a12 * a12 > kSingularRatio * a11 * a22)) {
    throw Error(ErrorCode::DegenerateSample, "points are collinear; the Gini scatter is singular");
  }
  return ScatterMatrix2(a11, a12, a22);
}

FixedPointReport iterate_gini_scatter(const BivariateSample& sample,
                                      const FixedPointConfig& config) {
  config.validate();
  if (!has_two_distinct_points(sample)) {
    throw Error(ErrorCode::DegenerateSample, "fewer than two distinct points");
  }
  FixedPointReport report;
  ScatterMatrix2 current = ScatterMatrix2::identity();
  for (std::size_t t = 1; t <= config.max_iterations; ++t) {
    const ScatterMatrix2 next = gini_scatter_update(sample, current);
    const double change = frobenius(next.g11() - current.g11(), next.g12() - current.g12(),
                                    next.g22() - current.g22());
    const double residual = change / frobenius(current.g11(), current.g12(), current.g22());
    report.sigma = next;
    report.iterations = t;
    report.final_residual = residual;
    if (residual < config.tolerance) {
      report.converged = true;
      break;
    }
    current = next;
  }
  return report;
}

FixedPointReport fit_gini_scatter(const BivariateSample& sample, const FixedPointConfig& config) {
  FixedPointReport report = iterate_gini_scatter(sample, config);
  if (!report.converged) throw NonConvergenceError(report);
  return report;
}

CorrelationValue affine_symmetric_gini(const BivariateSample& sample,
                                       const FixedPointConfig& config) {
  return fit_gini_scatter(sample, config).correlation();
}

}  // namespace sgcor
