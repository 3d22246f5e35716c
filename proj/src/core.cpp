#include "sgcor/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sgcor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DegenerateColumn: return "DegenerateColumn";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

namespace {

bool is_constant(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == *hi;
}

}  // namespace

BivariateSample::BivariateSample(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  x_constant_ = is_constant(xs_);
  y_constant_ = is_constant(ys_);
}

BivariateSample BivariateSample::swapped() const { return BivariateSample(ys_, xs_); }

BivariateSample validate_sample(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "x has " + std::to_string(xs.size()) +
                                               " values, y has " + std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "need at least 2 observations, got " +
                                             std::to_string(xs.size()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw Error(ErrorCode::NonFiniteValue, "observation " + std::to_string(i) + " is not finite",
                  i);
    }
  }
  return BivariateSample({xs.begin(), xs.end()}, {ys.begin(), ys.end()});
}

void require_nonconstant(const BivariateSample& sample) {
  if (sample.x_constant()) throw Error(ErrorCode::DegenerateColumn, "x column is constant");
  if (sample.y_constant()) throw Error(ErrorCode::DegenerateColumn, "y column is constant");
}

ScatterMatrix2::ScatterMatrix2(double g11, double g12, double g22) : g11_(g11), g12_(g12), g22_(g22) {
  if (!(g11 > 0.0) || !(g22 > 0.0) || !(g11 * g22 - g12 * g12 > 0.0) || !std::isfinite(g12)) {
    throw Error(ErrorCode::NotPositiveDefinite, "scatter matrix is not positive definite");
  }
}

ScatterMatrix2 ScatterMatrix2::from_correlation(double rho, double s1, double s2) {
  return {s1 * s1, rho * s1 * s2, s2 * s2};
}

double ScatterMatrix2::correlation() const noexcept { return g12_ / std::sqrt(g11_ * g22_); }

namespace {

constexpr std::array<Estimator, 8> kAllEstimators{
    Estimator::pearson,        Estimator::kendall_tau,
    Estimator::tau_to_rho,     Estimator::gini_xy,
    Estimator::gini_yx,        Estimator::symmetric_gini,
    Estimator::corrected_symmetric_gini, Estimator::affine_symmetric_gini,
};

}  // namespace

std::string_view to_string(Estimator e) {
  switch (e) {
    case Estimator::pearson: return "pearson";
    case Estimator::kendall_tau: return "kendall_tau";
    case Estimator::tau_to_rho: return "tau_to_rho";
    case Estimator::gini_xy: return "gini_xy";
    case Estimator::gini_yx: return "gini_yx";
    case Estimator::symmetric_gini: return "symmetric_gini";
    case Estimator::corrected_symmetric_gini: return "corrected_symmetric_gini";
    case Estimator::affine_symmetric_gini: return "affine_symmetric_gini";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view name) {
  for (auto e : kAllEstimators) {
    if (to_string(e) == name) return e;
  }
  throw Error(ErrorCode::DomainError, "unknown estimator '" + std::string(name) + "'");
}

std::span<const Estimator> all_estimators() { return kAllEstimators; }

CorrelationValue CorrelationValue::make(Estimator e, double raw) {
  if (std::isnan(raw)) throw Error(ErrorCode::DomainError, "correlation is NaN");
  return {std::clamp(raw, -1.0, 1.0), e};
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::normal: return "normal";
    case Family::student_t: return "t";
    case Family::kotz: return "kotz";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "normal") return Family::normal;
  if (name == "t") return Family::student_t;
  if (name == "kotz") return Family::kotz;
  throw Error(ErrorCode::DomainError, "unknown distribution family '" + std::string(name) + "'");
}

EllipticalModelSpec EllipticalModelSpec::normal(ScatterMatrix2 sigma, Point2 mu) {
  return {Family::normal, 0.0, mu, sigma};
}

EllipticalModelSpec EllipticalModelSpec::student_t(double nu, ScatterMatrix2 sigma, Point2 mu) {
  EllipticalModelSpec spec{Family::student_t, nu, mu, sigma};
  spec.validate();
  return spec;
}

EllipticalModelSpec EllipticalModelSpec::kotz(ScatterMatrix2 sigma, Point2 mu) {
  return {Family::kotz, 0.0, mu, sigma};
}

void EllipticalModelSpec::validate() const {
  if (family == Family::student_t && !(nu > 0.0 && std::isfinite(nu))) {
    throw Error(ErrorCode::DomainError, "t degrees of freedom must be positive");
  }
  if (!std::isfinite(mu[0]) || !std::isfinite(mu[1])) {
    throw Error(ErrorCode::DomainError, "location must be finite");
  }
}

std::string EllipticalModelSpec::label() const {
  if (family != Family::student_t) return std::string(to_string(family));
  std::string s = "t";
  const double rounded = std::round(nu);
  if (rounded == nu) {
    s += std::to_string(static_cast<long long>(rounded));
  } else {
    s += std::to_string(nu);
  }
  return s;
}

const ReportEntry* EstimateReport::find(Estimator e) const {
  for (const auto& entry : entries) {
    if (entry.correlation.estimator == e) return &entry;
  }
  return nullptr;
}

}  // namespace sgcor
