#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgcor {

using Point2 = std::array<double, 2>;

enum class ErrorCode {
  LengthMismatch,
  TooFewPoints,
  NonFiniteValue,
  DegenerateColumn,
  DomainError,
  NotPositiveDefinite,
  DegenerateSample,
  NonConvergence,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. `code()` names the
/// failure; `index()` is set for errors that point at an observation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

/// Paired observations (x_i, y_i), n >= 2, all finite. Immutable.
class BivariateSample {
 public:
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::size_t size() const noexcept { return xs_.size(); }
  Point2 point(std::size_t i) const { return {xs_[i], ys_[i]}; }

  bool x_constant() const noexcept { return x_constant_; }
  bool y_constant() const noexcept { return y_constant_; }

  /// Same observations with the columns exchanged.
  BivariateSample swapped() const;

 private:
  friend BivariateSample validate_sample(std::span<const double>, std::span<const double>);
  BivariateSample(std::vector<double> xs, std::vector<double> ys);

  std::vector<double> xs_;
  std::vector<double> ys_;
  bool x_constant_ = false;
  bool y_constant_ = false;
};

/// Throws LengthMismatch, TooFewPoints (n < 2) or NonFiniteValue (with index).
BivariateSample validate_sample(std::span<const double> xs, std::span<const double> ys);

/// Throws DegenerateColumn when either column is constant.
void require_nonconstant(const BivariateSample& sample);

/// Symmetric positive-definite 2x2 matrix [[g11, g12], [g12, g22]].
class ScatterMatrix2 {
 public:
  /// Throws NotPositiveDefinite unless g11 > 0, g22 > 0 and g11*g22 - g12^2 > 0.
  ScatterMatrix2(double g11, double g12, double g22);

  static ScatterMatrix2 identity() { return {1.0, 0.0, 1.0}; }
  /// sigma^2 [[1, rho], [rho, 1]] scaled per coordinate: [[s1^2, rho s1 s2], [., s2^2]].
  static ScatterMatrix2 from_correlation(double rho, double s1 = 1.0, double s2 = 1.0);

  double g11() const noexcept { return g11_; }
  double g12() const noexcept { return g12_; }
  double g22() const noexcept { return g22_; }
  double determinant() const noexcept { return g11_ * g22_ - g12_ * g12_; }
  double correlation() const noexcept;

  friend bool operator==(const ScatterMatrix2&, const ScatterMatrix2&) = default;

 private:
  double g11_, g12_, g22_;
};

enum class Estimator {
  pearson,
  kendall_tau,
  tau_to_rho,
  gini_xy,
  gini_yx,
  symmetric_gini,
  corrected_symmetric_gini,
  affine_symmetric_gini,
};

std::string_view to_string(Estimator e);
/// Throws DomainError for an unknown name.
Estimator parse_estimator(std::string_view name);
std::span<const Estimator> all_estimators();

/// A correlation in [-1, 1] tagged with the estimator that produced it.
struct CorrelationValue {
  double value = 0.0;
  Estimator estimator = Estimator::pearson;

  /// Clamps roundoff excursions past +-1; NaN is a DomainError.
  static CorrelationValue make(Estimator e, double raw);
};

enum class Family { normal, student_t, kotz };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// Elliptical model: family (with degrees of freedom for t), location and scatter.
struct EllipticalModelSpec {
  Family family = Family::normal;
  double nu = 0.0;  // only meaningful for student_t
  Point2 mu{0.0, 0.0};
  ScatterMatrix2 sigma = ScatterMatrix2::identity();

  static EllipticalModelSpec normal(ScatterMatrix2 sigma, Point2 mu = {0.0, 0.0});
  static EllipticalModelSpec student_t(double nu, ScatterMatrix2 sigma, Point2 mu = {0.0, 0.0});
  static EllipticalModelSpec kotz(ScatterMatrix2 sigma, Point2 mu = {0.0, 0.0});

  /// Throws DomainError for nu <= 0 (t family) or a non-finite location.
  void validate() const;
  /// "normal", "t5", "kotz".
  std::string label() const;
};

struct AffineDiagnostics {
  std::size_t iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
};

struct ReportEntry {
  CorrelationValue correlation;
  std::optional<double> stderr_value;
};

/// Every estimator value for one dataset, with optional asymptotic standard errors.
struct EstimateReport {
  std::string dataset;
  std::size_t n = 0;
  std::vector<ReportEntry> entries;
  std::optional<AffineDiagnostics> affine;
  std::vector<std::string> warnings;

  const ReportEntry* find(Estimator e) const;
};

inline constexpr double kCorrelationSlack = 1e-12;

}  // namespace sgcor
