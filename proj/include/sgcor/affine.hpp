#pragma once

#include <cstddef>

#include "sgcor/core.hpp"

namespace sgcor {

/// Stopping rule for the Gini scatter fixed point.
struct FixedPointConfig {
  double tolerance = 1e-10;  // on ||S_{t+1} - S_t||_F / ||S_t||_F
  std::size_t max_iterations = 200;

  /// DomainError unless tolerance > 0 and max_iterations >= 1.
  void validate() const;
};

struct FixedPointReport {
  ScatterMatrix2 sigma = ScatterMatrix2::identity();
  std::size_t iterations = 0;
  double final_residual = 0.0;
  bool converged = false;

  AffineDiagnostics diagnostics() const { return {iterations, final_residual, converged}; }
  /// g12 / sqrt(g11 g22) of sigma.
  CorrelationValue correlation() const;
};

/// Raised by fit_gini_scatter when the iteration hits max_iterations. The
/// last iterate is kept in report().
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const FixedPointReport& report);
  const FixedPointReport& report() const noexcept { return report_; }

 private:
  FixedPointReport report_;
};

/// Symmetric square root: S = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
/// The constructor of ScatterMatrix2 already guarantees M is positive definite.
ScatterMatrix2 spd_sqrt(const ScatterMatrix2& m);

/// Runs S <- (2 / (n(n-1))) sum_{i<j} D D^T / sqrt(D^T S^{-1} D), D = z_i - z_j,
/// from S = I until the relative Frobenius change drops below the tolerance.
/// Coincident pairs are skipped. Does not throw on non-convergence; check
/// `converged`. DegenerateSample when fewer than two distinct points exist or
/// the points are collinear (the iterate would be singular).
FixedPointReport iterate_gini_scatter(const BivariateSample& sample,
                                      const FixedPointConfig& config = {});

/// As iterate_gini_scatter, but throws NonConvergenceError when not converged.
FixedPointReport fit_gini_scatter(const BivariateSample& sample,
                                  const FixedPointConfig& config = {});

/// Affine-invariant symmetric Gini correlation from the converged scatter.
CorrelationValue affine_symmetric_gini(const BivariateSample& sample,
                                       const FixedPointConfig& config = {});

/// One application of the update map to `current` (exposed for residual checks).
ScatterMatrix2 gini_scatter_update(const BivariateSample& sample, const ScatterMatrix2& current);

}  // namespace sgcor
