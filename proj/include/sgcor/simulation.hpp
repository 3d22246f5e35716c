#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgcor/affine.hpp"
#include "sgcor/core.hpp"
#include "sgcor/sampling.hpp"

namespace sgcor {

/// How the symmetric Gini value is mapped back to rho inside the replicate loop.
enum class InversionDomain {
  full,         // k^{-1} on [-1, 1]
  nonnegative,  // negative rho_g clamped to 0 first (grid on [0, 1] only)
};

struct RmseExperimentConfig {
  EllipticalModelSpec spec;
  std::size_t n = 300;
  std::size_t replicates = 3000;  // M
  std::vector<Estimator> estimators{Estimator::corrected_symmetric_gini, Estimator::gini_xy,
                                    Estimator::tau_to_rho, Estimator::pearson};
  std::uint64_t master_seed = 1;
  double true_rho = 0.0;
  /// Outer repeats; replicates are split into this many equal batches.
  std::size_t batches = 1;
  InversionDomain inversion = InversionDomain::full;
  /// Exclude non-converged affine replicates instead of using their last iterate.
  bool drop_failures = false;
  FixedPointConfig affine;

  /// DomainError for M < 1, n < 2, |true_rho| >= 1, true_rho inconsistent with
  /// spec.sigma, batches not dividing M, or kendall_tau (it does not estimate rho).
  void validate() const;
};

struct RmseRow {
  Estimator estimator = Estimator::pearson;
  double sqrt_n_rmse = 0.0;
  /// Single batch: delta-method standard error of sqrt(n) RMSE over the M
  /// replicates. Several batches: standard deviation across batches.
  double mc_se = 0.0;
  std::size_t failures = 0;  // affine replicates that did not converge
  std::size_t used = 0;      // replicates entering the RMSE
};

struct RmseResultTable {
  RmseExperimentConfig config;
  std::vector<RmseRow> rows;

  const RmseRow* find(Estimator e) const;
};

/// Replicate m draws its sample from RngStream{master_seed, m}. Results are
/// bit-identical for any thread count.
RmseResultTable rmse_experiment(const RmseExperimentConfig& config);

struct AreRow {
  double rho = 0.0;
  double asv_pearson = 0.0;
  double are_corrected_gini = 0.0;  // ARE(rho^g, rho_p)
  double are_regular_gini = 0.0;    // ARE(gamma, rho_p)
  double are_tau = 0.0;             // ARE(rho_tau, rho_p)
  bool heavy_tail_warning = false;
};

/// One sample of size n_mc per rho (stream id = position in `rhos`) from
/// `model` with unit-variance scatter at that rho; plug-in ASVs and AREs
/// against the Pearson estimator.
std::vector<AreRow> are_table(const EllipticalModelSpec& model, std::span<const double> rhos,
                              std::size_t n_mc = 20000, std::uint64_t master_seed = 1);

struct KOracleResult {
  double estimate = 0.0;
  double se = 0.0;
  std::size_t n_pairs = 0;
};

/// Ratio estimate of rho_g = E[dx dy/d] / sqrt(E[dx^2/d] E[dy^2/d]) from
/// n_pairs fresh pairs of standard bivariate normals with correlation rho,
/// with a delta-method standard error. DomainError unless |rho| < 1 and
/// n_pairs >= 10^4.
KOracleResult k_oracle(double rho, std::size_t n_pairs, const RngStream& stream);

}  // namespace sgcor
