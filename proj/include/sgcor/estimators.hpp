#pragma once

#include <cstddef>
#include <cstdint>

#include "sgcor/core.hpp"
#include "sgcor/kernels.hpp"

namespace sgcor {

using kernels::TieBreak;

enum class GiniDirection { xy, yx };

enum class KendallVariant {
  tau_a,  // (C - D) / C(n, 2)
  tau_b,  // (C - D) / sqrt((C(n,2) - T_x)(C(n,2) - T_y)); equals tau_a without ties
};

/// Pairwise sums behind the symmetric Gini correlation, over unordered pairs:
/// t1 = sum dx^2/d, t2 = sum dx dy/d, t3 = sum dy^2/d.
struct GiniComponents {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

struct ExchangeabilityResult {
  double statistic = 0.0;  // gamma_xy - gamma_yx on median/MAD standardized columns
  double p_value = 1.0;
  std::size_t n_permutations = 0;
  std::uint64_t seed = 0;
};

CorrelationValue pearson(const BivariateSample& sample);

CorrelationValue kendall_tau(const BivariateSample& sample,
                             KendallVariant variant = KendallVariant::tau_b);

/// sin(pi tau / 2).
CorrelationValue rho_from_tau(double tau);

/// Regular Gini correlation gamma(X, Y) = sum h1 / sum h2 over pairs with
///   h1 = (x_i - x_j) sgn(y_i - y_j) / 4,  h2 = |x_i - x_j| / 4.
/// Direction yx exchanges the roles of the columns. Ties in the ranked column
/// follow `ties`; observation_order reproduces ordinal (first-occurrence) ranks.
CorrelationValue gini_regular(const BivariateSample& sample, GiniDirection direction,
                              TieBreak ties = TieBreak::midrank);

GiniComponents symmetric_gini_components(const BivariateSample& sample);

/// t2 / sqrt(t1 t3). DegenerateColumn when t1 or t3 vanishes.
CorrelationValue symmetric_gini(const BivariateSample& sample);
CorrelationValue symmetric_gini(const GiniComponents& components);

/// k^{-1}(symmetric_gini). Estimates rho only under homogeneous elliptical models.
CorrelationValue corrected_symmetric_gini(const BivariateSample& sample);

/// (1/n) sum_i s(point - z_i) with s(0) = 0.
Point2 empirical_spatial_rank(const Point2& point, const BivariateSample& sample);

/// Permutation test of gamma_xy == gamma_yx. Each permutation swaps (x_i, y_i)
/// independently with probability 1/2 on median/MAD standardized columns.
/// p = (1 + #{|stat*| >= |stat|}) / (n_permutations + 1).
/// Requires n >= 8 (TooFewPoints) and n_permutations >= 99 (DomainError).
ExchangeabilityResult exchangeability_test(const BivariateSample& sample,
                                           std::size_t n_permutations, std::uint64_t seed);

}  // namespace sgcor
