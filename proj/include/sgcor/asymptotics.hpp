#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sgcor/core.hpp"
#include "sgcor/estimators.hpp"

namespace sgcor {

/// Central moments sigma_kl = E[(X - EX)^k (Y - EY)^l] plus the means.
struct MomentSet {
  double mean_x = 0.0, mean_y = 0.0;
  double s20 = 1.0, s02 = 1.0, s11 = 0.0;
  double s22 = 1.0, s40 = 3.0, s04 = 3.0, s31 = 0.0, s13 = 0.0;

  /// Sample central moments (divisor n).
  static MomentSet from_sample(const BivariateSample& sample);
  /// Exact moments of the standard bivariate normal with correlation rho.
  static MomentSet normal(double rho);

  /// DomainError unless s20 > 0 and s02 > 0.
  void validate() const;
  double correlation() const;
};

enum class AsvMethod { plug_in, closed_form };
std::string_view to_string(AsvMethod m);

struct AsvEstimate {
  Estimator estimator = Estimator::pearson;
  double value = 0.0;
  AsvMethod method = AsvMethod::plug_in;
  bool heavy_tail_warning = false;  // fourth moments may not exist
};

/// Plug-in influence function of rho_g at the empirical distribution:
///   IF = -(rho_g/2) (L1/T1 - 2 L2/T2 + L3/T3),
/// evaluated as -(1/2)(rho_g L1/T1 - 2 L2/sqrt(T1 T3) + rho_g L3/T3) so that
/// rho_g = 0 needs no division by T2. L_j(z) = (1/n) sum_i 2 q_j(z - z_i)/|z - z_i|
/// with q = dx^2, dx dy, dy^2, and T_j = mean_i L_j(z_i) / 2.
class RhoGInfluence {
 public:
  /// DegenerateColumn if either column is constant.
  explicit RhoGInfluence(const BivariateSample& sample);

  double operator()(const Point2& point) const;
  /// IF at every sample point; averages to zero up to roundoff.
  const std::vector<double>& at_sample() const noexcept { return at_sample_; }
  double rho_g() const noexcept { return rho_g_; }
  double t1() const noexcept { return t1_; }
  double t2() const noexcept { return t2_; }
  double t3() const noexcept { return t3_; }
  const kernels::SpatialRows& rows() const noexcept { return rows_; }

 private:
  double combine(double l1, double l2, double l3) const;

  BivariateSample sample_;
  kernels::SpatialRows rows_;
  double t1_ = 0.0, t2_ = 0.0, t3_ = 0.0, rho_g_ = 0.0;
  std::vector<double> at_sample_;
};

double influence_rho_g(const Point2& point, const BivariateSample& sample);

/// (x - mx)(y - my)/(sx sy) - (rho/2)[(x - mx)^2/sx^2 + (y - my)^2/sy^2].
double influence_pearson(const Point2& point, const MomentSet& moments);

/// 2 (2 P_n[(x - X)(y - Y) > 0] - 1 - tau_a), with tau_a the sample value.
double influence_kendall(const Point2& point, const BivariateSample& sample);

/// mean_i IF(z_i)^2. Needs n >= 3.
AsvEstimate asv_symmetric_gini(const BivariateSample& sample);

/// The same quantity through the six-term expansion in E[L_a L_b]; a cross-check
/// that divides by T2, so DomainError when rho_g == 0.
double asv_symmetric_gini_expanded(const BivariateSample& sample);

/// asv_symmetric_gini / k'(rho)^2 at rho = corrected_symmetric_gini.
/// DomainError when |rho| == 1.
AsvEstimate asv_corrected(const BivariateSample& sample);

/// v_p from central moments. `model` only sets the heavy-tail flag (t with nu <= 4).
AsvEstimate asv_pearson(const MomentSet& moments,
                        const std::optional<EllipticalModelSpec>& model = std::nullopt);
AsvEstimate asv_pearson(const BivariateSample& sample,
                        const std::optional<EllipticalModelSpec>& model = std::nullopt);

/// U-statistic plug-in of v_gamma with row projections g1, g2 of h1, h2.
AsvEstimate asv_regular_gini(const BivariateSample& sample,
                             GiniDirection direction = GiniDirection::xy);

/// (pi^2/4)(1 - rho^2) v_tau with v_tau = 4 mean(g^2) - 4 mean(g)^2.
AsvEstimate asv_tau_rho(const BivariateSample& sample);

/// ARE(a, b) = asv_b / asv_a. DomainError when asv_a.value is not positive.
double are(const AsvEstimate& asv_a, const AsvEstimate& asv_b);

/// Closed forms under the bivariate normal.
namespace normal_closed_form {
AsvEstimate asv_pearson(double rho);
AsvEstimate asv_regular_gini(double rho);
AsvEstimate asv_tau_rho(double rho);
}  // namespace normal_closed_form

}  // namespace sgcor
