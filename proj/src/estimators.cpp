#include "sgcor/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sgcor/elliptic.hpp"
#include "sgcor/sampling.hpp"
#include "sgcor/summation.hpp"

namespace sgcor {

namespace {

double mean(std::span<const double> v) {
  NeumaierSum s;
  for (double x : v) s.add(x);
  return s.value() / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double upper = *mid;
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

std::vector<double> standardize_robust(std::span<const double> v, const char* column) {
  const double med = median({v.begin(), v.end()});
  std::vector<double> dev(v.size());
  std::transform(v.begin(), v.end(), dev.begin(), [&](double x) { return std::abs(x - med); });
  const double mad = median(dev);
  if (!(mad > 0.0)) {
    throw Error(ErrorCode::DegenerateColumn,
                std::string(column) + " column has zero median absolute deviation");
  }
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](double x) { return (x - med) / mad; });
  return out;
}

double gini_ratio(const kernels::GiniSums& s) { return s.cross / s.spread; }

}  // namespace

CorrelationValue pearson(const BivariateSample& sample) {
  require_nonconstant(sample);
  const auto xs = sample.xs();
  const auto ys = sample.ys();
  const double mx = mean(xs);
  const double my = mean(ys);
  NeumaierSum sxx, sxy, syy;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx.add(dx * dx);
    sxy.add(dx * dy);
    syy.add(dy * dy);
  }
  return CorrelationValue::make(Estimator::pearson,
                                sxy.value() / std::sqrt(sxx.value() * syy.value()));
}

CorrelationValue kendall_tau(const BivariateSample& sample, KendallVariant variant) {
  require_nonconstant(sample);
  const auto c = kernels::concordance(sample.xs(), sample.ys());
  const auto score = static_cast<double>(c.score);
  const auto pairs = static_cast<double>(c.pairs);
  double tau = 0.0;
  if (variant == KendallVariant::tau_a) {
    tau = score / pairs;
  } else {
    tau = score / std::sqrt((pairs - static_cast<double>(c.ties_x)) *
                            (pairs - static_cast<double>(c.ties_y)));
  }
  return CorrelationValue::make(Estimator::kendall_tau, tau);
}

CorrelationValue rho_from_tau(double tau) {
  if (!std::isfinite(tau) || std::abs(tau) > 1.0 + kCorrelationSlack) {
    throw Error(ErrorCode::DomainError, "tau must lie in [-1, 1]");
  }
  return CorrelationValue::make(Estimator::tau_to_rho,
                                std::sin(0.5 * std::numbers::pi * std::clamp(tau, -1.0, 1.0)));
}

CorrelationValue gini_regular(const BivariateSample& sample, GiniDirection direction,
                              TieBreak ties) {
  require_nonconstant(sample);
  const bool xy = direction == GiniDirection::xy;
  const auto s = xy ? kernels::gini_sums(sample.xs(), sample.ys(), ties)
                    : kernels::gini_sums(sample.ys(), sample.xs(), ties);
  return CorrelationValue::make(xy ? Estimator::gini_xy : Estimator::gini_yx, gini_ratio(s));
}

GiniComponents symmetric_gini_components(const BivariateSample& sample) {
  const auto s = kernels::spatial_sums(sample.xs(), sample.ys());
  return {s.xx, s.xy, s.yy};
}

CorrelationValue symmetric_gini(const GiniComponents& c) {
  if (!(c.t1 > 0.0) || !(c.t3 > 0.0)) {
    throw Error(ErrorCode::DegenerateColumn, "symmetric Gini variance is zero");
  }
  return CorrelationValue::make(Estimator::symmetric_gini, c.t2 / std::sqrt(c.t1 * c.t3));
}

CorrelationValue symmetric_gini(const BivariateSample& sample) {
  require_nonconstant(sample);
  return symmetric_gini(symmetric_gini_components(sample));
}

CorrelationValue corrected_symmetric_gini(const BivariateSample& sample) {
  const double g = symmetric_gini(sample).value;
  return CorrelationValue::make(Estimator::corrected_symmetric_gini, invert_k(g));
}

Point2 empirical_spatial_rank(const Point2& point, const BivariateSample& sample) {
  NeumaierSum sx, sy;
  const auto xs = sample.xs();
  const auto ys = sample.ys();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double dx = point[0] - xs[i];
    const double dy = point[1] - ys[i];
    if (dx == 0.0 && dy == 0.0) continue;
    const double d = std::hypot(dx, dy);
    sx.add(dx / d);
    sy.add(dy / d);
  }
  const auto n = static_cast<double>(sample.size());
  return {sx.value() / n, sy.value() / n};
}

ExchangeabilityResult exchangeability_test(const BivariateSample& sample,
                                           std::size_t n_permutations, std::uint64_t seed) {
  if (sample.size() < 8) {
    throw Error(ErrorCode::TooFewPoints, "exchangeability test needs n >= 8");
  }
  if (n_permutations < 99) {
    throw Error(ErrorCode::DomainError, "exchangeability test needs at least 99 permutations");
  }
  require_nonconstant(sample);
  const auto xs = standardize_robust(sample.xs(), "x");
  const auto ys = standardize_robust(sample.ys(), "y");
  const auto statistic_of = [](std::span<const double> a, std::span<const double> b) {
    return gini_ratio(kernels::serial::gini_sums(a, b, TieBreak::midrank)) -
           gini_ratio(kernels::serial::gini_sums(b, a, TieBreak::midrank));
  };
  const double observed = statistic_of(xs, ys);
  const double threshold = std::abs(observed) * (1.0 - 1e-12);

  const std::size_t n = xs.size();
  std::vector<unsigned char> extreme(n_permutations, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(n_permutations); ++p) {
    Rng rng(RngStream{seed, static_cast<std::uint64_t>(p)});
    std::vector<double> a(xs), b(ys);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin()) std::swap(a[i], b[i]);
    }
    extreme[static_cast<std::size_t>(p)] = std::abs(statistic_of(a, b)) >= threshold;
  }
  std::size_t count = 0;
  for (auto e : extreme) count += e;

  ExchangeabilityResult r;
  r.statistic = observed;
  r.p_value = static_cast<double>(1 + count) / static_cast<double>(n_permutations + 1);
  r.n_permutations = n_permutations;
  r.seed = seed;
  return r;
}

}  // namespace sgcor
