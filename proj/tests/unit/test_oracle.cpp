#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle/brute_force.hpp"
#include "sgcor/asymptotics.hpp"
#include "sgcor/estimators.hpp"
#include "sgcor/kernels.hpp"
#include "support.hpp"

using namespace sgcor;

namespace {

constexpr double kTol = 1e-12;

double d(oracle::Real v) { return static_cast<double>(v); }

void near(double got, oracle::Real want, const char* what, int trial) {
  EXPECT_NEAR(got, d(want), kTol * std::max(1.0L, std::fabs(want))) << what << " trial " << trial;
}

testing_support::Columns draw(std::mt19937_64& gen, int trial) {
  const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
  if (trial % 3 == 0) return testing_support::tied_columns(gen, n, 3);
  return testing_support::random_columns(gen, n, 0.5);
}

}  // namespace

TEST(OracleEquivalence, KernelsAndEstimatorsOnSmallSamples) {
  std::mt19937_64 gen(2024);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = draw(gen, trial);
    const oracle::Sample o{c.x, c.y};

    for (auto sums : {kernels::spatial_sums(c.x, c.y), kernels::serial::spatial_sums(c.x, c.y)}) {
      const auto ref = oracle::spatial(o);
      near(sums.xx, ref.t1, "t1", trial);
      near(sums.xy, ref.t2, "t2", trial);
      near(sums.yy, ref.t3, "t3", trial);
    }

    const oracle::Real w[3] = {1.3, -0.4, 0.8};
    oracle::Real ref_sc[3];
    oracle::scatter_sums(o, w[0], w[1], w[2], ref_sc);
    const auto sc = kernels::scatter_sums(c.x, c.y, {1.3, -0.4, 0.8});
    near(sc.s11, ref_sc[0], "scatter s11", trial);
    near(sc.s12, ref_sc[1], "scatter s12", trial);
    near(sc.s22, ref_sc[2], "scatter s22", trial);

    const auto rank_point = Point2{z(gen), z(gen)};
    const auto s = validate_sample(c.x, c.y);
    const auto rank = empirical_spatial_rank(rank_point, s);
    const auto ref_rank = oracle::spatial_rank(rank_point[0], rank_point[1], o);
    near(rank[0], ref_rank[0], "rank x", trial);
    near(rank[1], ref_rank[1], "rank y", trial);

    if (s.x_constant() || s.y_constant()) continue;

    near(pearson(s).value, oracle::pearson(o), "pearson", trial);
    const auto kt = oracle::kendall(o);
    near(kendall_tau(s, KendallVariant::tau_a).value, kt.tau_a, "tau_a", trial);
    near(kendall_tau(s, KendallVariant::tau_b).value, kt.tau_b, "tau_b", trial);
    near(gini_regular(s, GiniDirection::xy, TieBreak::midrank).value, oracle::gini(c.x, c.y, false),
         "gamma xy", trial);
    near(gini_regular(s, GiniDirection::yx, TieBreak::midrank).value, oracle::gini(c.y, c.x, false),
         "gamma yx", trial);
    near(gini_regular(s, GiniDirection::xy, TieBreak::observation_order).value,
         oracle::gini(c.x, c.y, true), "gamma xy ordinal", trial);
    near(symmetric_gini(s).value, oracle::symmetric_gini(o), "rho_g", trial);

    std::vector<oracle::Real> g1, g2;
    oracle::gini_rows(o, g1, g2);
    const auto rows = kernels::gini_rows(c.x, c.y);
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      near(rows.h1[i], g1[i], "h1 row", trial);
      near(rows.h2[i], g2[i], "h2 row", trial);
    }

    const auto ref_sums = oracle::spatial(o);
    if (ref_sums.t2 != 0) {
      const Point2 p{z(gen), z(gen)};
      near(influence_rho_g(p, s), oracle::influence_rho_g(p[0], p[1], o), "influence", trial);
    }
  }
}
