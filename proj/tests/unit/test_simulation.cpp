#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sgcor/asymptotics.hpp"
#include "sgcor/elliptic.hpp"
#include "sgcor/parallel.hpp"
#include "sgcor/simulation.hpp"

using namespace sgcor;

namespace {

RmseExperimentConfig normal_config(double rho, std::size_t n, std::size_t m) {
  RmseExperimentConfig c;
  c.spec = EllipticalModelSpec::normal(ScatterMatrix2::from_correlation(rho));
  c.true_rho = rho;
  c.n = n;
  c.replicates = m;
  c.inversion = InversionDomain::nonnegative;
  return c;
}

void expect_tables_identical(const RmseResultTable& a, const RmseResultTable& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].estimator, b.rows[i].estimator);
    EXPECT_EQ(a.rows[i].sqrt_n_rmse, b.rows[i].sqrt_n_rmse);
    EXPECT_EQ(a.rows[i].mc_se, b.rows[i].mc_se);
    EXPECT_EQ(a.rows[i].used, b.rows[i].used);
    EXPECT_EQ(a.rows[i].failures, b.rows[i].failures);
  }
}

}  // namespace

TEST(RmseConfig, Validation) {
  auto c = normal_config(0.5, 30, 10);
  EXPECT_NO_THROW(c.validate());
  auto bad = c;
  bad.true_rho = 0.4;
  EXPECT_THROW(bad.validate(), Error);
  bad = c;
  bad.replicates = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = c;
  bad.n = 1;
  EXPECT_THROW(bad.validate(), Error);
  bad = c;
  bad.batches = 3;
  EXPECT_THROW(bad.validate(), Error);
  bad = c;
  bad.estimators = {Estimator::kendall_tau};
  EXPECT_THROW(bad.validate(), Error);
  // rho = 1 makes the scatter singular, so it cannot even be specified.
  EXPECT_THROW(ScatterMatrix2::from_correlation(1.0), Error);
  bad = c;
  bad.true_rho = 1.0;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(RmseExperiment, IdenticalAcrossThreadCounts) {
  auto c = normal_config(0.5, 40, 64);
  c.estimators = {Estimator::corrected_symmetric_gini, Estimator::gini_xy, Estimator::tau_to_rho,
                  Estimator::pearson, Estimator::affine_symmetric_gini, Estimator::symmetric_gini};
  parallel::set_threads(1);
  const auto one = rmse_experiment(c);
  parallel::set_threads(4);
  const auto four = rmse_experiment(c);
  parallel::set_threads(0);
  const auto again = rmse_experiment(c);
  expect_tables_identical(one, four);
  expect_tables_identical(one, again);
  for (const auto& r : one.rows) {
    EXPECT_GE(r.sqrt_n_rmse, 0.0);
    EXPECT_EQ(r.used, 64u);
  }
}

TEST(RmseExperiment, DecreasesWithRho) {
  std::vector<RmseResultTable> tables;
  for (double rho : {0.1, 0.5, 0.9}) tables.push_back(rmse_experiment(normal_config(rho, 300, 600)));
  for (std::size_t e = 0; e < tables[0].rows.size(); ++e) {
    for (std::size_t k = 0; k + 1 < tables.size(); ++k) {
      const auto& hi = tables[k].rows[e];
      const auto& lo = tables[k + 1].rows[e];
      EXPECT_LT(lo.sqrt_n_rmse + 3 * std::hypot(lo.mc_se, hi.mc_se), hi.sqrt_n_rmse + 1e-9)
          << to_string(hi.estimator);
    }
  }
}

TEST(RmseExperiment, NearAsymptoticStandardDeviation) {
  const auto t = rmse_experiment(normal_config(0.5, 300, 2000));
  const std::vector<std::pair<Estimator, double>> asv{
      {Estimator::pearson, 0.5625},
      {Estimator::corrected_symmetric_gini, 0.5764},
      {Estimator::gini_xy, normal_closed_form::asv_regular_gini(0.5).value},
      {Estimator::tau_to_rho, normal_closed_form::asv_tau_rho(0.5).value}};
  for (const auto& [e, v] : asv) {
    const auto* row = t.find(e);
    ASSERT_NE(row, nullptr);
    EXPECT_NEAR(row->sqrt_n_rmse, std::sqrt(v), 3 * row->mc_se) << to_string(e);
  }
}

TEST(RmseExperiment, Batches) {
  auto c = normal_config(0.5, 30, 400);
  c.batches = 4;
  const auto t = rmse_experiment(c);
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.used, 400u);
    EXPECT_GT(r.mc_se, 0.0);
  }
  // The first batch is the first quarter of the replicates.
  auto first = normal_config(0.5, 30, 100);
  const auto f = rmse_experiment(first);
  EXPECT_NE(f.rows[0].sqrt_n_rmse, t.rows[0].sqrt_n_rmse);
}

TEST(RmseExperiment, AffineFailuresPolicy) {
  auto c = normal_config(0.3, 30, 20);
  c.estimators = {Estimator::affine_symmetric_gini};
  c.affine = FixedPointConfig{1e-300, 1};
  const auto kept = rmse_experiment(c);
  EXPECT_EQ(kept.rows[0].failures, 20u);
  EXPECT_EQ(kept.rows[0].used, 20u);
  EXPECT_TRUE(std::isfinite(kept.rows[0].sqrt_n_rmse));
  c.drop_failures = true;
  const auto dropped = rmse_experiment(c);
  EXPECT_EQ(dropped.rows[0].failures, 20u);
  EXPECT_EQ(dropped.rows[0].used, 0u);
  EXPECT_TRUE(std::isnan(dropped.rows[0].sqrt_n_rmse));
}

TEST(AreTable, NormalAndStudentT) {
  const std::vector<double> rhos{0.5};
  const auto normal = are_table(EllipticalModelSpec::normal(ScatterMatrix2::identity()), rhos);
  ASSERT_EQ(normal.size(), 1u);
  EXPECT_EQ(normal[0].rho, 0.5);
  EXPECT_NEAR(normal[0].are_corrected_gini, 0.9769, 0.02);
  EXPECT_NEAR(normal[0].asv_pearson, 0.5631, 0.01);
  EXPECT_FALSE(normal[0].heavy_tail_warning);
  const auto t5 = are_table(EllipticalModelSpec::student_t(5, ScatterMatrix2::identity()), rhos);
  EXPECT_NEAR(t5[0].are_corrected_gini, 1.9795, 0.08);
  const auto t3 = are_table(EllipticalModelSpec::student_t(3, ScatterMatrix2::identity()), rhos, 2000);
  EXPECT_TRUE(t3[0].heavy_tail_warning);
}

TEST(KOracle, Examples) {
  const auto zero = k_oracle(0.0, 200000, RngStream{1, 0});
  EXPECT_EQ(zero.n_pairs, 200000u);
  EXPECT_GT(zero.se, 0.0);
  EXPECT_LE(std::abs(zero.estimate), 3 * zero.se);
  const auto high = k_oracle(0.9, 200000, RngStream{1, 1});
  EXPECT_LE(std::abs(high.estimate - k_of_rho(0.9)), 3 * high.se);
  const auto mid = k_oracle(0.5, 200000, RngStream{1, 2});
  EXPECT_GT(mid.estimate, 1.0 / 3.0);
  EXPECT_LT(mid.estimate, 0.5);
  EXPECT_THROW(k_oracle(1.0, 200000, RngStream{}), Error);
  EXPECT_THROW(k_oracle(0.5, 9999, RngStream{}), Error);
}

TEST(KOracle, Deterministic) {
  const auto a = k_oracle(0.3, 100000, RngStream{5, 2});
  parallel::set_threads(2);
  const auto b = k_oracle(0.3, 100000, RngStream{5, 2});
  parallel::set_threads(0);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.se, b.se);
}
