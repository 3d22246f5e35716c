#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "sgcor/affine.hpp"
#include "sgcor/iris.hpp"
#include "sgcor/sampling.hpp"
#include "support.hpp"

using namespace sgcor;

namespace {

using Mat = std::array<double, 4>;  // row-major 2x2

Mat mat(const ScatterMatrix2& s) { return {s.g11(), s.g12(), s.g12(), s.g22()}; }

Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat transpose(const Mat& a) { return {a[0], a[2], a[1], a[3]}; }

double frob(const Mat& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]); }

double rel_diff(const Mat& a, const Mat& b) {
  return frob({a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}) / frob(b);
}

BivariateSample normal_sample(std::size_t n, double rho, std::uint64_t seed) {
  return sample_elliptical(EllipticalModelSpec::normal(ScatterMatrix2::from_correlation(rho)), n,
                           RngStream{seed, 0});
}

BivariateSample map(const BivariateSample& s, const Mat& a, double b1, double b2) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto p = s.point(i);
    x.push_back(a[0] * p[0] + a[1] * p[1] + b1);
    y.push_back(a[2] * p[0] + a[3] * p[1] + b2);
  }
  return validate_sample(x, y);
}

ErrorCode code_of(const BivariateSample& s) {
  try {
    iterate_gini_scatter(s);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::DomainError;
}

}  // namespace

TEST(SpdSqrt, Examples) {
  EXPECT_EQ(spd_sqrt(ScatterMatrix2::identity()), ScatterMatrix2::identity());
  const auto d = spd_sqrt({4.0, 0.0, 9.0});
  EXPECT_NEAR(d.g11(), 2.0, 1e-15);
  EXPECT_NEAR(d.g12(), 0.0, 1e-15);
  EXPECT_NEAR(d.g22(), 3.0, 1e-15);
  for (const auto& m : {ScatterMatrix2{2.0, 0.7, 1.0}, ScatterMatrix2{5.0, -4.9, 5.0},
                        ScatterMatrix2{1e-3, 2e-4, 3.0}}) {
    const auto s = spd_sqrt(m);
    EXPECT_LE(rel_diff(mul(mat(s), mat(s)), mat(m)) * frob(mat(m)), 1e-12);
  }
}

TEST(FixedPointConfig, Validate) {
  EXPECT_NO_THROW(FixedPointConfig{}.validate());
  EXPECT_THROW((FixedPointConfig{0.0, 10}.validate()), Error);
  EXPECT_THROW((FixedPointConfig{-1.0, 10}.validate()), Error);
  EXPECT_THROW((FixedPointConfig{1e-8, 0}.validate()), Error);
}

TEST(GiniScatter, DegenerateSamples) {
  EXPECT_EQ(code_of(validate_sample(std::vector<double>{1, 1, 1}, std::vector<double>{2, 2, 2})),
            ErrorCode::DegenerateSample);
  EXPECT_EQ(code_of(validate_sample(std::vector<double>{1, 2, 3, 4},
                                    std::vector<double>{3, 5, 7, 9})),
            ErrorCode::DegenerateSample);
  EXPECT_EQ(code_of(validate_sample(std::vector<double>{0, 1, 0, 1},
                                    std::vector<double>{0, -1, 0, -1})),
            ErrorCode::DegenerateSample);
}

TEST(GiniScatter, NormalOffDiagonalNearZero) {
  const auto s = normal_sample(4000, 0.0, 11);
  const auto r = fit_gini_scatter(s);
  EXPECT_TRUE(r.converged);
  // sd of a correlation estimate at n = 4000 is about 0.016.
  EXPECT_LE(std::abs(r.sigma.correlation()), 3 * 0.016);
}

TEST(GiniScatter, ConvergedReportSatisfiesFixedPoint) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing_support::sample_of(testing_support::random_columns(gen, 20 + trial, 0.6));
    const FixedPointConfig cfg;
    const auto r = fit_gini_scatter(s, cfg);
    ASSERT_TRUE(r.converged);
    EXPECT_LT(r.final_residual, cfg.tolerance);
    EXPECT_LE(r.iterations, cfg.max_iterations);
    const auto next = gini_scatter_update(s, r.sigma);
    EXPECT_LT(rel_diff(mat(next), mat(r.sigma)), cfg.tolerance);
    EXPECT_GT(r.sigma.determinant(), 0.0);
    EXPECT_LE(std::abs(r.correlation().value), 1.0);
    EXPECT_EQ(r.diagnostics().iterations, r.iterations);
  }
}

TEST(GiniScatter, AffineEquivariance) {
  const auto s = normal_sample(300, 0.4, 5);
  const Mat a{1.5, -0.4, 0.3, 2.0};
  const FixedPointConfig cfg{1e-12, 500};
  const auto base = fit_gini_scatter(s, cfg);
  const auto moved = fit_gini_scatter(map(s, a, 3.0, -7.0), cfg);
  const auto expected = mul(mul(a, mat(base.sigma)), transpose(a));
  EXPECT_LT(rel_diff(mat(moved.sigma), expected), 10 * 1e-10);
}

TEST(AffineSymmetricGini, SignRuleAndSwap) {
  const auto s = normal_sample(200, 0.6, 9);
  const FixedPointConfig cfg;
  const double g = affine_symmetric_gini(s, cfg).value;
  const double scaled = affine_symmetric_gini(map(s, {2.0, 0.0, 0.0, -3.0}, 0.0, 0.0), cfg).value;
  EXPECT_NEAR(scaled, -g, 10 * cfg.tolerance);
  EXPECT_NEAR(affine_symmetric_gini(s.swapped(), cfg).value, g, 10 * cfg.tolerance);
  EXPECT_EQ(affine_symmetric_gini(s, cfg).estimator, Estimator::affine_symmetric_gini);
}

TEST(AffineSymmetricGini, ConsistentUnderNormalModel) {
  const auto s = normal_sample(5000, 0.5, 3);
  EXPECT_NEAR(affine_symmetric_gini(s).value, 0.5, 3 * 0.011);
}

TEST(GiniScatter, NonConvergenceCarriesReport) {
  const auto s = normal_sample(100, 0.3, 1);
  const FixedPointConfig cfg{1e-15, 2};
  try {
    fit_gini_scatter(s, cfg);
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
    EXPECT_FALSE(e.report().converged);
    EXPECT_EQ(e.report().iterations, 2u);
    EXPECT_GT(e.report().final_residual, 0.0);
  }
  const auto r = iterate_gini_scatter(s, cfg);
  EXPECT_FALSE(r.converged);
}

TEST(AffineSymmetricGini, IrisSetosaSepals) {
  const auto s = iris::pair_sample(iris::Group::setosa, iris::Variable::sepal_length,
                                   iris::Variable::sepal_width);
  EXPECT_NEAR(affine_symmetric_gini(s).value, 0.742, 0.005);
}
