#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "sgcor/core.hpp"

using namespace sgcor;

namespace {

ErrorCode code_of(const std::vector<double>& xs, const std::vector<double>& ys) {
  try {
    validate_sample(xs, ys);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::DomainError;
}

}  // namespace

TEST(ValidateSample, AcceptsWellFormedInput) {
  const std::vector<double> xs{1, 2, 3}, ys{4, 5, 6};
  const auto s = validate_sample(xs, ys);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.point(2), (Point2{3, 6}));
  EXPECT_FALSE(s.x_constant());
}

TEST(ValidateSample, RejectsBadInput) {
  EXPECT_EQ(code_of({1, 2}, {4}), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of({1}, {4}), ErrorCode::TooFewPoints);
  EXPECT_EQ(code_of({}, {}), ErrorCode::TooFewPoints);
  EXPECT_EQ(code_of({1, std::numeric_limits<double>::infinity()}, {4, 5}),
            ErrorCode::NonFiniteValue);
}

TEST(ValidateSample, NonFiniteReportsIndex) {
  const std::vector<double> xs{1, std::nan("")}, ys{4, 5};
  try {
    validate_sample(xs, ys);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteValue);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

// Any finite equal-length input with n >= 2 validates; anything else yields
// one of the three declared errors.
TEST(ValidateSample, ConstructionIsTotal) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> len(0, 6), pick(0, 9);
  const double specials[] = {std::nan(""), std::numeric_limits<double>::infinity(), -1e308, 0.0};
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> xs(len(gen)), ys(len(gen));
    bool finite = true;
    for (auto* v : {&xs, &ys}) {
      for (auto& e : *v) {
        const int k = pick(gen);
        e = k < 4 ? specials[k] : static_cast<double>(k);
        finite = finite && std::isfinite(e);
      }
    }
    const bool ok = xs.size() == ys.size() && xs.size() >= 2 && finite;
    try {
      validate_sample(xs, ys);
      EXPECT_TRUE(ok);
    } catch (const Error& e) {
      EXPECT_FALSE(ok);
      EXPECT_TRUE(e.code() == ErrorCode::LengthMismatch || e.code() == ErrorCode::TooFewPoints ||
                  e.code() == ErrorCode::NonFiniteValue);
    }
  }
}

TEST(ValidateSample, ConstantColumns) {
  const std::vector<double> xs{1, 1, 1}, ys{1, 2, 3};
  const auto s = validate_sample(xs, ys);
  EXPECT_TRUE(s.x_constant());
  EXPECT_FALSE(s.y_constant());
  EXPECT_THROW(require_nonconstant(s), Error);
  EXPECT_TRUE(s.swapped().y_constant());
}

TEST(ScatterMatrix2, PositiveDefiniteCheck) {
  EXPECT_NO_THROW(ScatterMatrix2::identity());
  EXPECT_THROW(ScatterMatrix2::from_correlation(1.0), Error);
  EXPECT_THROW(ScatterMatrix2::from_correlation(-1.0), Error);
  EXPECT_THROW(ScatterMatrix2(0.0, 0.0, 1.0), Error);
  EXPECT_THROW(ScatterMatrix2(1.0, std::nan(""), 1.0), Error);
  const auto m = ScatterMatrix2::from_correlation(0.5, 2.0, 3.0);
  EXPECT_DOUBLE_EQ(m.g11(), 4.0);
  EXPECT_DOUBLE_EQ(m.g12(), 3.0);
  EXPECT_DOUBLE_EQ(m.g22(), 9.0);
  EXPECT_DOUBLE_EQ(m.correlation(), 0.5);
  EXPECT_DOUBLE_EQ(m.determinant(), 27.0);
}

TEST(CorrelationValue, ClampsRoundoffAndRejectsNaN) {
  EXPECT_EQ(CorrelationValue::make(Estimator::pearson, 1.0 + 1e-15).value, 1.0);
  EXPECT_EQ(CorrelationValue::make(Estimator::pearson, -1.0 - 1e-15).value, -1.0);
  EXPECT_EQ(CorrelationValue::make(Estimator::kendall_tau, 0.25).estimator, Estimator::kendall_tau);
  try {
    CorrelationValue::make(Estimator::pearson, std::nan(""));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Estimator, NamesRoundTrip) {
  EXPECT_EQ(all_estimators().size(), 8u);
  for (Estimator e : all_estimators()) EXPECT_EQ(parse_estimator(to_string(e)), e);
  EXPECT_THROW(parse_estimator("spearman"), Error);
}

TEST(EllipticalModelSpec, ValidatesAndLabels) {
  EXPECT_THROW(EllipticalModelSpec::student_t(0.0, ScatterMatrix2::identity()), Error);
  EXPECT_THROW(EllipticalModelSpec::student_t(-2.0, ScatterMatrix2::identity()), Error);
  EXPECT_EQ(EllipticalModelSpec::student_t(5.0, ScatterMatrix2::identity()).label(), "t5");
  EXPECT_EQ(EllipticalModelSpec::normal(ScatterMatrix2::identity()).label(), "normal");
  EXPECT_EQ(EllipticalModelSpec::kotz(ScatterMatrix2::identity()).label(), "kotz");
  EXPECT_EQ(parse_family("t"), Family::student_t);
  EXPECT_THROW(parse_family("cauchy"), Error);
  EllipticalModelSpec bad = EllipticalModelSpec::normal(ScatterMatrix2::identity());
  bad.mu = {std::nan(""), 0.0};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Error, MessageCarriesCodeName) {
  const Error e(ErrorCode::DegenerateColumn, "x column is constant");
  EXPECT_EQ(std::string(e.what()), "DegenerateColumn: x column is constant");
  EXPECT_EQ(to_string(ErrorCode::NonConvergence), "NonConvergence");
}

TEST(EstimateReport, FindsEntries) {
  EstimateReport r;
  r.entries.push_back({CorrelationValue::make(Estimator::pearson, 0.5), 0.1});
  ASSERT_NE(r.find(Estimator::pearson), nullptr);
  EXPECT_EQ(r.find(Estimator::kendall_tau), nullptr);
}
