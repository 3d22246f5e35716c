#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "reference_values.hpp"
#include "sgcor/estimators.hpp"
#include "sgcor/iris.hpp"

using namespace sgcor;

TEST(Iris, Counts) {
  for (auto v : iris::kVariables) {
    EXPECT_EQ(iris::column(iris::Group::all, v).size(), 150u);
    for (auto g : iris::kSpecies) EXPECT_EQ(iris::column(g, v).size(), 50u);
  }
  EXPECT_EQ(iris::summaries().size(), 16u);
  EXPECT_EQ(std::string(iris::kSha256).size(), 64u);
  EXPECT_FALSE(iris::csv_text().empty());
}

TEST(Iris, FirstRowMatchesFile) {
  EXPECT_EQ(iris::column(iris::Group::all, iris::Variable::sepal_length)[0], 5.1);
  EXPECT_EQ(iris::column(iris::Group::all, iris::Variable::sepal_width)[0], 3.5);
  EXPECT_EQ(iris::column(iris::Group::setosa, iris::Variable::petal_length)[0], 1.4);
  EXPECT_EQ(iris::column(iris::Group::virginica, iris::Variable::petal_width)[49], 1.8);
}

TEST(Iris, Parsing) {
  EXPECT_EQ(iris::parse_group("versicolor"), iris::Group::versicolor);
  EXPECT_EQ(iris::parse_variable("petal_width"), iris::Variable::petal_width);
  EXPECT_EQ(iris::to_string(iris::Variable::sepal_width), "sepal_width");
  EXPECT_THROW(iris::parse_group("rose"), Error);
  EXPECT_THROW(iris::parse_variable("stem"), Error);
}

TEST(Iris, SummaryTable) {
  for (const auto& s : iris::summaries()) {
    const auto vi = static_cast<std::size_t>(s.variable);
    const auto gi = static_cast<std::size_t>(s.group);
    EXPECT_NEAR(s.mean, reference::kIrisMean[vi][gi], 5e-4 + 1e-12)
        << iris::to_string(s.group) << " " << iris::to_string(s.variable);
    EXPECT_NEAR(s.sd, reference::kIrisSd[vi][gi], 5e-4 + 1e-12)
        << iris::to_string(s.group) << " " << iris::to_string(s.variable);
  }
}

TEST(Iris, SetosaSepalRow) {
  const auto r = iris::correlations(iris::Group::setosa, iris::Variable::sepal_length,
                                    iris::Variable::sepal_width);
  EXPECT_NEAR(r.pearson, 0.743, 5e-4);
  EXPECT_NEAR(r.kendall_tau, 0.597, 5e-4);
  EXPECT_NEAR(r.gini_xy, 0.759, 5e-4);
  EXPECT_NEAR(r.gini_yx, 0.781, 5e-4);
  EXPECT_TRUE(r.affine.converged);
}

TEST(Iris, ClassicalColumnsOfCorrelationTable) {
  for (std::size_t g = 0; g < iris::kSpecies.size(); ++g) {
    for (std::size_t p = 0; p < iris::kPairs.size(); ++p) {
      const auto r = iris::correlations(iris::kSpecies[g], iris::kPairs[p][0], iris::kPairs[p][1]);
      const auto& ref = reference::kIrisCorrelations[g];
      const std::string where =
          std::string(iris::to_string(iris::kSpecies[g])) + " pair " + std::to_string(p);
      EXPECT_NEAR(r.pearson, ref.pearson[p], 5e-4 + 1e-12) << where;
      EXPECT_NEAR(r.kendall_tau, ref.tau[p], 5e-4 + 1e-12) << where;
      EXPECT_NEAR(r.gini_xy, ref.gini_xy[p], 5e-4 + 1e-12) << where;
      EXPECT_NEAR(r.gini_yx, ref.gini_yx[p], 5e-4 + 1e-12) << where;
    }
  }
}
