#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sgcor/affine.hpp"
#include "sgcor/core.hpp"

namespace sgcor::iris {

/// Fisher's Iris measurements (cm), compiled into the library from
/// data/iris.csv. The build refuses a file whose SHA-256 differs from kSha256.
extern const std::string_view kSha256;

enum class Group { all, setosa, versicolor, virginica };
enum class Variable { sepal_length, sepal_width, petal_length, petal_width };

inline constexpr std::array<Group, 4> kGroups{Group::all, Group::setosa, Group::versicolor,
                                              Group::virginica};
inline constexpr std::array<Group, 3> kSpecies{Group::setosa, Group::versicolor,
                                               Group::virginica};
inline constexpr std::array<Variable, 4> kVariables{
    Variable::sepal_length, Variable::sepal_width, Variable::petal_length, Variable::petal_width};

/// The six unordered variable pairs in the usual column order.
inline constexpr std::array<std::array<Variable, 2>, 6> kPairs{{
    {Variable::sepal_length, Variable::sepal_width},
    {Variable::sepal_length, Variable::petal_length},
    {Variable::sepal_length, Variable::petal_width},
    {Variable::sepal_width, Variable::petal_length},
    {Variable::sepal_width, Variable::petal_width},
    {Variable::petal_length, Variable::petal_width},
}};

std::string_view to_string(Group g);
std::string_view to_string(Variable v);
/// DomainError for unknown names.
Group parse_group(std::string_view name);
Variable parse_variable(std::string_view name);

/// Raw embedded CSV text.
std::string_view csv_text();

/// Measurements of one variable for a group, in file order.
std::span<const double> column(Group g, Variable v);

BivariateSample pair_sample(Group g, Variable x, Variable y);

struct Summary {
  Group group;
  Variable variable;
  double mean;
  double sd;  // divisor n - 1
};

/// Mean and standard deviation for every group and variable (16 rows).
std::vector<Summary> summaries();

struct CorrelationRow {
  Group group;
  Variable x;
  Variable y;
  double pearson;
  double kendall_tau;
  double affine_gini;
  double gini_xy;
  double gini_yx;
  AffineDiagnostics affine;
};

/// Pearson, Kendall tau-b, the affine symmetric Gini correlation and both regular
/// Gini correlations. The regular Gini uses ordinal ranks for ties (earlier
/// observation ranks lower), as the published table does.
CorrelationRow correlations(Group g, Variable x, Variable y, const FixedPointConfig& config = {});

}  // namespace sgcor::iris
