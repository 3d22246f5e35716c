#pragma once

// Published reference numbers used by the iris tests and the acceptance runner.

#include <array>

namespace reference {

// Iris means and standard deviations. Index: [variable][group], groups in
// iris::kGroups order, variables in iris::kVariables order.
inline constexpr std::array<std::array<double, 4>, 4> kIrisMean{{
    {5.843, 5.006, 5.936, 6.588},
    {3.057, 3.428, 2.770, 2.974},
    {3.758, 1.462, 4.260, 5.552},
    {1.199, 0.246, 1.326, 2.026},
}};
inline constexpr std::array<std::array<double, 4>, 4> kIrisSd{{
    {0.828, 0.352, 0.516, 0.636},
    {0.436, 0.379, 0.314, 0.322},
    {1.765, 0.174, 0.470, 0.552},
    {0.762, 0.105, 0.198, 0.275},
}};

// Iris correlations per species (kSpecies order) and pair (kPairs order).
struct IrisCorrelations {
  std::array<double, 6> pearson, tau, affine_gini, gini_xy, gini_yx;
};
inline constexpr std::array<IrisCorrelations, 3> kIrisCorrelations{{
    {{0.743, 0.267, 0.278, 0.178, 0.233, 0.332},
     {0.597, 0.217, 0.231, 0.143, 0.234, 0.222},
     {0.742, 0.274, 0.285, 0.182, 0.256, 0.312},
     {0.759, 0.283, 0.261, 0.211, 0.214, 0.280},
     {0.781, 0.295, 0.358, 0.174, 0.350, 0.384}},
    {{0.526, 0.754, 0.546, 0.561, 0.664, 0.787},
     {0.398, 0.567, 0.403, 0.430, 0.551, 0.646},
     {0.546, 0.756, 0.551, 0.584, 0.687, 0.790},
     {0.533, 0.744, 0.542, 0.580, 0.658, 0.787},
     {0.523, 0.766, 0.559, 0.572, 0.682, 0.809}},
    {{0.457, 0.864, 0.281, 0.401, 0.538, 0.322},
     {0.307, 0.670, 0.219, 0.291, 0.419, 0.271},
     {0.687, 0.820, 0.455, 0.621, 0.623, 0.519},
     {0.406, 0.867, 0.278, 0.467, 0.567, 0.304},
     {0.476, 0.832, 0.315, 0.308, 0.548, 0.355}},
}};

// Normal-model efficiencies at rho = 0.1, 0.5, 0.9: ARE of the corrected
// symmetric Gini, regular Gini and tau-based estimators against Pearson, and
// the Pearson asymptotic variance.
struct AreEntry {
  double rho, are_gini, are_gamma, are_tau, asv_pearson;
};
inline constexpr std::array<AreEntry, 3> kNormalAre{{
    {0.1, 0.9321, 0.9558, 0.9125, 0.9816},
    {0.5, 0.9769, 0.9398, 0.8925, 0.5631},
    {0.9, 0.9601, 0.9004, 0.8439, 0.0361},
}};

// sqrt(n) RMSE at n = 300 (mean, sd over repeats) for the corrected symmetric
// Gini, regular Gini, tau-based and Pearson estimators.
struct RmseEntry {
  double rho;
  std::array<double, 4> mean, sd;
};
inline constexpr std::array<RmseEntry, 3> kNormalRmse300{{
    {0.1, {0.9648, 1.0184, 1.0427, 0.9925}, {0.0104, 0.0121, 0.0139, 0.0121}},
    {0.5, {0.7638, 0.7777, 0.8002, 0.7534}, {0.0087, 0.0104, 0.0104, 0.0104}},
    {0.9, {0.1957, 0.2026, 0.2113, 0.1923}, {0.0017, 0.0035, 0.0035, 0.0017}},
}};
inline constexpr RmseEntry kT3Rmse300Rho05{0.5, {1.1068, 1.2142, 0.9284, 2.1876},
                                           {0.0173, 0.0208, 0.0121, 0.0675}};
inline constexpr RmseEntry kT1Rmse300Rho05{0.5, {4.2574, 5.9357, 1.0999, 9.1781},
                                           {0.0485, 0.1057, 0.0156, 0.1472}};

}  // namespace reference
