#pragma once

#include <random>
#include <vector>

#include "sgcor/core.hpp"

namespace testing_support {

struct Columns {
  std::vector<double> x, y;
};

/// Correlated Gaussian-ish columns from the standard library generator.
inline Columns random_columns(std::mt19937_64& gen, std::size_t n, double rho = 0.4) {
  std::normal_distribution<double> z;
  Columns c;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = z(gen), b = z(gen);
    c.x.push_back(a);
    c.y.push_back(rho * a + std::sqrt(1.0 - rho * rho) * b);
  }
  return c;
}

/// Small integers, so ties and coincident points are common.
inline Columns tied_columns(std::mt19937_64& gen, std::size_t n, int levels = 4) {
  std::uniform_int_distribution<int> u(0, levels - 1);
  Columns c;
  for (std::size_t i = 0; i < n; ++i) {
    c.x.push_back(u(gen));
    c.y.push_back(u(gen));
  }
  return c;
}

inline sgcor::BivariateSample sample_of(const Columns& c) {
  return sgcor::validate_sample(c.x, c.y);
}

}  // namespace testing_support
