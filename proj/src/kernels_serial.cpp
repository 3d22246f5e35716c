#include <cstdint>

#include "kernel_terms.hpp"
#include "sgcor/kernels.hpp"
#include "sgcor/summation.hpp"

namespace sgcor::kernels::serial {

SpatialSums spatial_sums(std::span<const double> xs, std::span<const double> ys) {
  NeumaierSum a, b, c;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      detail::SpatialTerm t;
      if (!detail::spatial_term(xs[i] - xs[j], ys[i] - ys[j], t)) continue;
      a.add(t.xx);
      b.add(t.xy);
      c.add(t.yy);
    }
  }
  return {a.value(), b.value(), c.value()};
}

GiniSums gini_sums(std::span<const double> xs, std::span<const double> ys, TieBreak ties) {
  NeumaierSum cross, spread;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double dx = xs[i] - xs[j];
      cross.add(dx * detail::ordered_sign(ys[i] - ys[j], ties));
      spread.add(std::abs(dx));
    }
  }
  return {cross.value(), spread.value()};
}

ConcordanceCounts concordance(std::span<const double> xs, std::span<const double> ys) {
  ConcordanceCounts c;
  const auto n = static_cast<std::int64_t>(xs.size());
  c.pairs = n * (n - 1) / 2;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      c.ties_x += dx == 0.0;
      c.ties_y += dy == 0.0;
      c.score += static_cast<std::int64_t>(detail::sign(dx) * detail::sign(dy));
    }
  }
  return c;
}

SpatialRows spatial_rows(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  SpatialRows rows{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    NeumaierSum a, b, c;
    for (std::size_t j = 0; j < n; ++j) {
      detail::SpatialTerm t;
      if (!detail::spatial_term(xs[i] - xs[j], ys[i] - ys[j], t)) continue;
      a.add(t.xx);
      b.add(t.xy);
      c.add(t.yy);
    }
    rows.l1[i] = scale * a.value();
    rows.l2[i] = scale * b.value();
    rows.l3[i] = scale * c.value();
  }
  return rows;
}

GiniRows gini_rows(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  GiniRows rows{std::vector<double>(n), std::vector<double>(n)};
  const double scale = 0.25 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    NeumaierSum a, b;
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      a.add(dx * detail::sign(ys[i] - ys[j]));
      b.add(std::abs(dx));
    }
    rows.h1[i] = scale * a.value();
    rows.h2[i] = scale * b.value();
  }
  return rows;
}

std::vector<double> concordance_rows(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  std::vector<double> rows(n);
  const double scale = 1.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      s += static_cast<std::int64_t>(detail::sign(xs[j] - xs[i]) * detail::sign(ys[j] - ys[i]));
    }
    rows[i] = scale * static_cast<double>(s);
  }
  return rows;
}

ScatterSums scatter_sums(std::span<const double> xs, std::span<const double> ys, Weight2 w) {
  NeumaierSum a, b, c;
  std::size_t used = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      detail::SpatialTerm t;
      if (!detail::scatter_term(xs[i] - xs[j], ys[i] - ys[j], w, t)) continue;
      a.add(t.xx);
      b.add(t.xy);
      c.add(t.yy);
      ++used;
    }
  }
  return {a.value(), b.value(), c.value(), used};
}

}  // namespace sgcor::kernels::serial
