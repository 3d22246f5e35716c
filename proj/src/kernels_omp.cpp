#include <omp.h>

#include <algorithm>
#include <array>
#include <cstdint>

#include "kernel_terms.hpp"
#include "sgcor/kernels.hpp"
#include "sgcor/summation.hpp"

namespace sgcor::kernels {

namespace {

// Rows per reduction block. Fixed so the merge order depends on n alone.
constexpr std::size_t kBlockRows = 32;

template <std::size_t K, class Term>
std::array<double, K> reduce_upper(std::size_t n, Term&& term) {
  const std::size_t blocks = (n + kBlockRows - 1) / kBlockRows;
  std::vector<std::array<NeumaierSum, K>> partial(blocks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    auto& acc = partial[static_cast<std::size_t>(b)];
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockRows;
    const std::size_t hi = std::min(n, lo + kBlockRows);
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) term(i, j, acc);
    }
  }

  std::array<NeumaierSum, K> total{};
  for (const auto& block : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k].merge(block[k]);
  }
  std::array<double, K> out{};
  for (std::size_t k = 0; k < K; ++k) out[k] = total[k].value();
  return out;
}

}  // namespace

SpatialSums spatial_sums(std::span<const double> xs, std::span<const double> ys) {
  const auto s = reduce_upper<3>(xs.size(), [&](std::size_t i, std::size_t j, auto& acc) {
    detail::SpatialTerm t;
    if (!detail::spatial_term(xs[i] - xs[j], ys[i] - ys[j], t)) return;
    acc[0].add(t.xx);
    acc[1].add(t.xy);
    acc[2].add(t.yy);
  });
  return {s[0], s[1], s[2]};
}

GiniSums gini_sums(std::span<const double> xs, std::span<const double> ys, TieBreak ties) {
  const auto s = reduce_upper<2>(xs.size(), [&](std::size_t i, std::size_t j, auto& acc) {
    const double dx = xs[i] - xs[j];
    acc[0].add(dx * detail::ordered_sign(ys[i] - ys[j], ties));
    acc[1].add(std::abs(dx));
  });
  return {s[0], s[1]};
}

ConcordanceCounts concordance(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<std::int64_t>(xs.size());
  std::int64_t score = 0, ties_x = 0, ties_y = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : score, ties_x, ties_y)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      ties_x += dx == 0.0;
      ties_y += dy == 0.0;
      score += static_cast<std::int64_t>(detail::sign(dx) * detail::sign(dy));
    }
  }
  return {score, n * (n - 1) / 2, ties_x, ties_y};
}

SpatialRows spatial_rows(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  SpatialRows rows{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  const double scale = 2.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
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
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
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
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      s += static_cast<std::int64_t>(detail::sign(xs[j] - xs[i]) * detail::sign(ys[j] - ys[i]));
    }
    rows[i] = scale * static_cast<double>(s);
  }
  return rows;
}

ScatterSums scatter_sums(std::span<const double> xs, std::span<const double> ys, Weight2 w) {
  const auto s = reduce_upper<4>(xs.size(), [&](std::size_t i, std::size_t j, auto& acc) {
    detail::SpatialTerm t;
    if (!detail::scatter_term(xs[i] - xs[j], ys[i] - ys[j], w, t)) return;
    acc[0].add(t.xx);
    acc[1].add(t.xy);
    acc[2].add(t.yy);
    acc[3].add(1.0);
  });
  return {s[0], s[1], s[2], static_cast<std::size_t>(s[3])};
}

}  // namespace sgcor::kernels
