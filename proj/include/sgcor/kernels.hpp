#pragma once

// Pairwise O(n^2) kernels shared by the estimators, the asymptotic-variance
// plug-ins and the affine fixed point.
//
// Two implementations with identical contracts:
//   sgcor::kernels          OpenMP. Upper-triangle reductions are split into
//                           fixed blocks of rows whose partial sums are merged
//                           in block order, so the result depends on n only,
//                           never on the thread count.
//   sgcor::kernels::serial  Plain nested loops, kept as the reference the
//                           parallel path is tested and benchmarked against.
//
// Coincident points (dx == dy == 0) contribute nothing to any spatial kernel.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sgcor::kernels {

/// How tied y values order a pair in the regular Gini numerator.
enum class TieBreak {
  midrank,            // sgn(0) = 0; invariant under reordering observations
  observation_order,  // earlier observation ranks lower (ordinal ranks)
};

/// Sums over i < j of dx^2/d, dx*dy/d and dy^2/d with d = |z_i - z_j|.
struct SpatialSums {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

/// Sums over i < j of (x_i - x_j) sgn(y_i - y_j) and |x_i - x_j|.
struct GiniSums {
  double cross = 0.0;
  double spread = 0.0;
};

/// score = concordant - discordant pairs; ties_x / ties_y count pairs tied in
/// that coordinate (jointly tied pairs are counted in both).
struct ConcordanceCounts {
  std::int64_t score = 0;
  std::int64_t pairs = 0;
  std::int64_t ties_x = 0;
  std::int64_t ties_y = 0;
};

/// Per-observation spatial terms: l1[i] = (1/n) sum_j 2 dx^2 / d and likewise
/// l2 (2 dx dy / d) and l3 (2 dy^2 / d), evaluated at z_i.
struct SpatialRows {
  std::vector<double> l1, l2, l3;
};

/// Per-observation regular Gini projections: h1[i] and h2[i] are averages over
/// j != i of [(x_i - x_j) sgn(y_i - y_j)] / 4 and |x_i - x_j| / 4.
struct GiniRows {
  std::vector<double> h1, h2;
};

/// Sums over i < j of D D^T / sqrt(D^T W D), D = z_i - z_j, for a symmetric W.
struct ScatterSums {
  double s11 = 0.0;
  double s12 = 0.0;
  double s22 = 0.0;
  std::size_t pairs_used = 0;
};

/// Symmetric 2x2 weight [[w11, w12], [w12, w22]].
struct Weight2 {
  double w11, w12, w22;
};

SpatialSums spatial_sums(std::span<const double> xs, std::span<const double> ys);
GiniSums gini_sums(std::span<const double> xs, std::span<const double> ys, TieBreak ties);
ConcordanceCounts concordance(std::span<const double> xs, std::span<const double> ys);
SpatialRows spatial_rows(std::span<const double> xs, std::span<const double> ys);
GiniRows gini_rows(std::span<const double> xs, std::span<const double> ys);
/// rows[i] = average over j != i of sgn((x_j - x_i)(y_j - y_i)).
std::vector<double> concordance_rows(std::span<const double> xs, std::span<const double> ys);
ScatterSums scatter_sums(std::span<const double> xs, std::span<const double> ys, Weight2 w);

namespace serial {

SpatialSums spatial_sums(std::span<const double> xs, std::span<const double> ys);
GiniSums gini_sums(std::span<const double> xs, std::span<const double> ys, TieBreak ties);
ConcordanceCounts concordance(std::span<const double> xs, std::span<const double> ys);
SpatialRows spatial_rows(std::span<const double> xs, std::span<const double> ys);
GiniRows gini_rows(std::span<const double> xs, std::span<const double> ys);
std::vector<double> concordance_rows(std::span<const double> xs, std::span<const double> ys);
ScatterSums scatter_sums(std::span<const double> xs, std::span<const double> ys, Weight2 w);

}  // namespace serial

}  // namespace sgcor::kernels
