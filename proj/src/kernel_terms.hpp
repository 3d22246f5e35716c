#pragma once

// Per-pair terms shared by the OpenMP and serial kernels.

#include <cmath>

#include "sgcor/kernels.hpp"

namespace sgcor::kernels::detail {

inline double sign(double v) noexcept { return static_cast<double>((v > 0.0) - (v < 0.0)); }

/// Sign of y_i - y_j for i < j under the requested tie convention.
inline double ordered_sign(double dy, TieBreak ties) noexcept {
  if (dy != 0.0 || ties == TieBreak::midrank) return sign(dy);
  return -1.0;  // tie: the earlier observation (i) ranks below j
}

/// Euclidean norm; plain sqrt unless the squared sum leaves the normal range,
/// which is several times faster than std::hypot.
inline double distance(double dx, double dy) noexcept {
  const double s = dx * dx + dy * dy;
  if (s > 1e-290 && s < 1e290) return std::sqrt(s);
  return std::hypot(dx, dy);
}

struct SpatialTerm {
  double xx, xy, yy;
};

/// Returns false for coincident points, which contribute nothing.
inline bool spatial_term(double dx, double dy, SpatialTerm& out) noexcept {
  if (dx == 0.0 && dy == 0.0) return false;
  const double inv = 1.0 / distance(dx, dy);
  out = {dx * dx * inv, dx * dy * inv, dy * dy * inv};
  return true;
}

inline bool scatter_term(double dx, double dy, const Weight2& w, SpatialTerm& out) noexcept {
  if (dx == 0.0 && dy == 0.0) return false;
  const double q = w.w11 * dx * dx + 2.0 * w.w12 * dx * dy + w.w22 * dy * dy;
  const double inv = 1.0 / std::sqrt(q);
  out = {dx * dx * inv, dx * dy * inv, dy * dy * inv};
  return true;
}

}  // namespace sgcor::kernels::detail
