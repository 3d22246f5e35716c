#include "sgcor/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sgcor/core.hpp"

namespace sgcor {

namespace {

struct AgmResult {
  double k;       // K(m)
  double series;  // S = sum_{n>=0} 2^{n-1} c_n^2, so that E = K (1 - S)
  double tail;    // S - m/2
};

// Arithmetic-geometric mean with a_0 = 1, b_0 = sqrt(mc), c_0^2 = m, where
// mc = 1 - m is passed separately to keep precision near m = 1.
AgmResult agm(double m, double mc) {
  double a = 1.0;
  double b = std::sqrt(mc);
  double c2 = m;
  double weight = 0.5;
  double tail = 0.0;
  for (int it = 0; it < 64; ++it) {
    const double a_next = 0.5 * (a + b);
    const double b_next = std::sqrt(a * b);
    const double c_next = c2 / (4.0 * a_next);  // (a - b)/2 without cancellation
    a = a_next;
    b = b_next;
    c2 = c_next * c_next;
    weight *= 2.0;
    tail += weight * c2;
    if (c2 <= 1e-34 * a * a || weight * c2 <= 1e-17 * (0.5 * m + tail)) break;
  }
  return {std::numbers::pi / (2.0 * a), 0.5 * m + tail, tail};
}

// k on (0, 1) without the 1/rho cancellation:
//   k = (r - S) / (r (1 - S)),  r - S = r^2/(1 + r) - tail.
double k_positive(double r) {
  const double m = 2.0 * r / (r + 1.0);
  const double mc = (1.0 - r) / (1.0 + r);
  const AgmResult g = agm(m, mc);
  return (r * r / (1.0 + r) - g.tail) / (r * (1.0 - g.series));
}

constexpr double kNearZero = 1e-4;

double k_near_zero(double r) {
  // Odd quartic interpolant through 0, +-h, +-2h reduces to c1 r + c3 r^3.
  const double h = kNearZero;
  const double a = k_positive(h);
  const double b = k_positive(2.0 * h);
  const double c1 = (8.0 * a - b) / (6.0 * h);
  const double c3 = (b - 2.0 * a) / (6.0 * h * h * h);
  return r * (c1 + c3 * r * r);
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::DomainError, std::string(what) + " is not finite");
}

}  // namespace

double complete_elliptic_first(double m) {
  require_finite(m, "m");
  if (m < 0.0 || m >= 1.0) {
    throw Error(ErrorCode::DomainError, "K(m) requires 0 <= m < 1, got " + std::to_string(m));
  }
  return agm(m, 1.0 - m).k;
}

double complete_elliptic_second(double m) {
  require_finite(m, "m");
  if (m < 0.0 || m > 1.0) {
    throw Error(ErrorCode::DomainError, "E(m) requires 0 <= m <= 1, got " + std::to_string(m));
  }
  if (m == 1.0) return 1.0;
  const AgmResult g = agm(m, 1.0 - m);
  return g.k * (1.0 - g.series);
}

double k_of_rho(double rho) {
  require_finite(rho, "rho");
  if (std::abs(rho) > 1.0) {
    throw Error(ErrorCode::DomainError, "k(rho) requires |rho| <= 1, got " + std::to_string(rho));
  }
  if (rho == 0.0 || std::abs(rho) == 1.0) return rho;
  const double r = std::abs(rho);
  const double k = r < kNearZero ? k_near_zero(r) : k_positive(r);
  return std::copysign(k, rho);
}

double k_derivative(double rho) {
  require_finite(rho, "rho");
  if (std::abs(rho) >= 1.0) {
    throw Error(ErrorCode::DomainError, "k'(rho) requires |rho| < 1");
  }
  const double h = std::min(1e-6, 0.5 * (1.0 - std::abs(rho)));
  return (k_of_rho(rho + h) - k_of_rho(rho - h)) / (2.0 * h);
}

double k_derivative_closed_form(double rho) {
  require_finite(rho, "rho");
  if (std::abs(rho) >= 1.0 || rho == 0.0) {
    throw Error(ErrorCode::DomainError, "closed-form k'(rho) requires 0 < |rho| < 1");
  }
  const double r = std::abs(rho);
  const double m = 2.0 * r / (r + 1.0);
  const AgmResult g = agm(m, (1.0 - r) / (1.0 + r));
  const double kk = g.k;
  const double ee = g.k * (1.0 - g.series);
  return (-3.0 * (r + 1.0) * ee * ee + 4.0 * ee * kk + (r - 1.0) * kk * kk) /
         (2.0 * (r + 1.0) * r * r * ee * ee);
}

KGrid::KGrid(std::size_t points) {
  if (points < 3 || points % 2 == 0) {
    throw Error(ErrorCode::DomainError, "KGrid needs an odd number of points >= 3");
  }
  step_ = 2.0 / static_cast<double>(points - 1);
  rho_.resize(points);
  k_.resize(points);
  const std::size_t mid = points / 2;
  for (std::size_t i = 0; i < points; ++i) {
    // Symmetric construction: rho_[mid + j] == -rho_[mid - j] exactly.
    const double r = i >= mid ? static_cast<double>(i - mid) * step_
                              : -static_cast<double>(mid - i) * step_;
    rho_[i] = std::clamp(r, -1.0, 1.0);
  }
  rho_.front() = -1.0;
  rho_.back() = 1.0;
  for (std::size_t i = 0; i < points; ++i) k_[i] = k_of_rho(rho_[i]);
}

const KGrid& KGrid::standard() {
  static const KGrid grid;
  return grid;
}

std::size_t KGrid::bracket(double rho_g) const {
  // Index lo with k_[lo] <= rho_g <= k_[lo + 1].
  const auto it = std::upper_bound(k_.begin(), k_.end(), rho_g);
  const auto idx = static_cast<std::size_t>(std::distance(k_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, k_.size() - 2);
}

double KGrid::invert(double rho_g) const {
  require_finite(rho_g, "rho_g");
  if (std::abs(rho_g) > 1.0) {
    throw Error(ErrorCode::DomainError, "k^{-1} requires |rho_g| <= 1");
  }
  if (rho_g == 0.0 || std::abs(rho_g) == 1.0) return rho_g;
  const std::size_t lo = bracket(rho_g);
  double a = rho_[lo];
  double b = rho_[lo + 1];
  for (int it = 0; it < 200 && b - a > 0.0; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double km = k_of_rho(mid);
    if (km == rho_g) return mid;
    (km < rho_g ? a : b) = mid;
  }
  return std::abs(k_of_rho(a) - rho_g) <= std::abs(k_of_rho(b) - rho_g) ? a : b;
}

double KGrid::interpolate_inverse(double rho_g) const {
  require_finite(rho_g, "rho_g");
  if (std::abs(rho_g) > 1.0) {
    throw Error(ErrorCode::DomainError, "k^{-1} requires |rho_g| <= 1");
  }
  const std::size_t lo = bracket(rho_g);
  const double t = (rho_g - k_[lo]) / (k_[lo + 1] - k_[lo]);
  return rho_[lo] + t * (rho_[lo + 1] - rho_[lo]);
}

double invert_k(double rho_g) { return KGrid::standard().invert(rho_g); }

}  // namespace sgcor
