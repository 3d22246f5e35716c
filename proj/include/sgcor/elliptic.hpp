#pragma once

#include <cstddef>
#include <vector>

namespace sgcor {

/// K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt, parameter convention, 0 <= m < 1.
double complete_elliptic_first(double m);

/// E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt, 0 <= m <= 1.
double complete_elliptic_second(double m);

/// Symmetric Gini correlation of a homogeneous elliptical law with linear
/// correlation rho:
///
///   k(rho) = 1/rho + (rho - 1)/rho * K(m)/E(m),  m = 2 rho / (rho + 1),
///
/// with k(0) = 0, k(+-1) = +-1 and k(-rho) = -k(rho). K and E take m as the
/// parameter (the integrand is 1 - m sin^2). For |rho| < 1e-4 the value comes
/// from the odd interpolant through k(+-1e-4), k(+-2e-4) and k(0).
double k_of_rho(double rho);

/// dk/drho by central differences of k_of_rho (h = 1e-6, shrunk near +-1).
double k_derivative(double rho);

/// The closed-form derivative
///   [-3(r+1)E^2 + 4EK + (r-1)K^2] / [2(r+1) r^2 E^2]
/// evaluated at |rho| (k' is even). Undefined at rho = 0 (DomainError).
double k_derivative_closed_form(double rho);

/// Tabulated k on a uniform grid over [-1, 1], used to bracket inversions.
class KGrid {
 public:
  /// points >= 3 and odd so that rho = 0 is a node. Default step is 1e-4.
  explicit KGrid(std::size_t points = 20001);

  /// Shared default grid, built on first use.
  static const KGrid& standard();

  const std::vector<double>& rho_values() const noexcept { return rho_; }
  const std::vector<double>& k_values() const noexcept { return k_; }
  double step() const noexcept { return step_; }

  /// rho with |k(rho) - rho_g| <= 1e-9: grid bracket, then bisection on k.
  double invert(double rho_g) const;

  /// Linear interpolation of the inverse on the grid alone (no elliptic
  /// evaluations). Error is O(step^2).
  double interpolate_inverse(double rho_g) const;

 private:
  std::size_t bracket(double rho_g) const;

  double step_;
  std::vector<double> rho_;
  std::vector<double> k_;
};

/// KGrid::standard().invert(rho_g). DomainError for |rho_g| > 1.
double invert_k(double rho_g);

}  // namespace sgcor
