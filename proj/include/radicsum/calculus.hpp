#pragma once

// Numerical differentiation of phi_n(r) in r, the differentiated root-sum
// identity, and the two independent routes to xi_n.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "radicsum/oracle.hpp"
#include "radicsum/root_index.hpp"

namespace radicsum {

/// Finite-difference recipe: a central (or, at the r = 1 boundary, forward)
/// stencil of the given accuracy order, evaluated at base_step, base_step/2,
/// ... and combined by Richardson extrapolation.
struct DifferenceScheme {
  int order = 2;  ///< 2 or 4
  /// Unset selects max(1e-4, 1e-6 r).
  std::optional<double> base_step;
  int richardson_levels = 2;
  /// Switch to a forward stencil instead of failing when the central stencil
  /// would cross r = 1.
  bool one_sided_fallback = false;

  [[nodiscard]] double step_at(double r) const;
  /// Throws DomainError for an unsupported order, a non-positive step or a
  /// negative level count.
  void validate() const;
};

/// d phi_n / dr at r. Throws DomainError if the stencil would cross r = 1
/// (unless one_sided_fallback is set) or if the finest step falls below
/// 64 eps r.
double dphi_dr(std::uint64_t n, RootIndex r, const DifferenceScheme& scheme = {},
               const OracleOptions& opts = {});

/// Forward-difference d phi_n / dr at r = 1 next to the hyperfactorial
/// residual it must equal.
struct BoundaryDerivative {
  double derivative = 0.0;
  double residual = 0.0;  ///< hyperfactorial_residual(n)
  double gap = 0.0;       ///< |derivative - residual|
};

BoundaryDerivative dphi_dr_at_one(std::uint64_t n, const DifferenceScheme& scheme = {},
                                  const OracleOptions& opts = {});

/// Both sides of
///   sum i^(1/r) ln i = [r/(r+1)(n+1) - 1/2](n+1)^(1/r) ln(n+1)
///                      - r^2/(r+1)^2 (n+1)^((1+r)/r) + r^2 dphi/dr,
/// the r-derivative of the root-sum closed form.
struct IdentityResidual {
  double lhs = 0.0;  ///< exact weighted log sum
  double rhs = 0.0;
  double residual = 0.0;  ///< lhs - rhs

  /// |residual| / max(1, |lhs|)
  [[nodiscard]] double relative() const;
};

IdentityResidual derivative_identity_residual(std::uint64_t n, RootIndex r, const DifferenceScheme& scheme = {},
                                              const OracleOptions& opts = {});

/// xi_n = ln n! - (n + 1/2) ln(n+1) + (n+1), from the exact log factorial.
double xi_via_identity(std::uint64_t n, const OracleOptions& opts = {});

struct LimitPoint {
  double r = 0.0;
  double g = 0.0;  ///< r^2 dphi/dr
};

struct XiEstimate {
  std::uint64_t n = 1;
  double xi_identity = 0.0;
  double xi_limit = 0.0;
  double discrepancy = 0.0;  ///< |xi_identity - xi_limit|
  std::vector<LimitPoint> limit_diagnostics;
  /// Change in the extrapolant when the last ladder point was added.
  double last_update = 0.0;
};

struct LimitSettings {
  std::vector<double> ladder{8.0, 16.0, 32.0, 64.0, 128.0};
  /// Largest accepted change between the last two extrapolants.
  double tolerance = 1e-4;
};

/// Extrapolates r^2 dphi/dr to r -> inf by Neville's scheme in 1/r.
/// Throws ConvergenceError if the last two extrapolants differ by more
/// than settings.tolerance, DomainError for a bad ladder.
XiEstimate xi_via_limit(std::uint64_t n, const LimitSettings& settings = {}, const DifferenceScheme& scheme = {},
                        const OracleOptions& opts = {});

/// Neville-Aitken value at x = 0 of the interpolating polynomial through
/// (xs[i], ys[i]). Returns the diagonal of extrapolants using the first
/// 1, 2, ..., size points.
std::vector<double> neville_at_zero(std::span<const double> xs, std::span<const double> ys);

}  // namespace radicsum
