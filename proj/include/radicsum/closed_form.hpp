#pragma once

// Closed-form estimators for the root sum, ln n! and ln H(n), plus the
// classical Stirling baseline. The correction term phi is defined
// operationally as closed form minus exact sum.

#include <cstdint>

#include "radicsum/oracle.hpp"
#include "radicsum/root_index.hpp"

namespace radicsum {

inline constexpr double kSqrtTwoPi = 2.5066282746310007;      // sqrt(2 pi)
inline constexpr double kLogSqrtTwoPi = 0.9189385332046728;   // ln sqrt(2 pi)

/// Two-term closed form for sum_{i<=n} i^(1/r), without the correction term.
struct ApproxBreakdown {
  double leading = 0.0;    ///< r/(r+1) (n+1)^((1+r)/r)
  double half_term = 0.0;  ///< (n+1)^(1/r) / 2
  double approx = 0.0;     ///< leading - half_term
};

/// O(1). Throws DomainError for n = 0, OverflowError if a term is not finite.
ApproxBreakdown approx_root_sum(std::uint64_t n, RootIndex r);

struct PhiSample {
  std::uint64_t n = 1;
  RootIndex r{1.0};
  double phi = 0.0;  ///< breakdown.approx - exact
  ApproxBreakdown breakdown;
  double exact = 0.0;
};

PhiSample phi(std::uint64_t n, RootIndex r, const OracleOptions& opts = {});

struct FactorialEstimate {
  std::uint64_t n = 1;
  double log_estimate = 0.0;  ///< (n + 1/2) ln(n+1) - (n+1) + xi_used
  double xi_used = 0.0;
  double stirling_log = 0.0;
  double exact_log = 0.0;
};

/// ln n! from the (n+1)-based Stirling-like formula with a caller-supplied xi.
FactorialEstimate factorial_log_estimate(std::uint64_t n, double xi, const OracleOptions& opts = {});

/// The (n+1)-based formula without xi: (n + 1/2) ln(n+1) - (n+1).
double factorial_log_main_term(std::uint64_t n);

/// ln(sqrt(2 pi n) (n/e)^n).
double stirling_log(std::uint64_t n);

/// n(n+1)/2 ln(n+1) - (n+1)^2/4.
double hyperfactorial_main_term(std::uint64_t n);

/// exact ln H(n) minus hyperfactorial_main_term(n); equals dphi/dr at r = 1.
double hyperfactorial_residual(std::uint64_t n, const OracleOptions& opts = {});

}  // namespace radicsum
