#include "radicsum/closed_form.hpp"

#include <cmath>

#include "radicsum/errors.hpp"

namespace radicsum {

namespace {

void require_positive(std::uint64_t n) {
  if (n < 1) throw DomainError("n must be a positive integer");
}

}  // namespace

ApproxBreakdown approx_root_sum(std::uint64_t n, RootIndex r) {
  require_positive(n);
  const double m = static_cast<double>(n) + 1.0;
  const double rv = r.value();
  // (n+1)^((1+r)/r) is formed as (n+1) * (n+1)^(1/r): one pow, exact at r = 1
  const double root = std::pow(m, r.inverse());
  ApproxBreakdown b;
  b.leading = require_finite(rv / (rv + 1.0) * m * root, "closed-form leading term");
  b.half_term = 0.5 * root;
  b.approx = b.leading - b.half_term;
  return b;
}

PhiSample phi(std::uint64_t n, RootIndex r, const OracleOptions& opts) {
  PhiSample s;
  s.n = n;
  s.r = r;
  s.exact = exact_root_sum(n, r, opts);
  s.breakdown = approx_root_sum(n, r);
  s.phi = s.breakdown.approx - s.exact;
  return s;
}

double factorial_log_main_term(std::uint64_t n) {
  require_positive(n);
  const double nd = static_cast<double>(n);
  return (nd + 0.5) * std::log1p(nd) - (nd + 1.0);
}

FactorialEstimate factorial_log_estimate(std::uint64_t n, double xi, const OracleOptions& opts) {
  if (!std::isfinite(xi)) throw DomainError("xi must be finite");
  FactorialEstimate e;
  e.n = n;
  e.xi_used = xi;
  e.exact_log = exact_log_factorial(n, opts);
  e.log_estimate = factorial_log_main_term(n) + xi;
  e.stirling_log = stirling_log(n);
  return e;
}

double stirling_log(std::uint64_t n) {
  require_positive(n);
  const double nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  return kLogSqrtTwoPi + 0.5 * ln_n + nd * ln_n - nd;
}

double hyperfactorial_main_term(std::uint64_t n) {
  require_positive(n);
  const double nd = static_cast<double>(n);
  const double m = nd + 1.0;
  return 0.5 * nd * m * std::log1p(nd) - 0.25 * m * m;
}

double hyperfactorial_residual(std::uint64_t n, const OracleOptions& opts) {
  return exact_hyperfactorial_log(n, opts) - hyperfactorial_main_term(n);
}

}  // namespace radicsum
