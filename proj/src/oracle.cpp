#include "radicsum/oracle.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "radicsum/errors.hpp"

namespace radicsum {

double require_finite(double value, const std::string& what) {
  if (!std::isfinite(value)) throw OverflowError(what + " overflowed the double range");
  return value;
}

RootIndex::RootIndex(double r) : r_(r) {
  if (!std::isfinite(r) || r < 1.0) {
    throw DomainError("root index r must be a finite real with r >= 1, got " + std::to_string(r));
  }
}

OracleOptions OracleOptions::from_environment() {
  OracleOptions opts;
  const char* raw = std::getenv(kNCapEnvVar);
  if (raw == nullptr || *raw == '\0') return opts;
  const std::string_view text(raw);
  std::uint64_t cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap == 0) {
    throw DomainError(std::string(kNCapEnvVar) + " must be a positive integer, got '" + raw + "'");
  }
  opts.n_cap = cap;
  return opts;
}

void validate_n(std::uint64_t n, const OracleOptions& opts) {
  if (n < 1) throw DomainError("n must be a positive integer");
  if (n > opts.n_cap) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(opts.n_cap) +
                      " (set " + kNCapEnvVar + " to raise it)");
  }
}

namespace {

double run_sum(const kernels::TermSpec& spec, std::uint64_t first, std::uint64_t last,
               const OracleOptions& opts) {
  const auto acc = opts.execution == Execution::parallel
                       ? kernels::parallel_sum(spec, first, last, opts.partitions)
                       : kernels::serial_sum(spec, first, last, opts.order);
  return acc.value();
}

}  // namespace

double exact_root_sum(std::uint64_t n, RootIndex r, const OracleOptions& opts) {
  validate_n(n, opts);
  return require_finite(run_sum({kernels::SumKind::root, r.inverse()}, 1, n, opts), "root sum");
}

double exact_log_factorial(std::uint64_t n, const OracleOptions& opts) {
  validate_n(n, opts);
  return require_finite(run_sum({kernels::SumKind::log, 1.0}, 1, n, opts), "log factorial");
}

double exact_weighted_log_sum(std::uint64_t n, RootIndex r, const OracleOptions& opts) {
  validate_n(n, opts);
  return require_finite(run_sum({kernels::SumKind::weighted_log, r.inverse()}, 1, n, opts),
                        "weighted log sum");
}

double exact_hyperfactorial_log(std::uint64_t n, const OracleOptions& opts) {
  validate_n(n, opts);
  return require_finite(run_sum({kernels::SumKind::self_log, 1.0}, 1, n, opts), "hyperfactorial log");
}

RiemannPartitionSums riemann_bounds(std::uint64_t n, RootIndex r, const OracleOptions& opts) {
  validate_n(n, opts);
  const kernels::TermSpec spec{kernels::SumKind::root, r.inverse()};
  RiemannPartitionSums sums;
  // f(0) = 0, so the lower sum starts at i = 1 as well
  sums.lower = require_finite(run_sum(spec, 1, n - 1, opts), "lower Riemann sum");
  sums.upper = require_finite(run_sum(spec, 1, n, opts), "upper Riemann sum");
  const double rv = r.value();
  const double nd = static_cast<double>(n);
  sums.integral = require_finite(rv / (rv + 1.0) * nd * kernels::root_term(n, r.inverse()), "integral");
  return sums;
}

}  // namespace radicsum
