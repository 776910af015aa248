#pragma once

// Brute-force evaluation of the finite sums: ground truth for every
// closed-form estimate in the library.

#include <cstddef>
#include <cstdint>

#include "radicsum/kernels.hpp"
#include "radicsum/root_index.hpp"

namespace radicsum {

enum class Execution { serial, parallel };

/// Default upper bound on n accepted by the O(n) oracles.
inline constexpr std::uint64_t kDefaultNCap = 1'000'000'000ULL;

/// Name of the environment variable overriding the oracle cap.
inline constexpr const char* kNCapEnvVar = "RADICSUM_N_CAP";

struct OracleOptions {
  std::uint64_t n_cap = kDefaultNCap;
  /// serial is the bit-reproducible reference and the default.
  Execution execution = Execution::serial;
  /// Only honoured by the serial path; the parallel kernel always ascends
  /// within its fixed partitions.
  kernels::SumOrder order = kernels::SumOrder::ascending;
  std::size_t partitions = kernels::kDefaultPartitions;

  /// Defaults with n_cap taken from RADICSUM_N_CAP when it is set.
  /// Throws DomainError if the variable is not a positive integer.
  static OracleOptions from_environment();
};

/// Throws DomainError unless 1 <= n <= opts.n_cap.
void validate_n(std::uint64_t n, const OracleOptions& opts);

/// Sum of i^(1/r) for i = 1..n.
double exact_root_sum(std::uint64_t n, RootIndex r, const OracleOptions& opts = {});

/// ln n! as the sum of ln i.
double exact_log_factorial(std::uint64_t n, const OracleOptions& opts = {});

/// Sum of i^(1/r) ln i for i = 1..n.
double exact_weighted_log_sum(std::uint64_t n, RootIndex r, const OracleOptions& opts = {});

/// ln(1^1 2^2 ... n^n).
double exact_hyperfactorial_log(std::uint64_t n, const OracleOptions& opts = {});

/// Lower sum, upper sum and integral of x^(1/r) over the unit partition of [0, n].
struct RiemannPartitionSums {
  double lower = 0.0;
  double upper = 0.0;
  double integral = 0.0;
};

RiemannPartitionSums riemann_bounds(std::uint64_t n, RootIndex r, const OracleOptions& opts = {});

}  // namespace radicsum
