#pragma once

// Range-summation kernels behind the exact oracles.
//
// Two implementations share one term definition: a serial reference that
// walks i ascending (or descending) through a single accumulator, and an
// OpenMP kernel that splits [first, last] into a fixed number of contiguous
// partitions, sums each serially, and merges partials in partition order.
// The partitioning depends only on the range and the partition count, never
// on the thread count, so the parallel result is bit-reproducible.

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "radicsum/compensated.hpp"

namespace radicsum::kernels {

enum class SumKind {
  root,          ///< i^(1/r)
  log,           ///< ln i
  weighted_log,  ///< i^(1/r) ln i
  self_log,      ///< i ln i
};

enum class SumOrder { ascending, descending };

/// What to sum. `inv_r` is 1/r and is ignored by the kinds that do not use it.
struct TermSpec {
  SumKind kind = SumKind::root;
  double inv_r = 1.0;
};

/// i^(1/r) as exp(ln(i)/r); exactly 1 at i = 1 and 0 at i = 0.
inline double root_term(std::uint64_t i, double inv_r) noexcept {
  if (i <= 1) return static_cast<double>(i);
  return std::exp(std::log(static_cast<double>(i)) * inv_r);
}

inline double term(const TermSpec& spec, std::uint64_t i) noexcept {
  switch (spec.kind) {
    case SumKind::root:
      return root_term(i, spec.inv_r);
    case SumKind::log:
      return i <= 1 ? 0.0 : std::log(static_cast<double>(i));
    case SumKind::weighted_log: {
      if (i <= 1) return 0.0;
      const double li = std::log(static_cast<double>(i));
      return std::exp(li * spec.inv_r) * li;
    }
    case SumKind::self_log:
      return i <= 1 ? 0.0 : static_cast<double>(i) * std::log(static_cast<double>(i));
  }
  return 0.0;
}

/// Serial reference: sum of term(i) for i in [first, last]. Empty if first > last.
CompensatedAccumulator serial_sum(const TermSpec& spec, std::uint64_t first, std::uint64_t last,
                                  SumOrder order = SumOrder::ascending);

/// Default partition count for parallel_sum.
inline constexpr std::size_t kDefaultPartitions = 256;

/// OpenMP kernel over `partitions` fixed contiguous chunks. Falls back to a
/// single thread when built without OpenMP; the result is identical.
CompensatedAccumulator parallel_sum(const TermSpec& spec, std::uint64_t first, std::uint64_t last,
                                    std::size_t partitions = kDefaultPartitions);

/// Whether parallel_sum was compiled with OpenMP.
bool parallel_enabled() noexcept;

}  // namespace radicsum::kernels
