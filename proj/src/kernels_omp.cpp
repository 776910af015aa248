#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernel_loop.hpp"
#include "radicsum/kernels.hpp"

namespace radicsum::kernels {

CompensatedAccumulator parallel_sum(const TermSpec& spec, std::uint64_t first, std::uint64_t last,
                                    std::size_t partitions) {
  if (first > last) return {};
  const std::uint64_t count = last - first + 1;
  const auto parts = static_cast<std::int64_t>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max<std::size_t>(partitions, 1)), 1, count));
  const std::uint64_t chunk = count / static_cast<std::uint64_t>(parts);
  const std::uint64_t extra = count % static_cast<std::uint64_t>(parts);

  std::vector<CompensatedAccumulator> partials(static_cast<std::size_t>(parts));
  detail::dispatch(spec, [&](auto term_fn) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < parts; ++p) {
      const auto up = static_cast<std::uint64_t>(p);
      // the first `extra` partitions carry one additional term
      const std::uint64_t lo = first + up * chunk + std::min(up, extra);
      const std::uint64_t hi = lo + chunk - (up < extra ? 0 : 1);
      partials[static_cast<std::size_t>(p)] = detail::sum_ascending(term_fn, lo, hi);
    }
    return 0;
  });

  CompensatedAccumulator total;
  for (const auto& part : partials) total.merge(part);
  return total;
}

bool parallel_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace radicsum::kernels
