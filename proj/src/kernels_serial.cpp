#include "radicsum/kernels.hpp"

#include "kernel_loop.hpp"

namespace radicsum::kernels {

CompensatedAccumulator serial_sum(const TermSpec& spec, std::uint64_t first, std::uint64_t last,
                                  SumOrder order) {
  return detail::dispatch(spec, [&](auto term_fn) {
    return order == SumOrder::ascending ? detail::sum_ascending(term_fn, first, last)
                                        : detail::sum_descending(term_fn, first, last);
  });
}

}  // namespace radicsum::kernels
