#pragma once

// Loop bodies shared by the serial and OpenMP kernels. The switch on the
// term kind is hoisted out of the loop so each loop sees a concrete functor.

#include <cstdint>

#include "radicsum/kernels.hpp"

namespace radicsum::kernels::detail {

template <class TermFn>
CompensatedAccumulator sum_ascending(TermFn term_fn, std::uint64_t first, std::uint64_t last) {
  CompensatedAccumulator acc;
  if (first > last) return acc;
  for (std::uint64_t i = first;; ++i) {
    acc.add(term_fn(i));
    if (i == last) break;
  }
  return acc;
}

template <class TermFn>
CompensatedAccumulator sum_descending(TermFn term_fn, std::uint64_t first, std::uint64_t last) {
  CompensatedAccumulator acc;
  if (first > last) return acc;
  for (std::uint64_t i = last;; --i) {
    acc.add(term_fn(i));
    if (i == first) break;
  }
  return acc;
}

template <class Body>
decltype(auto) dispatch(const TermSpec& spec, Body&& body) {
  const double inv_r = spec.inv_r;
  switch (spec.kind) {
    case SumKind::root:
      return body([inv_r](std::uint64_t i) { return root_term(i, inv_r); });
    case SumKind::log:
      return body([](std::uint64_t i) { return term(TermSpec{SumKind::log, 1.0}, i); });
    case SumKind::weighted_log:
      return body([inv_r](std::uint64_t i) { return term(TermSpec{SumKind::weighted_log, inv_r}, i); });
    case SumKind::self_log:
      break;
  }
  return body([](std::uint64_t i) { return term(TermSpec{SumKind::self_log, 1.0}, i); });
}

}  // namespace radicsum::kernels::detail
