// Serial reference vs OpenMP oracle kernel vs closed form, per decade of n.
//
//   kernel_bench [--n-max N] [--r R] [--partitions P]

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>

#include <CLI11.hpp>
#include <fmt/format.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radicsum/closed_form.hpp"
#include "radicsum/kernels.hpp"

namespace {

template <class Fn>
double best_of_three_ms(Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle kernel benchmark"};
  std::uint64_t n_max = 100'000'000;
  double r = 2.0;
  std::size_t partitions = radicsum::kernels::kDefaultPartitions;
  app.add_option("--n-max", n_max)->capture_default_str();
  app.add_option("--r", r)->capture_default_str();
  app.add_option("--partitions", partitions)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  fmt::print("openmp={} threads={} partitions={} r={}\n", radicsum::kernels::parallel_enabled(), threads, partitions, r);
  fmt::print("{:>12} {:>12} {:>12} {:>8} {:>12} {:>12}\n", "n", "serial_ms", "omp_ms", "speedup", "rel_diff",
             "closed_ns");

  const radicsum::kernels::TermSpec spec{radicsum::kernels::SumKind::root, 1.0 / r};
  const radicsum::RootIndex ri(r);
  for (std::uint64_t n = 1000; n <= n_max; n *= 10) {
    double serial = 0.0;
    double parallel = 0.0;
    const double serial_ms = best_of_three_ms([&] { serial = radicsum::kernels::serial_sum(spec, 1, n).value(); });
    const double omp_ms = best_of_three_ms([&] { parallel = radicsum::kernels::parallel_sum(spec, 1, n, partitions).value(); });
    volatile double sink = 0.0;
    constexpr int kCalls = 100000;
    const double closed_ms = best_of_three_ms([&] {
      for (int i = 0; i < kCalls; ++i) sink = sink + radicsum::approx_root_sum(n, ri).approx;
    });
    fmt::print("{:>12} {:>12.3f} {:>12.3f} {:>8.2f} {:>12.2e} {:>12.1f}\n", n, serial_ms, omp_ms, serial_ms / omp_ms,
               std::abs(parallel - serial) / serial, closed_ms * 1e6 / kCalls);
    if (n > n_max / 10) break;
  }
  return 0;
}
