#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "radicsum/compensated.hpp"
#include "radicsum/kernels.hpp"

using namespace radicsum;
using kernels::SumKind;
using kernels::SumOrder;
using kernels::TermSpec;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

TEST(CompensatedAccumulator, RecoversSmallTermsLostByNaiveSum) {
  CompensatedAccumulator acc;
  double naive = 0.0;
  acc.add(1.0);
  naive += 1.0;
  for (int i = 0; i < 1000; ++i) {
    acc.add(1e-17);
    naive += 1e-17;
  }
  EXPECT_EQ(naive, 1.0);
  EXPECT_NEAR(acc.value(), 1.0 + 1e-14, 1e-16);
}

TEST(CompensatedAccumulator, HandlesLargerIncomingTerm) {
  CompensatedAccumulator acc;
  acc.add(1e-16);
  acc.add(1.0);
  acc.add(-1.0);
  EXPECT_DOUBLE_EQ(acc.value(), 1e-16);
}

TEST(CompensatedAccumulator, MergeMatchesSingleStream) {
  CompensatedAccumulator whole;
  CompensatedAccumulator left;
  CompensatedAccumulator right;
  for (int i = 1; i <= 2000; ++i) {
    const double x = std::sqrt(static_cast<double>(i));
    whole.add(x);
    (i <= 1000 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_NEAR(left.value(), whole.value(), 2 * kEps * whole.value());
}

// Property: any permutation of the same terms sums to within the
// compensated error bound of every other permutation.
TEST(CompensatedAccumulator, OrderIndependenceProperty) {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> mag(-8.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs(1 + rng() % 4000);
    for (auto& x : xs) x = std::pow(10.0, mag(rng));  // positive, 16 decades
    CompensatedAccumulator a;
    for (double x : xs) a.add(x);
    std::shuffle(xs.begin(), xs.end(), rng);
    CompensatedAccumulator b;
    for (double x : xs) b.add(x);
    ASSERT_LE(std::abs(a.value() - b.value()), 2 * kEps * a.value()) << "trial " << trial;
  }
}

TEST(Kernels, TermDefinitions) {
  EXPECT_EQ(kernels::root_term(0, 0.5), 0.0);
  EXPECT_EQ(kernels::root_term(1, 0.37), 1.0);
  EXPECT_NEAR(kernels::root_term(4, 0.5), 2.0, 4 * kEps);
  EXPECT_EQ(kernels::term({SumKind::log, 1.0}, 1), 0.0);
  EXPECT_EQ(kernels::term({SumKind::self_log, 1.0}, 1), 0.0);
  EXPECT_NEAR(kernels::term({SumKind::weighted_log, 0.5}, 9), 3.0 * std::log(9.0), 1e-14);
}

TEST(Kernels, EmptyRangeIsZero) {
  const TermSpec spec{SumKind::root, 0.5};
  EXPECT_EQ(kernels::serial_sum(spec, 5, 4).value(), 0.0);
  EXPECT_EQ(kernels::parallel_sum(spec, 5, 4).value(), 0.0);
}

TEST(Kernels, DescendingMatchesAscending) {
  const TermSpec spec{SumKind::root, 0.5};
  const double up = kernels::serial_sum(spec, 1, 1'000'000, SumOrder::ascending).value();
  const double down = kernels::serial_sum(spec, 1, 1'000'000, SumOrder::descending).value();
  EXPECT_LE(std::abs(up - down), 4 * kEps * up);
}

TEST(Kernels, ParallelAgreesWithSerialReference) {
  for (auto kind : {SumKind::root, SumKind::log, SumKind::weighted_log, SumKind::self_log}) {
    const TermSpec spec{kind, 1.0 / 3.0};
    const double serial = kernels::serial_sum(spec, 1, 300'001).value();
    for (std::size_t parts : {1UL, 7UL, 256UL, 1'000'000UL}) {
      const double par = kernels::parallel_sum(spec, 1, 300'001, parts).value();
      EXPECT_LE(std::abs(par - serial), 4 * kEps * serial) << "partitions " << parts;
    }
  }
}

TEST(Kernels, ParallelIsBitReproducible) {
  const TermSpec spec{SumKind::weighted_log, 0.5};
  const double first = kernels::parallel_sum(spec, 3, 123'457, 64).value();
  for (int k = 0; k < 3; ++k) EXPECT_EQ(kernels::parallel_sum(spec, 3, 123'457, 64).value(), first);
}

TEST(Kernels, PartitionsCoverRangeExactly) {
  // counting ln i sums over a sub-range checks no term is dropped or doubled
  const TermSpec spec{SumKind::self_log, 1.0};
  for (std::uint64_t last : {2ULL, 3ULL, 17ULL, 1000ULL}) {
    const double serial = kernels::serial_sum(spec, 2, last).value();
    for (std::size_t parts : {1UL, 2UL, 3UL, 5UL, 999UL}) {
      EXPECT_NEAR(kernels::parallel_sum(spec, 2, last, parts).value(), serial, 4 * kEps * serial);
    }
  }
}
