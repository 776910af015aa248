#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

#include "golden_values.hpp"
#include "radicsum/errors.hpp"
#include "radicsum/experiments.hpp"
#include "radicsum/oracle.hpp"

using namespace radicsum;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_.empty()) {
      ::unsetenv(name_);
    } else {
      ::setenv(name_, old_.c_str(), 1);
    }
  }

 private:
  const char* name_;
  std::string old_;
};

}  // namespace

TEST(RootIndex, AcceptsClosedDomain) {
  EXPECT_EQ(RootIndex(1.0).value(), 1.0);
  EXPECT_EQ(RootIndex(64.0).value(), 64.0);
  EXPECT_DOUBLE_EQ(RootIndex(4.0).inverse(), 0.25);
}

TEST(RootIndex, RejectsOutsideDomain) {
  EXPECT_THROW(RootIndex(0.5), DomainError);
  EXPECT_THROW(RootIndex(std::nextafter(1.0, 0.0)), DomainError);
  EXPECT_THROW(RootIndex(-3.0), DomainError);
  EXPECT_THROW(RootIndex(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(RootIndex(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(ExactRootSum, Examples) {
  EXPECT_EQ(exact_root_sum(4, RootIndex(1)), 10.0);
  EXPECT_NEAR(exact_root_sum(4, RootIndex(2)), golden::kRootSum_4_2, 4 * kEps * golden::kRootSum_4_2);
  EXPECT_NEAR(exact_root_sum(4, RootIndex(2)), 6.14626437, 5e-9);
  EXPECT_EQ(exact_root_sum(1, RootIndex(7.3)), 1.0);
}

TEST(ExactRootSum, ArithmeticSeriesAtRootOne) {
  for (std::uint64_t n : {1ULL, 7ULL, 1000ULL, 123457ULL}) {
    EXPECT_EQ(exact_root_sum(n, RootIndex(1)), static_cast<double>(n * (n + 1) / 2));
  }
}

TEST(ExactRootSum, RejectsZeroAndCap) {
  EXPECT_THROW(exact_root_sum(0, RootIndex(2)), DomainError);
  OracleOptions opts;
  opts.n_cap = 100;
  EXPECT_NO_THROW(exact_root_sum(100, RootIndex(2), opts));
  EXPECT_THROW(exact_root_sum(101, RootIndex(2), opts), DomainError);
}

TEST(ExactLogFactorial, Examples) {
  EXPECT_EQ(exact_log_factorial(1), 0.0);
  EXPECT_NEAR(exact_log_factorial(5), golden::kLogFactorial_5, 4 * kEps * golden::kLogFactorial_5);
  EXPECT_NEAR(exact_log_factorial(5), std::log(120.0), 1e-14);
  EXPECT_NEAR(exact_log_factorial(10), golden::kLogFactorial_10, 4 * kEps * golden::kLogFactorial_10);
  EXPECT_NEAR(exact_log_factorial(10), std::log(3628800.0), 1e-13);
}

TEST(ExactLogFactorial, MatchesLgamma) {
  for (std::uint64_t n : {2ULL, 50ULL, 1000ULL, 100000ULL}) {
    const double expected = std::lgamma(static_cast<double>(n) + 1.0);
    EXPECT_NEAR(exact_log_factorial(n), expected, 1e-13 * expected) << n;
  }
}

TEST(ExactWeightedLogSum, Examples) {
  EXPECT_EQ(exact_weighted_log_sum(1, RootIndex(5)), 0.0);
  EXPECT_NEAR(exact_weighted_log_sum(3, RootIndex(2)), golden::kWeightedLogSum_3_2, 1e-14);
  EXPECT_NEAR(exact_weighted_log_sum(3, RootIndex(2)), std::sqrt(2.0) * std::log(2.0) + std::sqrt(3.0) * std::log(3.0),
              1e-14);
  EXPECT_NEAR(exact_weighted_log_sum(10, RootIndex(1)), golden::kHyperLog_10, 1e-12);
}

TEST(ExactHyperfactorialLog, Examples) {
  EXPECT_EQ(exact_hyperfactorial_log(1), 0.0);
  EXPECT_NEAR(exact_hyperfactorial_log(2), golden::kHyperLog_2, 4 * kEps);
  EXPECT_NEAR(exact_hyperfactorial_log(10), golden::kHyperLog_10, 4 * kEps * golden::kHyperLog_10);
  EXPECT_NEAR(exact_hyperfactorial_log(100), golden::kHyperLog_100, 4 * kEps * golden::kHyperLog_100);
}

TEST(ExactHyperfactorialLog, AgreesWithWeightedSumAtRootOne) {
  for (std::uint64_t n : {1ULL, 2ULL, 10ULL, 1000ULL, 100000ULL}) {
    const double hyper = exact_hyperfactorial_log(n);
    EXPECT_LE(std::abs(exact_weighted_log_sum(n, RootIndex(1)) - hyper), 4 * kEps * hyper) << n;
  }
}

TEST(RiemannBounds, Examples) {
  const auto one = riemann_bounds(1, RootIndex(2));
  EXPECT_EQ(one.lower, 0.0);
  EXPECT_EQ(one.upper, 1.0);
  EXPECT_DOUBLE_EQ(one.integral, 2.0 / 3.0);

  const auto four = riemann_bounds(4, RootIndex(2));
  EXPECT_NEAR(four.lower, golden::kRootSum_4_2 - 2.0, 1e-14);
  EXPECT_NEAR(four.upper, golden::kRootSum_4_2, 1e-14);
  EXPECT_NEAR(four.integral, 16.0 / 3.0, 1e-14);
}

TEST(RiemannBounds, SandwichAndTelescopingOnDefaultGrid) {
  const auto grid = GridSpec::default_grid();
  for (auto n : grid.n_values) {
    for (double r : grid.r_values) {
      const auto s = riemann_bounds(n, RootIndex(r));
      EXPECT_LE(s.lower, s.integral) << n << ' ' << r;
      EXPECT_LE(s.integral, s.upper) << n << ' ' << r;
      const double root = std::pow(static_cast<double>(n), 1.0 / r);
      EXPECT_LE(std::abs((s.upper - s.lower) - root), 8 * kEps * s.upper) << n << ' ' << r;
    }
  }
}

TEST(RiemannBounds, SandwichForEveryNUpToTenThousand) {
  for (double r : {1.0, 1.5, 2.0, 3.0, 10.0, 64.0}) {
    const RootIndex ri(r);
    for (std::uint64_t n = 1; n <= 10000; n = n < 100 ? n + 1 : n + 97) {
      const auto s = riemann_bounds(n, ri);
      ASSERT_LE(s.lower, s.integral) << n << ' ' << r;
      ASSERT_LE(s.integral, s.upper) << n << ' ' << r;
    }
  }
}

TEST(OracleOptions, ParallelExecutionMatchesSerial) {
  OracleOptions par;
  par.execution = Execution::parallel;
  for (double r : {1.0, 2.0, 7.5}) {
    const double a = exact_root_sum(250000, RootIndex(r));
    EXPECT_LE(std::abs(exact_root_sum(250000, RootIndex(r), par) - a), 4 * kEps * a);
  }
}

TEST(OracleOptions, CapFromEnvironment) {
  {
    ScopedEnv env(kNCapEnvVar, "5000");
    EXPECT_EQ(OracleOptions::from_environment().n_cap, 5000U);
  }
  {
    ScopedEnv env(kNCapEnvVar, "12x");
    EXPECT_THROW(OracleOptions::from_environment(), DomainError);
  }
  {
    ScopedEnv env(kNCapEnvVar, "0");
    EXPECT_THROW(OracleOptions::from_environment(), DomainError);
  }
}

TEST(Errors, RequireFiniteReportsOverflow) {
  EXPECT_EQ(require_finite(3.0, "x"), 3.0);
  EXPECT_THROW(require_finite(std::numeric_limits<double>::infinity(), "x"), OverflowError);
  EXPECT_THROW(require_finite(std::numeric_limits<double>::quiet_NaN(), "x"), OverflowError);
}
