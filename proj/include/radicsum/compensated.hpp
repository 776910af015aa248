#pragma once

#include <cmath>

namespace radicsum {

/// Neumaier-style compensated accumulator.
///
/// `primary` holds the rounded running sum; `compensation` collects the
/// rounding error of every addition, so value() is accurate to about two
/// ulps of the true sum regardless of the number of terms or their order.
class CompensatedAccumulator {
 public:
  constexpr CompensatedAccumulator() = default;

  void add(double x) noexcept {
    const double t = primary_ + x;
    if (std::abs(primary_) >= std::abs(x)) {
      compensation_ += (primary_ - t) + x;
    } else {
      compensation_ += (x - t) + primary_;
    }
    primary_ = t;
  }

  /// Folds another partial sum in; used to combine range partitions.
  void merge(const CompensatedAccumulator& other) noexcept {
    add(other.primary_);
    compensation_ += other.compensation_;
  }

  CompensatedAccumulator& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] constexpr double value() const noexcept { return primary_ + compensation_; }
  [[nodiscard]] constexpr double primary() const noexcept { return primary_; }
  [[nodiscard]] constexpr double compensation() const noexcept { return compensation_; }

 private:
  double primary_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace radicsum
