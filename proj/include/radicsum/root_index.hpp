#pragma once

namespace radicsum {

/// Exponent parameter r of the r'th root, restricted to the closed domain
/// [1, inf). The r = 1 endpoint is included.
class RootIndex {
 public:
  /// Throws DomainError for r < 1, NaN or infinities.
  explicit RootIndex(double r);

  [[nodiscard]] double value() const noexcept { return r_; }
  [[nodiscard]] double inverse() const noexcept { return 1.0 / r_; }

  friend bool operator==(RootIndex, RootIndex) = default;

 private:
  double r_;
};

}  // namespace radicsum
