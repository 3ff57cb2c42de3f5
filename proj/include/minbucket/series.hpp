#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace minbucket {

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Closed interval [lo, hi] enclosing a real quantity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Encloses sum_{t >= start} t^(-s) for s > 1, start >= 1.
///
/// Euler-Maclaurin truncated after the B2 and after the B4 correction; for the
/// completely monotone summand t^(-s) the true value lies between the two.
Interval power_tail(double s, std::uint64_t start);

/// One term c * t^(-s) of a signed power combination.
struct PowerTerm {
  double coefficient;
  double exponent;  // s, the summand is t^(-s); must exceed 1
};

/// Encloses sum_{t >= start} sum_i c_i t^(-s_i).
Interval power_combination_tail(std::span<const PowerTerm> terms, std::uint64_t start);

}  // namespace minbucket
