#include "minbucket/series.hpp"

#include <algorithm>

#include "minbucket/error.hpp"

namespace minbucket {

Interval power_tail(double s, std::uint64_t start) {
  if (!(s > 1.0) || start == 0) {
    throw ParameterError("power_tail requires s > 1 and start >= 1");
  }
  const double n = static_cast<double>(start);
  const double g = std::pow(n, -s);
  const double integral = n * g / (s - 1.0);
  const double b2 = s * g / (12.0 * n);
  const double b4 = s * (s + 1.0) * (s + 2.0) * g / (720.0 * n * n * n);
  const double first = integral + 0.5 * g + b2;
  const double second = first - b4;
  return {std::min(first, second), std::max(first, second)};
}

Interval power_combination_tail(std::span<const PowerTerm> terms, std::uint64_t start) {
  CompensatedSum lo;
  CompensatedSum hi;
  for (const PowerTerm& term : terms) {
    const Interval tail = power_tail(term.exponent, start);
    if (term.coefficient >= 0.0) {
      lo += term.coefficient * tail.lo;
      hi += term.coefficient * tail.hi;
    } else {
      lo += term.coefficient * tail.hi;
      hi += term.coefficient * tail.lo;
    }
  }
  return {lo.value(), hi.value()};
}

}  // namespace minbucket
