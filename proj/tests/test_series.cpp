#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "minbucket/error.hpp"
#include "minbucket/series.hpp"

using namespace minbucket;

TEST_CASE("power_tail encloses known zeta values") {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  for (std::uint64_t start : {1ULL, 2ULL, 10ULL, 1000ULL}) {
    double head = 0.0;
    for (std::uint64_t t = start - 1; t >= 1; --t) head += 1.0 / (double(t) * double(t));
    const Interval tail = power_tail(2.0, start);
    CHECK(head + tail.lo <= pi2_6 + 1e-15);
    CHECK(head + tail.hi >= pi2_6 - 1e-15);
  }
  // zeta(3)
  const Interval z3 = power_tail(3.0, 10);
  double head = 0.0;
  for (int t = 9; t >= 1; --t) head += std::pow(t, -3.0);
  CHECK(head + z3.lo <= 1.2020569031595942 + 1e-15);
  CHECK(head + z3.hi >= 1.2020569031595942 - 1e-15);
}

TEST_CASE("power_tail matches brute-force partial sums with integral bracket") {
  // sum_{t>=100} t^-1.5: brute force to 10^7, remainder enclosed by integrals
  const double s = 1.5;
  double brute = 0.0;
  for (std::uint64_t t = 10'000'000 - 1; t >= 100; --t) brute += std::pow(double(t), -s);
  const double big = 1e7;
  const double rest_lo = std::pow(big, 1.0 - s) / (s - 1.0);
  const double rest_hi = rest_lo + std::pow(big, -s);
  const Interval tail = power_tail(s, 100);
  CHECK(tail.lo <= brute + rest_hi + 1e-12);
  CHECK(tail.hi >= brute + rest_lo - 1e-12);
  CHECK(tail.width() < 1e-10);
}

TEST_CASE("power_combination_tail respects coefficient signs") {
  const std::vector<PowerTerm> terms{{2.0, 2.0}, {-1.0, 3.0}};
  const Interval both = power_combination_tail(terms, 5);
  const Interval a = power_tail(2.0, 5);
  const Interval b = power_tail(3.0, 5);
  CHECK(both.lo == doctest::Approx(2.0 * a.lo - b.hi).epsilon(1e-15));
  CHECK(both.hi == doctest::Approx(2.0 * a.hi - b.lo).epsilon(1e-15));
  CHECK(both.lo <= both.hi);
}

TEST_CASE("power_tail rejects divergent exponents") {
  CHECK_THROWS_AS(power_tail(1.0, 3), ParameterError);
  CHECK_THROWS_AS(power_tail(2.0, 0), ParameterError);
}

TEST_CASE("compensated sum recovers cancelled low-order bits") {
  CompensatedSum acc;
  acc += 1e16;
  for (int i = 0; i < 1000; ++i) acc += 1.0;
  acc += -1e16;
  CHECK(acc.value() == 1000.0);
}
