#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minbucket/degrees.hpp"
#include "minbucket/series.hpp"

namespace minbucket {

/// Exact unsigned integer wide enough for sum_v d_v^2 at any supported size.
using WideCount = unsigned __int128;

std::string to_string(WideCount value);

/// sum_v d_v^2, the order of the trivial algorithm's wedge work.
WideCount trivial_bound(const DegreeSequence& seq);

/// n + m^-2 (sum_v d_v^(4/3))^3 with the O-constant taken as 1. Requires m > 0.
double minbucket_bound(const DegreeSequence& seq);

/// m^-2 (sum_v d_v^(4/3))^3 alone.
double minbucket_bound_excess(const DegreeSequence& seq);

/// Checks m^-2 (sum d^(4/3))^3 <= 4 sum d^2, allowing `rounding` relative slack
/// for the equality case of all-equal degrees.
bool holder_relation_holds(const DegreeSequence& seq, double rounding = 1e-12);

enum class Growth { kLinear, kSuperlinear };

std::string_view to_string(Growth growth) noexcept;

/// Power-law plug-in expressions (constants suppressed):
///   trivial   n + n d_max^(3 - alpha)
///   minbucket n + n d_max^(7 - 3 alpha)
/// Each is linear iff its exponent <= 0.
struct PowerLawPrediction {
  double alpha = 0.0;
  double n = 0.0;
  double d_max = 0.0;
  double trivial_exponent = 0.0;
  double minbucket_exponent = 0.0;
  double trivial = 0.0;
  double minbucket = 0.0;
  Growth trivial_growth = Growth::kLinear;
  Growth minbucket_growth = Growth::kLinear;
};

/// alpha must lie in (1, 4).
PowerLawPrediction power_law_predictions(double alpha, double n, double d_max);

/// Limit of (1/n) E[sum_i C(X_i, 2)] for i.i.d. degrees from f:
///   1/(2 E[d]^2) sum_{t1} t1(t1-1) f(t1) S(t1)^2,  S(t) = sum_{s>=t} s f(s).
///
/// For a finite support the sum is exact. For an uncapped power law with
/// alpha > 7/3 the head is summed to an internal cutoff N and the remainder is
/// enclosed with Euler-Maclaurin power tails; N grows until the bracket's
/// relative width is below tol. alpha <= 7/3 is reported divergent.
SeriesResult limit_constant(const ReferenceDistribution& dist, double tol = 1e-9);

/// The uncapped power-law evaluation at a fixed internal cutoff (>= 2).
SeriesResult limit_constant_at_cutoff(double alpha, std::uint64_t cutoff);

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  WideCount trivial_bound = 0;
  double minbucket_bound = 0.0;
  std::optional<PowerLawPrediction> power_law;
  std::optional<double> alpha;
  std::optional<SeriesResult> limit_constant;
};

/// Bound expressions for a concrete sequence, optionally with the power-law
/// predictions and limit constant for exponent alpha.
BoundReport bound_report(const DegreeSequence& seq, std::optional<double> alpha = std::nullopt);

}  // namespace minbucket
