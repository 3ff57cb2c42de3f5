#include "minbucket/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "minbucket/error.hpp"

namespace minbucket {

std::string to_string(WideCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

WideCount trivial_bound(const DegreeSequence& seq) {
  WideCount total = 0;
  for (Degree d : seq.per_vertex()) total += static_cast<WideCount>(d) * d;
  return total;
}

double minbucket_bound_excess(const DegreeSequence& seq) {
  if (seq.edge_count() == 0) throw ParameterError("bound requires m > 0");
  CompensatedSum acc;
  // ascending order keeps the compensated sum well conditioned
  for (Degree d : seq.sorted()) acc += std::cbrt(static_cast<double>(d)) * d;
  const double m = static_cast<double>(seq.edge_count());
  const double s = acc.value();
  return s * s * s / (m * m);
}

double minbucket_bound(const DegreeSequence& seq) {
  return static_cast<double>(seq.size()) + minbucket_bound_excess(seq);
}

bool holder_relation_holds(const DegreeSequence& seq, double rounding) {
  const double lhs = minbucket_bound_excess(seq);
  const double rhs = 4.0 * static_cast<double>(trivial_bound(seq));
  return lhs <= rhs * (1.0 + rounding);
}

std::string_view to_string(Growth growth) noexcept {
  return growth == Growth::kLinear ? "linear" : "superlinear";
}

PowerLawPrediction power_law_predictions(double alpha, double n, double d_max) {
  if (!(alpha > 1.0 && alpha < 4.0)) throw ParameterError("alpha must lie in (1, 4)");
  if (!(n > 0.0) || !(d_max >= 1.0)) throw ParameterError("need n > 0 and d_max >= 1");
  PowerLawPrediction p;
  p.alpha = alpha;
  p.n = n;
  p.d_max = d_max;
  p.trivial_exponent = 3.0 - alpha;
  p.minbucket_exponent = 7.0 - 3.0 * alpha;
  p.trivial = n + n * std::pow(d_max, p.trivial_exponent);
  p.minbucket = n + n * std::pow(d_max, p.minbucket_exponent);
  p.trivial_growth = p.trivial_exponent <= 0.0 ? Growth::kLinear : Growth::kSuperlinear;
  p.minbucket_growth = p.minbucket_exponent <= 0.0 ? Growth::kLinear : Growth::kSuperlinear;
  return p;
}

namespace {

SeriesResult finite_limit_constant(const ReferenceDistribution& dist, Degree top) {
  // suffix sums S(t) = sum_{s >= t} s f(s), accumulated from the top
  std::vector<double> suffix(top + 2, 0.0);
  CompensatedSum s;
  for (Degree t = top; t >= 1; --t) {
    s += static_cast<double>(t) * dist.truncated_pmf(t);
    suffix[t] = s.value();
  }
  CompensatedSum acc;
  for (Degree t = top; t >= 2; --t) {
    const double td = static_cast<double>(t);
    acc += td * (td - 1.0) * dist.truncated_pmf(t) * suffix[t] * suffix[t];
  }
  const double mean = suffix[1];
  SeriesResult r;
  r.value = acc.value() / (2.0 * mean * mean);
  r.bracket = {r.value, r.value};
  r.terms_summed = top;
  return r;
}

// Coefficients c_j of p(x) = sum_j c_j x^j, x = 1/t.
using Poly = std::vector<double>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// sum_{t >= start} t^(6 - 3 alpha) p(1/t)
Interval tail_of(const Poly& p, double alpha, std::uint64_t start) {
  std::vector<PowerTerm> terms;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] != 0.0) terms.push_back({p[j], 3.0 * alpha - 6.0 + static_cast<double>(j)});
  }
  return power_combination_tail(terms, start);
}

}  // namespace

SeriesResult limit_constant_at_cutoff(double alpha, std::uint64_t cutoff) {
  if (!(alpha > 7.0 / 3.0)) {
    SeriesResult r;
    r.divergent = true;
    return r;
  }
  const double q = alpha - 1.0;
  if (cutoff < 2 || 60.0 * static_cast<double>(cutoff) * static_cast<double>(cutoff) < (q + 1.0) * (q + 2.0)) {
    throw ParameterError("limit-constant cutoff too small for this exponent");
  }

  // T(t) = sum_{s >= t} s^(1 - alpha); unnormalized throughout, with
  // C = sum_t (t^2 - t) t^-alpha T(t)^2 / (2 zeta(alpha) zeta(alpha - 1)^2).
  const Interval tail_t = power_tail(q, cutoff);
  CompensatedSum partial;  // sum_{s=t}^{cutoff-1} s^(1-alpha)
  CompensatedSum head_lo;
  CompensatedSum head_hi;
  for (std::uint64_t t = cutoff - 1; t >= 1; --t) {
    const double td = static_cast<double>(t);
    const double g = std::pow(td, -alpha);
    partial += td * g;
    const double w = (td * td - td) * g;
    const double lo = partial.value() + tail_t.lo;
    const double hi = partial.value() + tail_t.hi;
    head_lo += w * lo * lo;
    head_hi += w * hi * hi;
  }
  const Interval zeta1{partial.value() + tail_t.lo, partial.value() + tail_t.hi};

  // For t >= cutoff: w(t) = t^(2-alpha) (1 - x) and
  // t^(2-alpha) (a + x/2) <= T(t) <= t^(2-alpha) (a + x/2 + k x^2), x = 1/t.
  const double a = 1.0 / (alpha - 2.0);
  const double k = (alpha - 1.0) / 12.0;
  const Poly weight{1.0, -1.0};
  const Poly lower{a, 0.5};
  const Poly upper{a, 0.5, k};
  const Interval tail_lo = tail_of(multiply(weight, multiply(lower, lower)), alpha, cutoff);
  const Interval tail_hi = tail_of(multiply(weight, multiply(upper, upper)), alpha, cutoff);

  const Interval zeta = power_law_normalizer(alpha);
  const double num_lo = head_lo.value() + tail_lo.lo;
  const double num_hi = head_hi.value() + tail_hi.hi;

  SeriesResult r;
  r.bracket = {num_lo / (2.0 * zeta.hi * zeta1.hi * zeta1.hi), num_hi / (2.0 * zeta.lo * zeta1.lo * zeta1.lo)};
  r.value = r.bracket.mid();
  r.terms_summed = cutoff - 1;
  return r;
}

SeriesResult limit_constant(const ReferenceDistribution& dist, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  if (const auto top = dist.support_max()) return finite_limit_constant(dist, *top);

  if (moment(dist, 1.0).divergent || moment(dist, 4.0 / 3.0).divergent) {
    SeriesResult r;
    r.divergent = true;
    return r;
  }
  const double alpha = *dist.alpha();
  std::uint64_t cutoff = 64;
  for (;;) {
    SeriesResult r = limit_constant_at_cutoff(alpha, cutoff);
    if (r.bracket.width() <= tol * r.value || cutoff >= (1ULL << 26)) return r;
    cutoff *= 2;
  }
}

BoundReport bound_report(const DegreeSequence& seq, std::optional<double> alpha) {
  BoundReport report;
  report.n = seq.size();
  report.m = seq.edge_count();
  report.trivial_bound = trivial_bound(seq);
  report.minbucket_bound = minbucket_bound(seq);
  report.alpha = alpha;
  if (alpha) {
    report.power_law = power_law_predictions(*alpha, static_cast<double>(seq.size()),
                                             std::max<double>(1.0, seq.max_degree()));
    report.limit_constant = limit_constant(ReferenceDistribution::power_law(*alpha), 1e-9);
  }
  return report;
}

}  // namespace minbucket
