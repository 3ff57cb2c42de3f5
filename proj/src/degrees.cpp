#include "minbucket/degrees.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "minbucket/error.hpp"

namespace minbucket {

DegreeSequence::DegreeSequence(std::vector<Degree> per_vertex) : per_vertex_(std::move(per_vertex)) {
  if (per_vertex_.size() > std::numeric_limits<VertexId>::max()) {
    throw ParameterError("degree sequence too long for 32-bit vertex ids");
  }
  std::uint64_t sum = 0;
  for (std::size_t v = 0; v < per_vertex_.size(); ++v) {
    if (per_vertex_[v] == 0) {
      throw ParameterError("degree of vertex " + std::to_string(v) + " is 0; degrees must be positive");
    }
    sum += per_vertex_[v];
  }
  if (sum % 2 == 1) {
    const auto it = std::min_element(per_vertex_.begin(), per_vertex_.end());
    ++*it;
    ++sum;
    parity_adjusted_ = true;
    parity_vertex_ = static_cast<VertexId>(it - per_vertex_.begin());
  }
  stub_sum_ = sum;

  sorted_ids_.resize(per_vertex_.size());
  std::iota(sorted_ids_.begin(), sorted_ids_.end(), VertexId{0});
  std::stable_sort(sorted_ids_.begin(), sorted_ids_.end(),
                   [&](VertexId a, VertexId b) { return per_vertex_[a] < per_vertex_[b]; });
  sorted_.reserve(per_vertex_.size());
  for (VertexId v : sorted_ids_) sorted_.push_back(per_vertex_[v]);
}

void PowerLawParams::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ParameterError("power-law exponent must be a finite value > 1");
  }
  if (n == 0) throw ParameterError("vertex count must be positive");
  if (d_max < 1) throw ParameterError("d_max must be at least 1");
  if (d_max > n - 1) throw ParameterError("d_max must not exceed n - 1");
}

DegreeSequence power_law_sequence(const PowerLawParams& params) {
  params.validate();
  std::vector<double> cdf(params.d_max);
  CompensatedSum acc;
  for (Degree d = 1; d <= params.d_max; ++d) {
    acc += std::pow(static_cast<double>(d), -params.alpha);
    cdf[d - 1] = acc.value();
  }
  const double total = cdf.back();
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;

  std::vector<Degree> degrees(params.n);
  const double n = static_cast<double>(params.n);
  std::size_t d = 0;
  for (std::uint64_t i = 1; i <= params.n; ++i) {
    const double q = (static_cast<double>(i) - 0.5) / n;
    while (cdf[d] < q) ++d;  // quantiles increase with i
    degrees[i - 1] = static_cast<Degree>(d + 1);
  }
  return DegreeSequence(std::move(degrees));
}

namespace {

/// sum_{t>=1} t^-s, s > 1, to relative width tol.
Interval zeta_enclosure(double s, double tol) {
  std::uint64_t start = 16;
  for (;;) {
    CompensatedSum head;
    for (std::uint64_t t = start - 1; t >= 1; --t) head += std::pow(static_cast<double>(t), -s);
    const Interval tail = power_tail(s, start);
    const Interval total{head.value() + tail.lo, head.value() + tail.hi};
    if (total.width() <= tol * total.lo || start >= (1ULL << 22)) return total;
    start *= 4;
  }
}

}  // namespace

Interval power_law_normalizer(double alpha) {
  if (!(alpha > 1.0)) throw ParameterError("power-law normalizer requires alpha > 1");
  return zeta_enclosure(alpha, 1e-12);
}

ReferenceDistribution ReferenceDistribution::power_law(double alpha, std::optional<Degree> cap) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ParameterError("power-law exponent must be a finite value > 1");
  }
  ReferenceDistribution dist;
  dist.alpha_ = alpha;
  dist.cap_ = cap;
  dist.zeta_ = power_law_normalizer(alpha);
  dist.finalize();
  return dist;
}

ReferenceDistribution ReferenceDistribution::table(std::vector<double> weights, std::optional<Degree> cap) {
  if (weights.empty()) throw ParameterError("pmf table is empty");
  CompensatedSum total;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ParameterError("pmf weights must be finite and non-negative");
    total += w;
  }
  if (!(total.value() > 0.0)) throw ParameterError("pmf table has zero total mass");
  for (double& w : weights) w /= total.value();
  ReferenceDistribution dist;
  dist.table_ = std::move(weights);
  dist.cap_ = cap;
  dist.finalize();
  return dist;
}

ReferenceDistribution ReferenceDistribution::point_mass(Degree t) {
  if (t == 0) throw ParameterError("degree 0 is not in the support");
  std::vector<double> weights(t, 0.0);
  weights.back() = 1.0;
  return table(std::move(weights));
}

ReferenceDistribution ReferenceDistribution::with_cap(std::optional<Degree> cap) const {
  ReferenceDistribution copy = *this;
  copy.cap_ = cap;
  copy.finalize();
  return copy;
}

void ReferenceDistribution::finalize() {
  if (cap_ && *cap_ == 0) throw ParameterError("truncation cap must be at least 1");
  renormalizer_ = 1.0;
  if (alpha_ && cap_) {
    CompensatedSum mass;
    for (Degree t = *cap_; t >= 1; --t) mass += pmf(t);
    renormalizer_ = 1.0 / mass.value();
  } else if (!alpha_ && cap_ && *cap_ < table_.size()) {
    CompensatedSum mass;
    for (Degree t = 1; t <= *cap_; ++t) mass += table_[t - 1];
    if (!(mass.value() > 0.0)) throw ParameterError("truncation removes all probability mass");
    renormalizer_ = 1.0 / mass.value();
  }
}

std::optional<Degree> ReferenceDistribution::support_max() const noexcept {
  if (alpha_) return cap_;
  Degree k = static_cast<Degree>(table_.size());
  if (cap_) k = std::min(k, *cap_);
  while (k > 1 && table_[k - 1] == 0.0) --k;
  return k;
}

double ReferenceDistribution::pmf(std::uint64_t t) const {
  if (t == 0) return 0.0;
  if (alpha_) return std::pow(static_cast<double>(t), -*alpha_) / zeta_.mid();
  return t <= table_.size() ? table_[t - 1] : 0.0;
}

double ReferenceDistribution::truncated_pmf(std::uint64_t t) const {
  if (cap_ && t > *cap_) return 0.0;
  return pmf(t) * renormalizer_;
}

std::vector<double> ReferenceDistribution::truncated_cdf() const {
  const auto top = support_max();
  if (!top) throw ParameterError("distribution has unbounded support; set a truncation cap");
  std::vector<double> cdf(*top);
  CompensatedSum acc;
  for (Degree t = 1; t <= *top; ++t) {
    acc += truncated_pmf(t);
    cdf[t - 1] = acc.value();
  }
  return cdf;
}

SeriesResult moment(const ReferenceDistribution& dist, double r, double tol) {
  if (!(r > 0.0)) throw ParameterError("moment order must be positive");
  SeriesResult result;
  if (const auto top = dist.support_max()) {
    CompensatedSum acc;
    for (Degree t = *top; t >= 1; --t) acc += std::pow(static_cast<double>(t), r) * dist.truncated_pmf(t);
    result.value = acc.value();
    result.bracket = {result.value, result.value};
    result.terms_summed = *top;
    return result;
  }

  const double alpha = *dist.alpha();
  const double s = alpha - r;
  if (!(s > 1.0)) {
    result.divergent = true;
    return result;
  }
  const Interval z = dist.zeta_bracket();
  std::uint64_t start = 16;
  for (;;) {
    CompensatedSum head;
    for (std::uint64_t t = start - 1; t >= 1; --t) head += std::pow(static_cast<double>(t), -s);
    const Interval tail = power_tail(s, start);
    const Interval num{head.value() + tail.lo, head.value() + tail.hi};
    result.bracket = {num.lo / z.hi, num.hi / z.lo};
    result.value = (head.value() + tail.mid()) / z.mid();
    result.terms_summed = start - 1;
    if (result.bracket.width() <= tol * result.value || start >= (1ULL << 22)) return result;
    start *= 4;
  }
}

DegreeSequence sample_iid_degrees(const ReferenceDistribution& dist, std::size_t n, Seed seed) {
  const std::vector<double> cdf = dist.truncated_cdf();
  const double total = cdf.back();
  Rng rng(seed);
  std::vector<Degree> degrees(n);
  for (auto& d : degrees) {
    const double x = rng.uniform() * total;
    const auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
    d = static_cast<Degree>(std::min(idx, cdf.size() - 1) + 1);
  }
  return DegreeSequence(std::move(degrees));
}

TruncationReport validate_truncation(const DegreeSequence& seq, bool strict) {
  TruncationReport report;
  report.max_degree = seq.max_degree();
  report.m = seq.edge_count();
  const auto dmax = static_cast<unsigned __int128>(report.max_degree);
  // max < sqrt(m)/c  <=>  c^2 max^2 < m
  report.below_half_sqrt_m = 4 * dmax * dmax < report.m;
  report.below_quarter_sqrt_m = 16 * dmax * dmax < report.m;
  std::ostringstream msg;
  if (!report.below_half_sqrt_m) {
    msg << "max degree " << report.max_degree << " is not below sqrt(m)/2 = "
        << std::sqrt(static_cast<double>(report.m)) / 2.0 << " (m = " << report.m << ")";
  } else if (!report.below_quarter_sqrt_m) {
    msg << "max degree " << report.max_degree << " is below sqrt(m)/2 but not below sqrt(m)/4";
  }
  report.message = msg.str();
  if (strict && !report.below_half_sqrt_m) throw TruncationError(report.message);
  return report;
}

DegreeSequence parse_degrees(std::string_view text) {
  std::vector<Degree> degrees;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) throw ParseError(line_no, "empty line");
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw ParseError(line_no, "expected a positive decimal integer, got '" + std::string(line) + "'");
    }
    if (value == 0) throw ParseError(line_no, "degree must be positive");
    if (value > std::numeric_limits<Degree>::max()) throw ParseError(line_no, "degree out of range");
    degrees.push_back(static_cast<Degree>(value));
  }
  return DegreeSequence(std::move(degrees));
}

DegreeSequence read_degree_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open degree file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_degrees(buffer.str());
}

void write_degree_file(const DegreeSequence& seq, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write degree file " + path.string());
  for (Degree d : seq.per_vertex()) out << d << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace minbucket
