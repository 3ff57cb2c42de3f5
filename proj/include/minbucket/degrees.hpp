#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minbucket/rng.hpp"
#include "minbucket/series.hpp"

namespace minbucket {

using Degree = std::uint32_t;
using VertexId = std::uint32_t;

/// Target degrees d_1..d_n of a random graph.
///
/// Holds the per-vertex degrees in input order (these define vertex ids for
/// graph generation) plus an ascending view and the permutation back to ids.
/// Every degree is at least 1 and the stub sum is even: when the input sum is
/// odd, the lowest-id vertex of minimum degree gets one extra stub and
/// parity_adjusted() reports it.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<Degree> per_vertex);

  std::size_t size() const noexcept { return per_vertex_.size(); }
  bool empty() const noexcept { return per_vertex_.empty(); }

  std::span<const Degree> per_vertex() const noexcept { return per_vertex_; }
  Degree operator[](VertexId v) const { return per_vertex_[v]; }

  /// Degrees sorted ascending.
  std::span<const Degree> sorted() const noexcept { return sorted_; }
  /// sorted()[i] == per_vertex()[sorted_ids()[i]]
  std::span<const VertexId> sorted_ids() const noexcept { return sorted_ids_; }

  std::uint64_t stub_sum() const noexcept { return stub_sum_; }
  std::uint64_t edge_count() const noexcept { return stub_sum_ / 2; }
  Degree max_degree() const noexcept { return sorted_.empty() ? 0 : sorted_.back(); }
  Degree min_degree() const noexcept { return sorted_.empty() ? 0 : sorted_.front(); }

  bool parity_adjusted() const noexcept { return parity_adjusted_; }
  /// Vertex that received the parity stub, if any.
  std::optional<VertexId> parity_vertex() const noexcept { return parity_vertex_; }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.per_vertex_ == b.per_vertex_;
  }

 private:
  std::vector<Degree> per_vertex_;
  std::vector<Degree> sorted_;
  std::vector<VertexId> sorted_ids_;
  std::uint64_t stub_sum_ = 0;
  bool parity_adjusted_ = false;
  std::optional<VertexId> parity_vertex_;
};

struct PowerLawParams {
  double alpha = 2.0;
  std::uint64_t n = 0;
  Degree d_max = 1;

  /// Throws ParameterError unless alpha > 1 and 1 <= d_max <= n - 1.
  void validate() const;
};

/// Deterministic inverse-CDF construction: vertex i (1-based) gets the smallest
/// d with F(d) >= (i - 0.5) / n, F the CDF of mass proportional to d^-alpha on
/// {1..d_max}. Output is ascending in vertex id.
DegreeSequence power_law_sequence(const PowerLawParams& params);

/// Value plus rigorous enclosure of an infinite or finite series. A divergent
/// series has divergent = true and meaningless value/bracket.
struct SeriesResult {
  double value = 0.0;
  Interval bracket;
  bool divergent = false;
  std::uint64_t terms_summed = 0;
};

/// Reference degree distribution f on {1, 2, ...} with optional truncation cap.
///
/// Either the parametric power law f(t) = t^-alpha / zeta(alpha) or an explicit
/// finite table (weights for t = 1..K, normalized on construction). With a cap
/// the truncated pmf f(t) / sum_{s<=cap} f(s) is supported on {1..cap}.
class ReferenceDistribution {
 public:
  static ReferenceDistribution power_law(double alpha, std::optional<Degree> cap = std::nullopt);
  /// weights[t-1] is the (unnormalized) mass of degree t.
  static ReferenceDistribution table(std::vector<double> weights,
                                     std::optional<Degree> cap = std::nullopt);
  static ReferenceDistribution point_mass(Degree t);

  bool is_power_law() const noexcept { return alpha_.has_value(); }
  std::optional<double> alpha() const noexcept { return alpha_; }
  std::optional<Degree> cap() const noexcept { return cap_; }
  /// Largest degree with positive truncated mass; nullopt for an uncapped power law.
  std::optional<Degree> support_max() const noexcept;

  ReferenceDistribution with_cap(std::optional<Degree> cap) const;

  /// Untruncated f(t).
  double pmf(std::uint64_t t) const;
  /// Truncated f_n(t); equals pmf(t) when there is no cap.
  double truncated_pmf(std::uint64_t t) const;
  /// 1 - gamma_n = 1 / sum_{s<=cap} f(s).
  double renormalizer() const noexcept { return renormalizer_; }
  double gamma() const noexcept { return 1.0 - renormalizer_; }
  /// Enclosure of the power-law normalizer zeta(alpha).
  Interval zeta_bracket() const noexcept { return zeta_; }

  /// Cumulative truncated distribution on {1..support_max()}; requires a finite support.
  std::vector<double> truncated_cdf() const;

 private:
  ReferenceDistribution() = default;
  void finalize();

  std::optional<double> alpha_;
  std::vector<double> table_;  // normalized f(1..K) for table distributions
  std::optional<Degree> cap_;
  Interval zeta_{1.0, 1.0};
  double renormalizer_ = 1.0;
};

/// Normalizer sum_{t>=1} t^-alpha with relative error below 1e-12.
Interval power_law_normalizer(double alpha);

/// r-th moment sum_t t^r f(t) of the (truncated, when capped) distribution.
/// For an uncapped power law the series diverges iff r >= alpha - 1.
SeriesResult moment(const ReferenceDistribution& dist, double r, double tol = 1e-12);

/// n independent draws from the truncated pmf; the parity rule is applied.
DegreeSequence sample_iid_degrees(const ReferenceDistribution& dist, std::size_t n, Seed seed);

struct TruncationReport {
  Degree max_degree = 0;
  std::uint64_t m = 0;
  bool below_half_sqrt_m = false;     // max < sqrt(m)/2
  bool below_quarter_sqrt_m = false;  // max < sqrt(m)/4
  std::string message;
};

/// Checks the maximum degree against sqrt(m)/2 and sqrt(m)/4 (strict inequalities,
/// evaluated exactly in integers). strict = true turns a failed sqrt(m)/2 check
/// into a TruncationError.
TruncationReport validate_truncation(const DegreeSequence& seq, bool strict = false);

/// One positive decimal integer per line, in vertex order.
DegreeSequence read_degree_file(const std::filesystem::path& path);
DegreeSequence parse_degrees(std::string_view text);
void write_degree_file(const DegreeSequence& seq, const std::filesystem::path& path);

}  // namespace minbucket
