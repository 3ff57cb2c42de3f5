#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "minbucket/graph.hpp"

namespace minbucket {

/// Equal-degree edges: kConsistent puts the edge in the lower-id endpoint's
/// bucket, kBoth puts it in both buckets (overcounting variant).
enum class TieMode { kConsistent, kBoth };

enum class Algorithm { kTrivial, kMinBucket, kOracle };

std::string_view to_string(TieMode mode) noexcept;
std::string_view to_string(Algorithm algorithm) noexcept;

/// Vertices of a triangle, ascending.
using Triangle = std::array<VertexId, 3>;

/// Edge buckets under the min-degree rule. Bucket v holds the far endpoints of
/// the edges assigned to v, ascending.
class BucketAssignment {
 public:
  BucketAssignment() = default;

  /// rank_degrees empty: rank by realized degree. Otherwise rank_degrees[v] is
  /// the degree used to order endpoints (e.g. target degrees d_v).
  BucketAssignment(const SimpleGraph& g, TieMode mode, std::span<const Degree> rank_degrees = {});

  TieMode tie_mode() const noexcept { return mode_; }
  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const VertexId> bucket(VertexId v) const noexcept {
    return {members_.data() + offsets_[v], members_.data() + offsets_[v + 1]};
  }
  std::uint64_t size(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::uint64_t> sizes() const;
  /// Sum of bucket sizes.
  std::uint64_t total() const noexcept { return members_.size(); }
  std::uint64_t max_size() const noexcept;

  /// Strict total order used for tie breaking: (degree, id).
  bool precedes(VertexId a, VertexId b) const noexcept {
    return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
  }

 private:
  TieMode mode_ = TieMode::kConsistent;
  std::vector<Degree> rank_;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> members_;
};

struct EnumerateOptions {
  TieMode tie_mode = TieMode::kConsistent;
  /// Optional per-vertex degrees to bucket by instead of the realized ones.
  std::span<const Degree> rank_degrees;
  bool list_triangles = false;
  std::size_t list_limit = std::numeric_limits<std::size_t>::max();
  bool keep_bucket_sizes = false;
  unsigned workers = 1;
};

struct WorkReport {
  Algorithm algorithm = Algorithm::kTrivial;
  TieMode tie_mode = TieMode::kConsistent;
  std::uint64_t wedges_enumerated = 0;  // incremented once per examined P2
  std::uint64_t closed_wedges = 0;
  std::uint64_t raw_emissions = 0;      // closed wedges that emitted a triangle
  std::uint64_t triangle_count = 0;     // distinct triangles
  std::vector<Triangle> triangles;      // sorted; filled when listing is on
  bool listing_overflow = false;        // more than list_limit distinct triangles
  std::uint64_t max_bucket = 0;
  std::vector<std::uint64_t> bucket_sizes;
};

/// Examines every neighbor pair of every vertex.
WorkReport trivial_enumerate(const SimpleGraph& g, const EnumerateOptions& options = {});

/// Examines neighbor pairs inside each min-degree bucket only.
WorkReport minbucket_enumerate(const SimpleGraph& g, const EnumerateOptions& options = {});

/// Ground truth by sorted-list intersection over all edges. Sorted, no duplicates.
std::vector<Triangle> oracle_triangles(const SimpleGraph& g);

/// True iff {a, b} is an edge; requires a, b adjacent to v (UsageError otherwise).
bool closed_wedge_check(const SimpleGraph& g, VertexId a, VertexId v, VertexId b);

/// sum_v C(D_v, 2)
std::uint64_t trivial_wedge_total(const SimpleGraph& g);
/// sum_v C(X_v, 2)
std::uint64_t bucket_wedge_total(const BucketAssignment& buckets);

}  // namespace minbucket
