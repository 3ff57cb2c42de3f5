#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "minbucket/degrees.hpp"

namespace minbucket {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable undirected simple graph in CSR form. Adjacency lists are sorted
/// strictly ascending, symmetric, and free of self-loops.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Builds from an edge list with u != v. Orientation is irrelevant; duplicate
  /// edges are collapsed. Throws UsageError on self-loops or ids >= n.
  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Builds from edges already canonical: u < v, sorted, no duplicates.
  static SimpleGraph from_canonical_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint64_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  Degree degree(VertexId v) const noexcept { return static_cast<Degree>(offsets_[v + 1] - offsets_[v]); }
  /// Realized degrees D_v.
  std::vector<Degree> degrees() const;

  /// O(log min(D_u, D_v)) membership query.
  bool has_edge(VertexId u, VertexId v) const noexcept;

  /// Canonical edge list: u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

/// Edge-list text: one "u v" per line, decimal 0-based ids. Lines may list an
/// edge in either orientation. The vertex count is max id + 1 unless n is given,
/// in which case ids >= n are rejected.
SimpleGraph parse_edge_list(std::string_view text, std::optional<std::size_t> n = std::nullopt);
SimpleGraph load_graph(const std::filesystem::path& path, std::optional<std::size_t> n = std::nullopt);

/// Writes the canonical form: u < v on each line, lines sorted.
void save_graph(const SimpleGraph& g, const std::filesystem::path& path);
std::string format_edge_list(const SimpleGraph& g);

}  // namespace minbucket
