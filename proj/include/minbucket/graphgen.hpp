#pragma once

#include <cstdint>
#include <string_view>

#include "minbucket/degrees.hpp"
#include "minbucket/graph.hpp"
#include "minbucket/rng.hpp"

namespace minbucket {

enum class GraphModel { kErasedConfiguration, kChungLu };

std::string_view to_string(GraphModel model) noexcept;

/// Bookkeeping from one generation run.
struct GenerationTrace {
  GraphModel model = GraphModel::kErasedConfiguration;
  Seed seed = 0;
  std::uint64_t vertices = 0;
  std::uint64_t target_edges = 0;  // m = stub_sum / 2
  std::uint64_t edges = 0;
  std::uint64_t self_loops_erased = 0;
  std::uint64_t multi_edges_erased = 0;  // a pair matched k times contributes k - 1
  std::uint64_t clamped_pairs = 0;       // Chung-Lu pairs with d_i d_j / 2m > 1
};

struct GeneratedGraph {
  SimpleGraph graph;
  GenerationTrace trace;
};

/// Erased configuration model: uniformly shuffle the 2m stubs, pair consecutive
/// positions, then drop self-loops and collapse parallel edges. Vertex ids follow
/// seq.per_vertex(). edges + self_loops_erased + multi_edges_erased == m.
GeneratedGraph generate_ecm(const DegreeSequence& seq, Seed seed);

enum class ChungLuMethod {
  kPairwise,  // one Bernoulli per unordered pair, O(n^2)
  kSkipping,  // geometric skipping over degree-sorted pairs, O(n + m)
};

/// Chung-Lu: pair {i, j} present independently with probability
/// min(1, d_i d_j / 2m). Both methods sample the same distribution but consume
/// randomness differently, so equal seeds give different graphs across methods.
GeneratedGraph generate_chung_lu(const DegreeSequence& seq, Seed seed,
                                 ChungLuMethod method = ChungLuMethod::kPairwise);

/// Number of unordered pairs with d_i d_j > 2m.
std::uint64_t count_clamped_pairs(const DegreeSequence& seq);

}  // namespace minbucket
