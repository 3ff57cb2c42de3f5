#include "minbucket/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "minbucket/error.hpp"

namespace minbucket {

std::string_view to_string(GraphModel model) noexcept {
  switch (model) {
    case GraphModel::kErasedConfiguration:
      return "ecm";
    case GraphModel::kChungLu:
      return "chung-lu";
  }
  return "unknown";
}

GeneratedGraph generate_ecm(const DegreeSequence& seq, Seed seed) {
  if (seq.stub_sum() % 2 != 0) throw UsageError("stub sum must be even");
  GeneratedGraph out;
  GenerationTrace& trace = out.trace;
  trace.model = GraphModel::kErasedConfiguration;
  trace.seed = seed;
  trace.vertices = seq.size();
  trace.target_edges = seq.edge_count();

  std::vector<VertexId> stubs;
  stubs.reserve(seq.stub_sum());
  const auto degrees = seq.per_vertex();
  for (VertexId v = 0; v < degrees.size(); ++v) stubs.insert(stubs.end(), degrees[v], v);

  Rng rng(seed);
  rng.shuffle(stubs.begin(), stubs.end());

  std::vector<std::uint64_t> keys;
  keys.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const VertexId a = stubs[i];
    const VertexId b = stubs[i + 1];
    if (a == b) {
      ++trace.self_loops_erased;
      continue;
    }
    const std::uint64_t lo = std::min(a, b);
    const std::uint64_t hi = std::max(a, b);
    keys.push_back((lo << 32) | hi);
  }
  std::sort(keys.begin(), keys.end());
  const auto last = std::unique(keys.begin(), keys.end());
  trace.multi_edges_erased = static_cast<std::uint64_t>(keys.end() - last);
  keys.erase(last, keys.end());

  std::vector<Edge> edges;
  edges.reserve(keys.size());
  for (std::uint64_t k : keys) {
    edges.emplace_back(static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xffffffffULL));
  }
  out.graph = SimpleGraph::from_canonical_edges(seq.size(), edges);
  trace.edges = out.graph.edge_count();
  return out;
}

std::uint64_t count_clamped_pairs(const DegreeSequence& seq) {
  const auto d = seq.sorted();
  const std::size_t n = d.size();
  const std::uint64_t two_m = seq.stub_sum();
  std::uint64_t count = 0;
  // first index t with d_i * d_t > 2m; non-increasing in i since d ascends
  std::size_t t = n;
  for (std::size_t i = 0; i < n; ++i) {
    while (t > 0 && static_cast<std::uint64_t>(d[i]) * d[t - 1] > two_m) --t;
    count += n - std::max(t, i + 1);
  }
  return count;
}

namespace {

GeneratedGraph chung_lu_pairwise(const DegreeSequence& seq, Rng& rng) {
  GeneratedGraph out;
  const auto d = seq.per_vertex();
  const double two_m = static_cast<double>(seq.stub_sum());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < d.size(); ++i) {
    for (VertexId j = i + 1; j < d.size(); ++j) {
      const double p = static_cast<double>(d[i]) * d[j] / two_m;
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  out.graph = SimpleGraph::from_canonical_edges(seq.size(), edges);
  return out;
}

GeneratedGraph chung_lu_skipping(const DegreeSequence& seq, Rng& rng) {
  // Vertices in descending degree order; for a fixed u the probabilities to
  // later vertices are non-increasing, so skip geometrically and thin.
  GeneratedGraph out;
  const auto asc = seq.sorted();
  const auto ids = seq.sorted_ids();
  const std::size_t n = asc.size();
  const double two_m = static_cast<double>(seq.stub_sum());
  auto weight = [&](std::size_t k) { return static_cast<double>(asc[n - 1 - k]); };
  auto id = [&](std::size_t k) { return ids[n - 1 - k]; };

  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    std::size_t v = u + 1;
    double p = std::min(1.0, weight(u) * weight(v) / two_m);
    while (v < n && p > 0.0) {
      if (p < 1.0) {
        const double r = rng.uniform();
        v += static_cast<std::size_t>(std::floor(std::log1p(-r) / std::log1p(-p)));
      }
      if (v >= n) break;
      const double q = std::min(1.0, weight(u) * weight(v) / two_m);
      if (rng.uniform() < q / p) {
        const VertexId a = id(u);
        const VertexId b = id(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      p = q;
      ++v;
    }
  }
  std::sort(edges.begin(), edges.end());
  out.graph = SimpleGraph::from_canonical_edges(n, edges);
  return out;
}

}  // namespace

GeneratedGraph generate_chung_lu(const DegreeSequence& seq, Seed seed, ChungLuMethod method) {
  if (seq.stub_sum() == 0) {
    GeneratedGraph empty;
    empty.graph = SimpleGraph::from_canonical_edges(seq.size(), {});
    empty.trace.model = GraphModel::kChungLu;
    empty.trace.seed = seed;
    return empty;
  }
  Rng rng(seed);
  GeneratedGraph out = method == ChungLuMethod::kPairwise ? chung_lu_pairwise(seq, rng) : chung_lu_skipping(seq, rng);
  GenerationTrace& trace = out.trace;
  trace.model = GraphModel::kChungLu;
  trace.seed = seed;
  trace.vertices = seq.size();
  trace.target_edges = seq.edge_count();
  trace.edges = out.graph.edge_count();
  trace.clamped_pairs = count_clamped_pairs(seq);
  return out;
}

}  // namespace minbucket
