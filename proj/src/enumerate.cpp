#include "minbucket/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "minbucket/error.hpp"

namespace minbucket {

std::string_view to_string(TieMode mode) noexcept {
  return mode == TieMode::kConsistent ? "consistent" : "both";
}

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kTrivial:
      return "trivial";
    case Algorithm::kMinBucket:
      return "minbucket";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

BucketAssignment::BucketAssignment(const SimpleGraph& g, TieMode mode, std::span<const Degree> rank_degrees)
    : mode_(mode) {
  const std::size_t n = g.vertex_count();
  if (rank_degrees.empty()) {
    rank_ = g.degrees();
  } else {
    if (rank_degrees.size() != n) throw UsageError("rank degrees must have one entry per vertex");
    rank_.assign(rank_degrees.begin(), rank_degrees.end());
  }
  auto owns = [&](VertexId v, VertexId w) {
    if (rank_[v] != rank_[w]) return rank_[v] < rank_[w];
    return mode_ == TieMode::kBoth || v < w;
  };
  offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t count = 0;
    for (VertexId w : g.neighbors(v)) count += owns(v, w) ? 1 : 0;
    offsets_[v + 1] = offsets_[v] + count;
  }
  members_.resize(offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t at = offsets_[v];
    for (VertexId w : g.neighbors(v)) {
      if (owns(v, w)) members_[at++] = w;
    }
  }
}

std::vector<std::uint64_t> BucketAssignment::sizes() const {
  std::vector<std::uint64_t> out(vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = size(v);
  return out;
}

std::uint64_t BucketAssignment::max_size() const noexcept {
  std::uint64_t best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, size(v));
  return best;
}

namespace {

struct Partial {
  std::uint64_t wedges = 0;
  std::uint64_t closed = 0;
  std::uint64_t emitted = 0;
  std::uint64_t distinct = 0;
  std::vector<Triangle> triangles;
};

Triangle sorted_triangle(VertexId a, VertexId b, VertexId c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Runs scan(v, partial) over all vertices on `workers` threads and merges the
// per-worker partials; the merged totals do not depend on the worker count.
template <typename Scan>
WorkReport run_scan(std::size_t n, const EnumerateOptions& options, Scan scan) {
  const unsigned workers = std::max(1u, options.workers);
  std::vector<Partial> partials(workers);
  constexpr std::size_t kBlock = 256;
  std::atomic<std::size_t> next{0};
  auto work = [&](Partial& part) {
    for (;;) {
      const std::size_t begin = next.fetch_add(kBlock, std::memory_order_relaxed);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kBlock);
      for (std::size_t v = begin; v < end; ++v) scan(static_cast<VertexId>(v), part);
    }
  };
  if (workers == 1) {
    work(partials[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&, w] { work(partials[w]); });
  }

  WorkReport report;
  report.tie_mode = options.tie_mode;
  for (Partial& part : partials) {
    report.wedges_enumerated += part.wedges;
    report.closed_wedges += part.closed;
    report.raw_emissions += part.emitted;
    report.triangle_count += part.distinct;
    report.triangles.insert(report.triangles.end(), part.triangles.begin(), part.triangles.end());
  }
  if (options.list_triangles) {
    std::sort(report.triangles.begin(), report.triangles.end());
    report.listing_overflow = report.triangle_count > options.list_limit;
    if (report.triangles.size() > options.list_limit) report.triangles.resize(options.list_limit);
  }
  return report;
}

}  // namespace

WorkReport trivial_enumerate(const SimpleGraph& g, const EnumerateOptions& options) {
  auto scan = [&](VertexId v, Partial& part) {
    const auto adj = g.neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        ++part.wedges;
        if (!g.has_edge(adj[i], adj[j])) continue;
        ++part.closed;
        ++part.emitted;
        // each triangle closes three wedges; keep the one centred at its lowest id
        if (v < adj[i]) {
          ++part.distinct;
          if (options.list_triangles && part.triangles.size() < options.list_limit) {
            part.triangles.push_back({v, adj[i], adj[j]});
          }
        }
      }
    }
  };
  WorkReport report = run_scan(g.vertex_count(), options, scan);
  report.algorithm = Algorithm::kTrivial;
  for (VertexId v = 0; v < g.vertex_count(); ++v) report.max_bucket = std::max<std::uint64_t>(report.max_bucket, g.degree(v));
  if (options.keep_bucket_sizes) {
    const auto d = g.degrees();
    report.bucket_sizes.assign(d.begin(), d.end());
  }
  return report;
}

WorkReport minbucket_enumerate(const SimpleGraph& g, const EnumerateOptions& options) {
  const BucketAssignment buckets(g, options.tie_mode, options.rank_degrees);
  auto scan = [&](VertexId v, Partial& part) {
    const auto bucket = buckets.bucket(v);
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        ++part.wedges;
        const VertexId a = bucket[i];
        const VertexId b = bucket[j];
        if (!g.has_edge(a, b)) continue;
        ++part.closed;
        ++part.emitted;
        // The consistent-order minimum of a triangle owns both of its edges in
        // either tie mode, so counting only emissions from it deduplicates.
        if (buckets.precedes(v, a) && buckets.precedes(v, b)) {
          ++part.distinct;
          if (options.list_triangles && part.triangles.size() < options.list_limit) {
            part.triangles.push_back(sorted_triangle(v, a, b));
          }
        }
      }
    }
  };
  WorkReport report = run_scan(g.vertex_count(), options, scan);
  report.algorithm = Algorithm::kMinBucket;
  report.max_bucket = buckets.max_size();
  if (options.keep_bucket_sizes) report.bucket_sizes = buckets.sizes();
  return report;
}

std::vector<Triangle> oracle_triangles(const SimpleGraph& g) {
  std::vector<Triangle> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          out.push_back({u, v, *i});
          ++i;
          ++j;
        }
      }
    }
  }
  return out;
}

bool closed_wedge_check(const SimpleGraph& g, VertexId a, VertexId v, VertexId b) {
  if (v >= g.vertex_count() || a == b) throw UsageError("not a wedge");
  const auto adj = g.neighbors(v);
  if (!std::binary_search(adj.begin(), adj.end(), a) || !std::binary_search(adj.begin(), adj.end(), b)) {
    throw UsageError("wedge endpoints must both be adjacent to the centre vertex");
  }
  return g.has_edge(a, b);
}

std::uint64_t trivial_wedge_total(const SimpleGraph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

std::uint64_t bucket_wedge_total(const BucketAssignment& buckets) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < buckets.vertex_count(); ++v) {
    const std::uint64_t x = buckets.size(v);
    total += x * (x - (x > 0 ? 1 : 0)) / 2;
  }
  return total;
}

}  // namespace minbucket
