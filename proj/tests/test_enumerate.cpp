#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "minbucket/enumerate.hpp"
#include "minbucket/error.hpp"
#include "minbucket/graphgen.hpp"

using namespace minbucket;

namespace {

SimpleGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph from(std::size_t n, std::vector<Edge> edges) { return SimpleGraph::from_edges(n, edges); }

SimpleGraph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return from(10, edges);
}

/// Cubic scan over an adjacency matrix; independent of every library routine.
std::vector<Triangle> brute_triangles(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<Triangle> out;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (adj[a][b])
        for (VertexId c = b + 1; c < n; ++c)
          if (adj[a][c] && adj[b][c]) out.push_back({a, b, c});
  return out;
}

std::vector<std::uint64_t> to_vec(const std::vector<std::uint64_t>& v) { return v; }

EnumerateOptions listing(TieMode mode = TieMode::kConsistent) {
  EnumerateOptions o;
  o.tie_mode = mode;
  o.list_triangles = true;
  o.keep_bucket_sizes = true;
  return o;
}

}  // namespace

TEST_CASE("trivial enumeration on small graphs") {
  const WorkReport k3 = trivial_enumerate(complete(3), listing());
  CHECK(k3.wedges_enumerated == 3);
  CHECK(k3.closed_wedges == 3);
  CHECK(k3.triangle_count == 1);
  CHECK(k3.triangles == std::vector<Triangle>{{0, 1, 2}});

  const WorkReport star = trivial_enumerate(from(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.wedges_enumerated == 3);
  CHECK(star.closed_wedges == 0);
  CHECK(star.triangle_count == 0);

  const WorkReport path = trivial_enumerate(from(3, {{0, 1}, {1, 2}}));
  CHECK(path.wedges_enumerated == 1);
  CHECK(path.triangle_count == 0);
}

TEST_CASE("MinBucket on small graphs") {
  SUBCASE("K3: ties broken by id") {
    const WorkReport r = minbucket_enumerate(complete(3), listing());
    CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{2, 1, 0});
    CHECK(r.wedges_enumerated == 1);
    CHECK(r.triangle_count == 1);
    CHECK(r.raw_emissions == 1);
  }
  SUBCASE("K4") {
    const SimpleGraph g = complete(4);
    const WorkReport r = minbucket_enumerate(g, listing());
    CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{3, 2, 1, 0});
    CHECK(r.wedges_enumerated == 4);
    CHECK(r.triangle_count == 4);
    CHECK(r.raw_emissions == 4);
    CHECK(r.triangles == oracle_triangles(g));
  }
  SUBCASE("star: every edge in a leaf bucket") {
    const WorkReport r = minbucket_enumerate(from(4, {{0, 1}, {0, 2}, {0, 3}}), listing());
    CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{0, 1, 1, 1});
    CHECK(r.wedges_enumerated == 0);
  }
  SUBCASE("path") {
    const WorkReport r = minbucket_enumerate(from(3, {{0, 1}, {1, 2}}), listing());
    CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(r.wedges_enumerated == 0);
  }
  SUBCASE("both mode on K3 puts every edge in both buckets") {
    const WorkReport r = minbucket_enumerate(complete(3), listing(TieMode::kBoth));
    CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(r.wedges_enumerated == 3);
    CHECK(r.raw_emissions == 3);
    CHECK(r.triangle_count == 1);
    CHECK(r.triangles.size() == 1);
  }
}

TEST_CASE("oracle triangles") {
  CHECK(oracle_triangles(complete(4)).size() == 4);
  CHECK(oracle_triangles(from(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 5}})).empty());
  // girth 5
  CHECK(oracle_triangles(petersen()).empty());
  CHECK(brute_triangles(petersen()).empty());
}

TEST_CASE("closed_wedge_check") {
  CHECK(closed_wedge_check(complete(3), 0, 1, 2));
  CHECK_FALSE(closed_wedge_check(from(3, {{0, 1}, {1, 2}}), 0, 1, 2));
  const SimpleGraph k4_minus = from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(closed_wedge_check(k4_minus, 2, 0, 3));
  CHECK_THROWS_AS(closed_wedge_check(k4_minus, 2, 3, 0), UsageError);
  CHECK_THROWS_AS(closed_wedge_check(k4_minus, 1, 0, 1), UsageError);
}

TEST_CASE("random graphs: algorithms agree with the oracles and the work identities hold") {
  std::mt19937_64 gen(2025);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 10 + gen() % 120;
    std::vector<Degree> d(n);
    const Degree top = 1 + static_cast<Degree>(gen() % 15);
    for (auto& x : d) x = 1 + static_cast<Degree>(gen() % top);
    const DegreeSequence seq(d);
    const SimpleGraph g = rep % 2 == 0 ? generate_ecm(seq, gen()).graph : generate_chung_lu(seq, gen()).graph;

    const auto truth = brute_triangles(g);
    CHECK(oracle_triangles(g) == truth);

    const WorkReport trivial = trivial_enumerate(g, listing());
    const WorkReport consistent = minbucket_enumerate(g, listing());
    const WorkReport both = minbucket_enumerate(g, listing(TieMode::kBoth));
    CHECK(trivial.triangles == truth);
    CHECK(consistent.triangles == truth);
    CHECK(both.triangles == truth);
    CHECK(consistent.raw_emissions == truth.size());
    CHECK(trivial.closed_wedges == 3 * truth.size());

    CHECK(trivial.wedges_enumerated == trivial_wedge_total(g));
    CHECK(consistent.wedges_enumerated == bucket_wedge_total(BucketAssignment(g, TieMode::kConsistent)));
    CHECK(both.wedges_enumerated == bucket_wedge_total(BucketAssignment(g, TieMode::kBoth)));
    CHECK(both.wedges_enumerated >= consistent.wedges_enumerated);
    CHECK(consistent.wedges_enumerated <= trivial.wedges_enumerated);
    for (VertexId v = 0; v < n; ++v) CHECK(consistent.bucket_sizes[v] <= g.degree(v));

    for (const WorkReport* r : {&trivial, &consistent, &both}) {
      CHECK(r->triangle_count <= r->closed_wedges);
      CHECK(r->closed_wedges <= r->wedges_enumerated);
      for (const Triangle& t : r->triangles) {
        CHECK(g.has_edge(t[0], t[1]));
        CHECK(g.has_edge(t[0], t[2]));
        CHECK(g.has_edge(t[1], t[2]));
      }
    }
  }
}

TEST_CASE("bucket assignment invariants") {
  const SimpleGraph g = generate_ecm(power_law_sequence({2.2, 3000, 54}), 8).graph;
  const BucketAssignment consistent(g, TieMode::kConsistent);
  const BucketAssignment both(g, TieMode::kBoth);
  CHECK(consistent.total() == g.edge_count());
  CHECK(both.total() >= g.edge_count());
  CHECK(both.total() <= 2 * g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : consistent.bucket(v)) {
      CHECK((g.degree(v) < g.degree(w) || (g.degree(v) == g.degree(w) && v < w)));
    }
  }
}

TEST_CASE("bucketing by target degrees") {
  // Path 0-1-2 with targets (5, 1, 5): vertex 1 owns both edges.
  const SimpleGraph g = from(3, {{0, 1}, {1, 2}});
  const std::vector<Degree> targets{5, 1, 5};
  EnumerateOptions o = listing();
  o.rank_degrees = targets;
  const WorkReport r = minbucket_enumerate(g, o);
  CHECK(to_vec(r.bucket_sizes) == std::vector<std::uint64_t>{0, 2, 0});
  CHECK(r.wedges_enumerated == 1);
  const std::vector<Degree> wrong{1, 2};
  o.rank_degrees = wrong;
  CHECK_THROWS_AS(minbucket_enumerate(g, o), UsageError);
}

TEST_CASE("results do not depend on the worker count") {
  const SimpleGraph g = generate_ecm(power_law_sequence({2.1, 20'000, 141}), 21).graph;
  for (TieMode mode : {TieMode::kConsistent, TieMode::kBoth}) {
    EnumerateOptions one = listing(mode);
    EnumerateOptions many = listing(mode);
    many.workers = 4;
    const WorkReport a = minbucket_enumerate(g, one);
    const WorkReport b = minbucket_enumerate(g, many);
    CHECK(a.wedges_enumerated == b.wedges_enumerated);
    CHECK(a.closed_wedges == b.closed_wedges);
    CHECK(a.triangle_count == b.triangle_count);
    CHECK(a.triangles == b.triangles);
  }
  EnumerateOptions many;
  many.workers = 3;
  CHECK(trivial_enumerate(g).closed_wedges == trivial_enumerate(g, many).closed_wedges);
}

TEST_CASE("listing limit signals overflow") {
  EnumerateOptions o = listing();
  o.list_limit = 3;
  const WorkReport r = minbucket_enumerate(complete(5), o);
  CHECK(r.triangle_count == 10);
  CHECK(r.triangles.size() == 3);
  CHECK(r.listing_overflow);

  o.list_limit = 10;
  CHECK_FALSE(minbucket_enumerate(complete(5), o).listing_overflow);

  const WorkReport count_only = minbucket_enumerate(complete(5));
  CHECK(count_only.triangle_count == 10);
  CHECK(count_only.triangles.empty());
}
