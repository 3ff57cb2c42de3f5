#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "minbucket/error.hpp"
#include "minbucket/graph.hpp"

using namespace minbucket;

namespace {

void check_invariants(const SimpleGraph& g) {
  std::uint64_t degree_sum = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto adj = g.neighbors(v);
    degree_sum += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      CHECK(adj[i] != v);
      if (i > 0) CHECK(adj[i - 1] < adj[i]);
      const auto back = g.neighbors(adj[i]);
      CHECK(std::binary_search(back.begin(), back.end(), v));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("from_edges normalizes orientation and duplicates") {
  const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 0}, {3, 2}};
  const SimpleGraph g = SimpleGraph::from_edges(5, edges);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.degree(4) == 0);
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  check_invariants(g);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, loop), UsageError);
}

TEST_CASE("random graphs satisfy the structural invariants") {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + gen() % 60;
    std::vector<Edge> edges;
    for (int k = 0; k < 200; ++k) {
      const auto u = static_cast<VertexId>(gen() % n);
      const auto v = static_cast<VertexId>(gen() % n);
      if (u != v) edges.emplace_back(u, v);
    }
    check_invariants(SimpleGraph::from_edges(n, edges));
  }
}

TEST_CASE("parse_edge_list") {
  SUBCASE("path on three vertices") {
    const SimpleGraph g = parse_edge_list("0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](std::string_view text, std::optional<std::size_t> n = std::nullopt) {
      try {
        parse_edge_list(text, n);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("0 1\n2 2\n") == 2);
    CHECK(line_of("0 x\n") == 1);
    CHECK(line_of("0 1 2\n") == 1);
    CHECK(line_of("\n") == 1);
    CHECK(line_of("0 1\n1 5\n", 4) == 2);
    CHECK(line_of("0 1\n1 2\n1 0\n") == 3);
    CHECK(line_of("0 99999999999\n") == 1);
  }
  SUBCASE("explicit vertex count keeps isolated vertices") {
    CHECK(parse_edge_list("0 1\n", 4).vertex_count() == 4);
    CHECK(parse_edge_list("").vertex_count() == 0);
  }
}

TEST_CASE("save and load round trip") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "minbucket_test_graph.txt";

  const std::string canonical = "0 1\n0 3\n1 2\n2 3\n";
  {
    std::ofstream out(path);
    out << canonical;
  }
  save_graph(load_graph(path), path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == canonical);

  std::mt19937_64 gen(9);
  std::vector<Edge> edges;
  for (int k = 0; k < 300; ++k) {
    const auto u = static_cast<VertexId>(gen() % 80);
    const auto v = static_cast<VertexId>(gen() % 80);
    if (u != v) edges.emplace_back(u, v);
  }
  const SimpleGraph g = SimpleGraph::from_edges(90, edges);
  save_graph(g, path);
  CHECK(load_graph(path, 90) == g);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_graph(dir / "definitely_missing_minbucket.txt"), IoError);
}
