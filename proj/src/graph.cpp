#include "minbucket/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "minbucket/error.hpp"

namespace minbucket {

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) throw UsageError("vertex id out of range");
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return from_canonical_edges(n, canon);
}

SimpleGraph SimpleGraph::from_canonical_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) input fills every list in ascending order: for vertex x the
  // smaller neighbors arrive as (w, x) pairs ordered by w before any (x, y).
  for (auto [u, v] : edges) g.neighbors_[cursor[v]++] = u;
  for (auto [u, v] : edges) g.neighbors_[cursor[u]++] = v;
  return g;
}

std::vector<Degree> SimpleGraph::degrees() const {
  std::vector<Degree> out(vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = degree(static_cast<VertexId>(v));
  return out;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool parse_id(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text, std::optional<std::size_t> n) {
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const std::uint64_t limit =
      n ? static_cast<std::uint64_t>(*n) : static_cast<std::uint64_t>(std::numeric_limits<VertexId>::max());
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t space = line.find(' ');
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (space == std::string_view::npos || !parse_id(line.substr(0, space), u) ||
        !parse_id(line.substr(space + 1), v)) {
      throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u >= limit || v >= limit) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v)));
  }
  const std::size_t count = n ? *n : (edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1);

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && edges[order[k]] == edges[order[k - 1]]) {
      throw ParseError(order[k] + 1, "duplicate edge");
    }
    canon.push_back(edges[order[k]]);
  }
  return SimpleGraph::from_canonical_edges(count, canon);
}

SimpleGraph load_graph(const std::filesystem::path& path, std::optional<std::size_t> n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str(), n);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out;
  out.reserve(g.edge_count() * 12);
  char buf[16];
  for (auto [u, v] : g.edges()) {
    out.append(buf, std::to_chars(buf, buf + sizeof buf, u).ptr);
    out.push_back(' ');
    out.append(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
    out.push_back('\n');
  }
  return out;
}

void save_graph(const SimpleGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write graph file " + path.string());
  out << format_edge_list(g);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace minbucket
