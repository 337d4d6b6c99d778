#pragma once

#include <ckindex/integer_matrix.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ckindex {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;
};

/// Finite directed graph E = (E0, E1, r, s). Vertices and edges are indexed
/// in declaration order; every matrix and vector in the library uses that
/// order.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Throws GraphError on duplicate identifiers or
  /// edges that mention undeclared vertices.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Edges with s(e) = v, in declaration order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  /// Edges with r(e) = v, in declaration order.
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

  bool is_sink(VertexId v) const { return out_.at(v).empty(); }
  bool is_source(VertexId v) const { return in_.at(v).empty(); }

  /// Same vertices, every edge reversed.
  Graph reversed() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edge_keys() == b.edge_keys();
  }

 private:
  std::vector<std::tuple<std::string, VertexId, VertexId>> edge_keys() const;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

struct GraphProperties {
  bool no_sources = false;
  bool no_sinks = false;
  bool weakly_connected = false;
  bool locally_finite = true;
};

/// Parses the line-oriented graph format:
///   vertex <id>
///   edge <id> <source> <range>
///   # comment
Graph parse_graph(std::string_view text);

GraphProperties validate_graph(const Graph& g);

/// Throws HypothesisViolation naming `context` unless the graph has no sinks
/// and no sources.
void require_no_sinks_no_sources(const Graph& g, std::string_view context);

/// A path mu = mu_1 ... mu_n with r(mu_i) = s(mu_{i+1}). Length 0 paths are
/// vertices. Ordered lexicographically by edge list, then by source vertex.
class Path {
 public:
  Path() = default;

  static Path vertex(VertexId v) { return Path(v, v, {}); }
  static Path of_edge(const Graph& g, EdgeId e);
  /// Throws GraphError if the edges are not composable.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);
  /// Same, looking edges up by name.
  static Path from_names(const Graph& g, const std::vector<std::string>& names);

  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }

  bool is_prefix_of(const Path& other) const;
  /// Path obtained by removing `prefix` from the front; requires
  /// prefix.is_prefix_of(*this).
  Path remainder_after(const Path& prefix) const;
  /// Concatenation; throws GraphError unless range() == tail.source().
  Path concat(const Path& tail) const;
  /// sigma^k: drop the first k edges (k <= length()).
  Path shifted(const Graph& g, std::size_t k) const;
  /// First k edges.
  Path prefix(const Graph& g, std::size_t k) const;
  Path reversed_in(const Graph& reversed_graph) const;

  std::string to_string(const Graph& g) const;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(VertexId s, VertexId r, std::vector<EdgeId> e)
      : edges_(std::move(e)), source_(s), range_(r) {}

  std::vector<EdgeId> edges_;
  VertexId source_ = 0;
  VertexId range_ = 0;
};

/// All paths of length exactly n (optionally ending at `end_at`), in
/// lexicographic order of their edge lists; for n = 0, one path per vertex.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t n,
                                  std::optional<VertexId> end_at = std::nullopt);

/// All paths of length n starting at v. Throws SinkObstruction when some
/// path from v reaches a sink before length n.
std::vector<Path> extensions(const Graph& g, VertexId v, std::size_t n);

/// A(v, w) = number of edges from v to w, in declaration order.
IntMatrix vertex_matrix(const Graph& g);

}  // namespace ckindex
