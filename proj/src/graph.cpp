#include <ckindex/graph.hpp>

#include <ckindex/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ckindex {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  return head(s.front()) && std::all_of(s.begin() + 1, s.end(), tail);
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<VertexId>(i)).second)
      throw GraphError("duplicate vertex '" + vertices_[i] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const auto& [name, src, rng] : edges) {
    auto s = find_vertex(src);
    if (!s) throw GraphError("edge '" + name + "' uses undeclared vertex '" + src + "'");
    auto r = find_vertex(rng);
    if (!r) throw GraphError("edge '" + name + "' uses undeclared vertex '" + rng + "'");
    auto id = static_cast<EdgeId>(edges_.size());
    if (!edge_index_.emplace(name, id).second)
      throw GraphError("duplicate edge '" + name + "'");
    edges_.push_back(Edge{name, *s, *r});
    out_[*s].push_back(id);
    in_[*r].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::reversed() const {
  std::vector<std::tuple<std::string, std::string, std::string>> e;
  e.reserve(edges_.size());
  for (const auto& edge : edges_)
    e.emplace_back(edge.name, vertices_[edge.range], vertices_[edge.source]);
  return Graph(vertices_, e);
}

std::vector<std::tuple<std::string, VertexId, VertexId>> Graph::edge_keys() const {
  std::vector<std::tuple<std::string, VertexId, VertexId>> keys;
  for (const auto& e : edges_) keys.emplace_back(e.name, e.source, e.range);
  return keys;
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
      if (!is_identifier(tok[1])) throw ParseError(line_no, "bad identifier '" + tok[1] + "'");
      if (std::find(vertices.begin(), vertices.end(), tok[1]) != vertices.end())
        throw ParseError(line_no, "duplicate vertex '" + tok[1] + "'");
      vertices.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'edge <id> <source> <range>'");
      for (std::size_t i = 1; i < 4; ++i)
        if (!is_identifier(tok[i])) throw ParseError(line_no, "bad identifier '" + tok[i] + "'");
      for (const auto& [name, s, r] : edges)
        if (name == tok[1]) throw ParseError(line_no, "duplicate edge '" + tok[1] + "'");
      edges.emplace_back(tok[1], tok[2], tok[3]);
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown declaration '" + tok[0] + "'");
    }
  }
  // Edges may precede the vertices they mention; resolve once everything is read.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [name, s, r] = edges[i];
    for (const auto& v : {s, r})
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
        throw ParseError(edge_lines[i], "edge '" + name + "' uses undeclared vertex '" + v + "'");
  }
  return Graph(std::move(vertices), edges);
}

GraphProperties validate_graph(const Graph& g) {
  GraphProperties p;
  const auto n = g.vertex_count();
  p.no_sources = true;
  p.no_sinks = true;
  for (VertexId v = 0; v < n; ++v) {
    p.no_sources = p.no_sources && !g.is_source(v);
    p.no_sinks = p.no_sinks && !g.is_sink(v);
  }
  // Union-find over the underlying undirected graph.
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::function<VertexId(VertexId)> root = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (const auto& e : g.edges()) parent[root(e.source)] = root(e.range);
  std::size_t components = 0;
  for (VertexId v = 0; v < n; ++v) components += root(v) == v;
  p.weakly_connected = components <= 1;
  return p;
}

void require_no_sinks_no_sources(const Graph& g, std::string_view context) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v))
      throw HypothesisViolation(std::string(context) + ": vertex '" + g.vertex_name(v) +
                                "' is a sink");
    if (g.is_source(v))
      throw HypothesisViolation(std::string(context) + ": vertex '" + g.vertex_name(v) +
                                "' is a source");
  }
}

Path Path::of_edge(const Graph& g, EdgeId e) {
  const auto& edge = g.edge(e);
  return Path(edge.source, edge.range, {e});
}

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw GraphError("use Path::vertex for length-0 paths");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (g.edge(edges[i]).range != g.edge(edges[i + 1]).source)
      throw GraphError("edges '" + g.edge(edges[i]).name + "' and '" +
                       g.edge(edges[i + 1]).name + "' are not composable");
  const auto s = g.edge(edges.front()).source;
  const auto r = g.edge(edges.back()).range;
  return Path(s, r, std::move(edges));
}

Path Path::from_names(const Graph& g, const std::vector<std::string>& names) {
  std::vector<EdgeId> ids;
  for (const auto& n : names) {
    auto e = g.find_edge(n);
    if (!e) throw GraphError("unknown edge '" + n + "'");
    ids.push_back(*e);
  }
  return from_edges(g, std::move(ids));
}

bool Path::is_prefix_of(const Path& other) const {
  return source_ == other.source_ && edges_.size() <= other.edges_.size() &&
         std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

Path Path::remainder_after(const Path& prefix) const {
  return Path(prefix.range_, range_,
              std::vector<EdgeId>(edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                                  edges_.end()));
}

Path Path::concat(const Path& tail) const {
  if (range_ != tail.source_) throw GraphError("paths are not composable");
  std::vector<EdgeId> e = edges_;
  e.insert(e.end(), tail.edges_.begin(), tail.edges_.end());
  return Path(source_, tail.range_, std::move(e));
}

Path Path::shifted(const Graph& g, std::size_t k) const {
  if (k > edges_.size()) throw GraphError("shift longer than path");
  if (k == edges_.size()) return vertex(range_);
  return Path(g.edge(edges_[k]).source, range_,
              std::vector<EdgeId>(edges_.begin() + static_cast<std::ptrdiff_t>(k), edges_.end()));
}

Path Path::prefix(const Graph& g, std::size_t k) const {
  if (k > edges_.size()) throw GraphError("prefix longer than path");
  if (k == 0) return vertex(source_);
  return Path(source_, g.edge(edges_[k - 1]).range,
              std::vector<EdgeId>(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Path Path::reversed_in(const Graph& reversed_graph) const {
  if (edges_.empty()) return *this;
  return from_edges(reversed_graph, std::vector<EdgeId>(edges_.rbegin(), edges_.rend()));
}

std::string Path::to_string(const Graph& g) const {
  if (edges_.empty()) return g.vertex_name(source_);
  std::string s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += '.';
    s += g.edge(edges_[i]).name;
  }
  return s;
}

namespace {

void grow(const Graph& g, std::vector<EdgeId>& stack, VertexId at, std::size_t remaining,
          bool throw_on_sink, std::vector<std::vector<EdgeId>>& out) {
  if (remaining == 0) {
    out.push_back(stack);
    return;
  }
  if (g.is_sink(at) && throw_on_sink)
    throw SinkObstruction("vertex '" + g.vertex_name(at) +
                          "' is a sink; cannot expand p_" + g.vertex_name(at));
  for (EdgeId e : g.out_edges(at)) {
    stack.push_back(e);
    grow(g, stack, g.edge(e).range, remaining - 1, throw_on_sink, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, std::size_t n, std::optional<VertexId> end_at) {
  std::vector<Path> paths;
  if (n == 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!end_at || *end_at == v) paths.push_back(Path::vertex(v));
    return paths;
  }
  std::vector<std::vector<EdgeId>> raw;
  std::vector<EdgeId> stack;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    stack.assign(1, e);
    grow(g, stack, g.edge(e).range, n - 1, false, raw);
  }
  std::sort(raw.begin(), raw.end());
  for (auto& edges : raw) {
    if (end_at && g.edge(edges.back()).range != *end_at) continue;
    paths.push_back(Path::from_edges(g, std::move(edges)));
  }
  return paths;
}

std::vector<Path> extensions(const Graph& g, VertexId v, std::size_t n) {
  if (n == 0) return {Path::vertex(v)};
  std::vector<std::vector<EdgeId>> raw;
  std::vector<EdgeId> stack;
  grow(g, stack, v, n, true, raw);
  std::vector<Path> paths;
  paths.reserve(raw.size());
  for (auto& edges : raw) paths.push_back(Path::from_edges(g, std::move(edges)));
  return paths;
}

IntMatrix vertex_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

}  // namespace ckindex
