#include "random.hpp"

namespace ckindex::testing {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<EdgeId> backward_walk(const Graph& g, VertexId range, std::size_t len, Rng& rng) {
  std::vector<EdgeId> rev;
  VertexId at = range;
  for (std::size_t i = 0; i < len; ++i) {
    const auto in = g.in_edges(at);
    if (in.empty()) break;
    const EdgeId e = in[uniform(rng, 0, in.size() - 1)];
    rev.push_back(e);
    at = g.edge(e).source;
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

Path random_path_ending_at(const Graph& g, VertexId range, std::size_t max_len, Rng& rng) {
  auto edges = backward_walk(g, range, uniform(rng, 0, max_len), rng);
  if (edges.empty()) return Path::vertex(range);
  return Path::from_edges(g, std::move(edges));
}

Path random_path(const Graph& g, std::size_t max_len, Rng& rng) {
  const auto v = static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1));
  return random_path_ending_at(g, v, max_len, rng);
}

GaussianRational random_coefficient(Rng& rng, bool gaussian) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im = 0;
  if (gaussian && uniform(rng, 0, 2) == 0) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  if (re == 0 && im == 0) re = 1;
  return GaussianRational(re, im);
}

Element random_element(const GraphPtr& g, std::size_t max_terms, std::size_t max_len, Rng& rng, bool gaussian) {
  Element a(g);
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    const Path mu = random_path(*g, max_len, rng);
    const Path nu = random_path_ending_at(*g, mu.range(), max_len, rng);
    a.add_term({mu, nu}, random_coefficient(rng, gaussian));
  }
  return a;
}

Element random_core_element(const GraphPtr& g, std::size_t max_terms, std::size_t max_len, Rng& rng) {
  Element a(g);
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    const Path mu = random_path(*g, max_len, rng);
    const auto edges = backward_walk(*g, mu.range(), mu.length(), rng);
    if (edges.size() != mu.length()) continue;
    const Path nu = edges.empty() ? Path::vertex(mu.range()) : Path::from_edges(*g, edges);
    a.add_term({mu, nu}, random_coefficient(rng));
  }
  return a;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace ckindex::testing
