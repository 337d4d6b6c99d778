#include <ckindex/ck_algebra.hpp>

#include <ckindex/errors.hpp>

#include <algorithm>

namespace ckindex {

namespace {

void require_same_graph(const Element& a, const Element& b) {
  if (a.graph_ptr() != b.graph_ptr()) throw GraphMismatch();
}

std::string word_string(const Graph& g, const Word& w) {
  auto chain = [&](const Path& p) {
    std::string s;
    for (EdgeId e : p.edges()) {
      if (!s.empty()) s += '*';
      s += "S(" + g.edge(e).name + ")";
    }
    return s;
  };
  if (w.mu.length() == 0 && w.nu.length() == 0) return "p(" + g.vertex_name(w.mu.source()) + ")";
  std::string s = chain(w.mu);
  if (w.nu.length() > 0) {
    if (!s.empty()) s += '*';
    s += "adj(" + chain(w.nu) + ")";
  }
  return s;
}

// Product of two words, or nullopt when it vanishes.
std::optional<Word> word_product(const Word& x, const Word& y) {
  if (x.nu.is_prefix_of(y.mu)) return Word{x.mu.concat(y.mu.remainder_after(x.nu)), y.nu};
  if (y.mu.is_prefix_of(x.nu)) return Word{x.mu, y.nu.concat(x.nu.remainder_after(y.mu))};
  return std::nullopt;
}

}  // namespace

Element::Element(GraphPtr graph, Terms terms) : graph_(std::move(graph)) {
  for (auto& [w, c] : terms) add_term(w, c);
}

Element Element::word(GraphPtr g, Path mu, Path nu, GaussianRational c) {
  if (mu.range() != nu.range()) throw InvalidInput("word S_mu S_nu^* needs r(mu) = r(nu)");
  Element e(std::move(g));
  e.add_term(Word{std::move(mu), std::move(nu)}, c);
  return e;
}

Element Element::vertex_projection(GraphPtr g, VertexId v) {
  return word(std::move(g), Path::vertex(v), Path::vertex(v));
}

Element Element::generator(GraphPtr g, EdgeId e) {
  const Path p = Path::of_edge(*g, e);
  return word(std::move(g), p, Path::vertex(p.range()));
}

Element Element::path(GraphPtr g, const Path& mu) {
  return word(std::move(g), mu, Path::vertex(mu.range()));
}

Element Element::path_projection(GraphPtr g, const Path& mu) {
  return word(std::move(g), mu, mu);
}

Element Element::identity(GraphPtr g) {
  Element e(g);
  for (VertexId v = 0; v < g->vertex_count(); ++v)
    e.add_term(Word{Path::vertex(v), Path::vertex(v)}, 1);
  return e;
}

void Element::add_term(const Word& w, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  require_same_graph(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_graph(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element operator*(const GaussianRational& c, const Element& a) {
  Element r(a.graph_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  return r;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

std::size_t Element::level() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.min_length());
  return m;
}

std::size_t Element::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max({m, w.mu.length(), w.nu.length()});
  return m;
}

std::set<long> Element::raw_degrees() const {
  std::set<long> d;
  for (const auto& [w, c] : terms_) d.insert(w.degree());
  return d;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    GaussianRational mag = c;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) negative = true;
    if (sgn(c.re()) == 0 && sgn(c.im()) < 0) negative = true;
    if (negative) mag = -c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (!(mag == GaussianRational(1))) s += mag.to_string() + " ";
    s += word_string(*graph_, w);
    first = false;
  }
  return s;
}

Element multiply(const Element& a, const Element& b) {
  require_same_graph(a, b);
  Element r(a.graph_ptr());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      if (auto w = word_product(x, y)) r.add_term(*w, cx * cy);
  return r;
}

Element adjoint(const Element& a) {
  Element r(a.graph_ptr());
  for (const auto& [w, c] : a.terms()) r.add_term(Word{w.nu, w.mu}, c.conj());
  return r;
}

Element linear_combine(const std::vector<std::pair<GaussianRational, Element>>& pairs) {
  if (pairs.empty()) throw InvalidInput("linear_combine needs at least one element");
  Element r(pairs.front().second.graph_ptr());
  for (const auto& [c, e] : pairs) r += c * e;
  return r;
}

Element gauge_component(const Element& a, long k) {
  Element r(a.graph_ptr());
  for (const auto& [w, c] : a.terms())
    if (w.degree() == k) r.add_term(w, c);
  return r;
}

Element expectation(const Element& a) { return gauge_component(a, 0); }

Element grade_commutator(const Element& a) {
  Element r(a.graph_ptr());
  for (const auto& [w, c] : a.terms())
    if (w.degree() != 0) r.add_term(w, GaussianRational(w.degree()) * c);
  return r;
}

Element normal_form(const Element& a, std::size_t m) {
  const Graph& g = a.graph();
  Element r(a.graph_ptr());
  for (const auto& [w, c] : a.terms()) {
    const std::size_t have = w.min_length();
    if (have >= m) {
      r.add_term(w, c);
      continue;
    }
    for (const Path& tail : extensions(g, w.mu.range(), m - have))
      r.add_term(Word{w.mu.concat(tail), w.nu.concat(tail)}, c);
  }
  return r;
}

bool is_zero(const Element& a) {
  if (a.empty()) return true;
  return normal_form(a, a.level()).empty();
}

bool is_equal(const Element& a, const Element& b) { return is_zero(a - b); }

std::set<long> gauge_degrees(const Element& a) {
  std::set<long> degrees;
  for (long k : a.raw_degrees())
    if (!is_zero(gauge_component(a, k))) degrees.insert(k);
  return degrees;
}

ElementClassification classify(const Element& a) {
  ElementClassification c;
  c.degrees = gauge_degrees(a);
  c.in_F = std::all_of(c.degrees.begin(), c.degrees.end(), [](long d) { return d == 0; });
  if (c.degrees.size() == 1) c.homogeneous_degree = *c.degrees.begin();
  const Element star = adjoint(a);
  c.is_partial_isometry = is_equal(multiply(multiply(a, star), a), a);
  c.is_projection = is_equal(a, star) && is_equal(multiply(a, a), a);
  return c;
}

}  // namespace ckindex
