#pragma once

#include <ckindex/gaussian_rational.hpp>
#include <ckindex/graph.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ckindex {

using GraphPtr = std::shared_ptr<const Graph>;

/// Spanning word S_mu S_nu^* with r(mu) = r(nu). Both paths of length zero
/// gives the vertex projection p_v.
struct Word {
  Path mu;
  Path nu;

  /// Gauge degree |mu| - |nu|.
  long degree() const {
    return static_cast<long>(mu.length()) - static_cast<long>(nu.length());
  }
  std::size_t min_length() const { return std::min(mu.length(), nu.length()); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Finite Q(i)-linear combination of spanning words of C*(E). Terms are kept
/// in a sorted map with zero coefficients pruned; two elements compare equal
/// with `==` only if their term lists match literally. Use is_equal for
/// equality in the algebra.
class Element {
 public:
  using Terms = std::map<Word, GaussianRational>;

  explicit Element(GraphPtr graph) : graph_(std::move(graph)) {}
  Element(GraphPtr graph, Terms terms);

  static Element zero(GraphPtr g) { return Element(std::move(g)); }
  static Element word(GraphPtr g, Path mu, Path nu, GaussianRational c = 1);
  static Element vertex_projection(GraphPtr g, VertexId v);
  static Element generator(GraphPtr g, EdgeId e);
  /// S_mu.
  static Element path(GraphPtr g, const Path& mu);
  /// p_mu = S_mu S_mu^*.
  static Element path_projection(GraphPtr g, const Path& mu);
  /// 1 = sum of all vertex projections.
  static Element identity(GraphPtr g);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(const Word& w, const GaussianRational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const GaussianRational& c, const Element& a);
  /// Algebra product; see multiply().
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.graph_ == b.graph_ && a.terms_ == b.terms_;
  }

  /// Largest min(|mu|, |nu|) over the terms (0 for the zero element).
  std::size_t level() const;
  std::size_t max_length() const;
  std::set<long> raw_degrees() const;

  /// Expression string accepted by parse_expression.
  std::string to_string() const;

 private:
  GraphPtr graph_;
  Terms terms_;
};

/// Product in C*(E) using
///   (S_mu S_nu^*)(S_a S_b^*) = S_{mu a'} S_b^*  if a = nu a',
///                            = S_mu S_{b nu'}^* if nu = a nu',
///                            = 0 otherwise.
Element multiply(const Element& a, const Element& b);
Element adjoint(const Element& a);
Element linear_combine(const std::vector<std::pair<GaussianRational, Element>>& pairs);

/// Sum of the terms of gauge degree k.
Element gauge_component(const Element& a, long k);
/// Faithful conditional expectation onto the fixed-point algebra F.
Element expectation(const Element& a);
/// [D, a] = sum_k k * gauge_component(a, k).
Element grade_commutator(const Element& a);

/// Rewrites every term with min(|mu|,|nu|) < m as
///   S_mu S_nu^* = sum_{|l| = m - min, s(l) = r(mu)} S_{mu l} S_{nu l}^*.
/// Terms already at or beyond level m are left alone. Throws SinkObstruction
/// when an expansion runs into a sink.
Element normal_form(const Element& a, std::size_t m);

/// Equality in C*(E): a - b expands to zero at its own level. The level-m
/// expanded words are linearly independent, so this is a decision procedure.
bool is_equal(const Element& a, const Element& b);
bool is_zero(const Element& a);

struct ElementClassification {
  bool is_projection = false;
  bool is_partial_isometry = false;
  bool in_F = false;
  std::set<long> degrees;
  std::optional<long> homogeneous_degree;
};

ElementClassification classify(const Element& a);

/// Degrees k whose gauge component is nonzero in the algebra.
std::set<long> gauge_degrees(const Element& a);

}  // namespace ckindex
