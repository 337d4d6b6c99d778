#include <catch_amalgamated.hpp>

#include <ckindex/ck_algebra.hpp>
#include <ckindex/errors.hpp>
#include <ckindex/expression.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace ckindex;
using namespace ckindex::testing;

namespace {

Element S(const GraphPtr& g, const std::string& path) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    names.push_back(path.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return Element::path(g, Path::from_names(*g, names));
}

Element p(const GraphPtr& g, const std::string& v) { return Element::vertex_projection(g, *g->find_vertex(v)); }

// Zero in the algebra but not as raw terms: x (p_v - sum_{s(e)=v} S_e S_e^*) y.
Element ck_relation(const GraphPtr& g, VertexId v) {
  Element r = Element::vertex_projection(g, v);
  for (EdgeId e : g->out_edges(v)) r -= Element::path_projection(g, Path::of_edge(*g, e));
  return r;
}

const std::vector<NamedGraph>& graphs() {
  static const auto all = corpus();
  return all;
}

}  // namespace

TEST_CASE("products of spanning words") {
  const GraphPtr g = cuntz_graph(2);  // loops e0, e1
  const Element a = S(g, "e0"), b = S(g, "e1");
  CHECK(is_equal(multiply(multiply(a, adjoint(a)), multiply(a, adjoint(b))), multiply(a, adjoint(b))));
  CHECK(multiply(adjoint(a), b).empty());
  // (S_a S_ab^*)(S_a S_b^*) = S_a S_bb^*
  const Element lhs = multiply(multiply(a, adjoint(S(g, "e0.e1"))), multiply(a, adjoint(b)));
  CHECK(lhs == multiply(a, adjoint(S(g, "e1.e1"))));
}

TEST_CASE("adjoint") {
  const GraphPtr g = cuntz_graph(2);
  const Element a = S(g, "e0");
  CHECK(adjoint(a).terms().begin()->first.mu.length() == 0);
  CHECK(adjoint(GaussianRational(0, 1) * p(g, "v")) == GaussianRational(0, -1) * p(g, "v"));
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Element x = random_element(g, 4, 3, rng);
    CHECK(adjoint(adjoint(x)) == x);
  }
}

TEST_CASE("linear combinations") {
  const GraphPtr g = cuntz_graph(3);
  const Element a = S(g, "e0.e2");
  CHECK(linear_combine({{1, a}, {-1, a}}).empty());
  CHECK(linear_combine({{Rational(1, 2), p(g, "v")}, {Rational(1, 2), p(g, "v")}}) == p(g, "v"));
  const Element rel = ck_relation(g, 0);
  CHECK_FALSE(rel.empty());
  CHECK(is_zero(rel));
}

TEST_CASE("gauge components and expectation") {
  const GraphPtr g = cuntz_graph(2);
  const Element se = S(g, "e0");
  const Element x = se + p(g, "v");
  CHECK(gauge_component(x, 0) == p(g, "v"));
  CHECK(gauge_component(x, 1) == se);
  const Element w = multiply(S(g, "e0.e1.e1"), adjoint(S(g, "e1")));
  CHECK(gauge_component(w, 2) == w);
  CHECK(expectation(se).empty());
  CHECK(expectation(p(g, "v")) == p(g, "v"));
  CHECK(grade_commutator(S(g, "e0.e1.e0")) == GaussianRational(3) * S(g, "e0.e1.e0"));
  CHECK(grade_commutator(p(g, "v") + multiply(se, adjoint(se))).empty());
}

TEST_CASE("expectation is an F-bimodule map") {
  Rng rng(2);
  for (const auto& [name, g] : graphs()) {
    for (int i = 0; i < 40; ++i) {
      const Element f = random_core_element(g, 3, 2, rng);
      const Element h = random_core_element(g, 3, 2, rng);
      const Element a = random_element(g, 4, 3, rng);
      CHECK(is_equal(expectation(f * a * h), f * expectation(a) * h));
      CHECK(expectation(expectation(a)) == expectation(a));
    }
  }
}

TEST_CASE("normal form examples") {
  const GraphPtr g = cuntz_graph(3);
  Element sum(g);
  for (EdgeId e = 0; e < 3; ++e) sum += Element::path_projection(g, Path::of_edge(*g, e));
  CHECK(normal_form(p(g, "v"), 1) == sum);

  const GraphPtr t = two_vertex();
  // S_c = sum over one-step tails l from r(c) = v2: only b.
  const Element sc = S(t, "c");
  CHECK(normal_form(sc, 1) == multiply(S(t, "c.b"), adjoint(S(t, "b"))));
  CHECK(acts_equal(normal_form(sc, 1), sc));
  CHECK(normal_form(normal_form(sc, 2), 2) == normal_form(sc, 2));
}

TEST_CASE("normal form across a sink") {
  const GraphPtr g = with_sink();
  const Element x = p(g, "w");
  CHECK_THROWS_AS(normal_form(x, 1), SinkObstruction);
  CHECK_NOTHROW(multiply(S(g, "b"), adjoint(S(g, "b"))));
}

TEST_CASE("equality decisions") {
  const GraphPtr o2 = cuntz_graph(2);
  CHECK(is_equal(p(o2, "v"), Element::path_projection(o2, Path::from_names(*o2, {"e0"})) +
                                  Element::path_projection(o2, Path::from_names(*o2, {"e1"}))));
  CHECK_FALSE(is_equal(S(o2, "e0"), S(o2, "e1")));
  CHECK(is_equal(Element::identity(o2), p(o2, "v")));
}

TEST_CASE("classification") {
  const GraphPtr g = cuntz_graph(2);
  const auto smu = classify(S(g, "e0.e1"));
  CHECK(smu.is_partial_isometry);
  CHECK_FALSE(smu.in_F);
  CHECK(smu.homogeneous_degree == 2);
  const auto pv = classify(p(g, "v"));
  CHECK(pv.is_projection);
  CHECK(pv.in_F);
  const auto mixed = classify(S(g, "e0") + adjoint(S(g, "e0")));
  CHECK(mixed.degrees == std::set<long>{-1, 1});
  CHECK_FALSE(mixed.is_partial_isometry);
  CHECK_FALSE(mixed.homogeneous_degree.has_value());
  // Raw degrees may cancel: S_e0 S_e0^* S_e0 - S_e0 has no nonzero component.
  CHECK(gauge_degrees(multiply(S(g, "e0"), multiply(adjoint(S(g, "e0")), S(g, "e0"))) - S(g, "e0")).empty());
}

TEST_CASE("S_mu is a partial isometry with source projection p_r(mu)") {
  for (const auto& [name, g] : graphs())
    for (std::size_t n = 0; n <= 3; ++n)
      for (const Path& mu : enumerate_paths(*g, n)) {
        const Element s = Element::path(g, mu);
        CHECK(classify(s).is_partial_isometry);
        CHECK(is_equal(multiply(adjoint(s), s), Element::vertex_projection(g, mu.range())));
      }
}

TEST_CASE("grade commutator of a homogeneous element") {
  Rng rng(3);
  for (const auto& [name, g] : graphs()) {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Path& mu : enumerate_paths(*g, n)) {
        const Path nu = random_path_ending_at(*g, mu.range(), 2, rng);
        const Element v = Element::word(g, mu, nu);
        const long d = static_cast<long>(mu.length()) - static_cast<long>(nu.length());
        const Element lhs = multiply(adjoint(v), grade_commutator(v));
        const Element svv = multiply(adjoint(v), v);
        CHECK(is_equal(lhs, GaussianRational(d) * svv));
        // Degree zero, so left multiplication commutes with every Phi_k.
        const Element x = random_element(g, 3, 2, rng);
        for (long k = -2; k <= 2; ++k)
          CHECK(is_equal(gauge_component(multiply(lhs, x), k), multiply(lhs, gauge_component(x, k))));
      }
  }
}

TEST_CASE("associativity on random triples") {
  Rng rng(101);
  for (int i = 0; i < 600; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 3, 3, rng);
    const Element b = random_element(g, 3, 3, rng);
    const Element c = random_element(g, 3, 3, rng);
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("involution on random pairs") {
  Rng rng(102);
  for (int i = 0; i < 600; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 3, 3, rng);
    const Element b = random_element(g, 3, 3, rng);
    REQUIRE(adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a)));
    REQUIRE(adjoint(adjoint(a)) == a);
  }
}

TEST_CASE("grading is multiplicative") {
  Rng rng(103);
  for (int i = 0; i < 600; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 3, 3, rng);
    const Element b = random_element(g, 3, 3, rng);
    const Element ab = multiply(a, b);
    for (long k = -6; k <= 6; ++k) {
      Element sum(g);
      for (long j = -3; j <= 3; ++j) sum += multiply(gauge_component(a, j), gauge_component(b, k - j));
      REQUIRE(gauge_component(ab, k) == sum);
    }
    Element total(g);
    for (long k = -6; k <= 6; ++k) total += gauge_component(ab, k);
    REQUIRE(total == ab);
  }
}

TEST_CASE("normal form is idempotent and value preserving") {
  Rng rng(104);
  for (int i = 0; i < 600; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 3, 3, rng);
    const std::size_t m = a.level() + static_cast<std::size_t>(i % 2);
    const Element n = normal_form(a, m);
    REQUIRE(normal_form(n, m) == n);
    for (const auto& [w, c] : n.terms()) REQUIRE(w.min_length() == m);
    REQUIRE(is_equal(n, a));
    REQUIRE(acts_equal(n, a));
  }
}

TEST_CASE("path action oracle agrees with is_equal") {
  Rng rng(105);
  std::size_t equal_pairs = 0;
  for (int i = 0; i < 600; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 3, 4, rng);
    Element b = a;
    switch (i % 3) {
      case 0: {  // add a disguised zero
        const Element x = random_element(g, 2, 2, rng, false);
        const VertexId v = static_cast<VertexId>(static_cast<std::size_t>(i) % g->vertex_count());
        b += multiply(x, ck_relation(g, v));
        break;
      }
      case 1:
        b = random_element(g, 3, 4, rng);
        break;
      default:  // tiny perturbation
        b += GaussianRational(Rational(1, 7)) * Element::path(g, random_path(*g, 4, rng));
        break;
    }
    const bool decided = is_equal(a, b);
    REQUIRE(decided == acts_equal(a, b));
    REQUIRE(is_zero(a - b) == acts_as_zero(a - b));
    if (decided) ++equal_pairs;
  }
  CHECK(equal_pairs >= 150);
}

TEST_CASE("graph mismatch") {
  const GraphPtr g = cuntz_graph(2), h = cuntz_graph(2);
  CHECK_THROWS_AS(multiply(Element::identity(g), Element::identity(h)), GraphMismatch);
  CHECK_THROWS_AS(linear_combine({{1, Element::identity(g)}, {1, Element::identity(h)}}), GraphMismatch);
}

TEST_CASE("expression parsing") {
  const GraphPtr g = cuntz_graph(2);
  const Element x = parse_expression(g, "S(e0)*adj(S(e1)) - 1/2 p(v) + (1/2-3i) S(e0)*S(e1)");
  Element expect = multiply(S(g, "e0"), adjoint(S(g, "e1")));
  expect -= GaussianRational(Rational(1, 2)) * p(g, "v");
  expect += GaussianRational(Rational(1, 2), -3) * S(g, "e0.e1");
  CHECK(x == expect);
  CHECK(parse_expression(g, x.to_string()) == x);
  CHECK(parse_expression(g, "2i*p(v)") == GaussianRational(0, 2) * p(g, "v"));
  CHECK(is_equal(parse_expression(g, "3"), GaussianRational(3) * Element::identity(g)));
  CHECK(parse_expression(g, "adj(S(e0) + S(e1))") == adjoint(S(g, "e0") + S(g, "e1")));
  CHECK_THROWS_AS(parse_expression(g, "S(e0"), ParseError);
  CHECK_THROWS_AS(parse_expression(g, "S(zz)"), GraphError);
  CHECK_THROWS_AS(parse_expression(g, "p(v) +"), ParseError);
  CHECK_THROWS_AS(parse_expression(g, "1/0"), ParseError);
}

TEST_CASE("expression round trip on random elements") {
  Rng rng(106);
  for (int i = 0; i < 200; ++i) {
    const GraphPtr& g = graphs()[static_cast<std::size_t>(i) % graphs().size()].graph;
    const Element a = random_element(g, 4, 3, rng);
    REQUIRE(parse_expression(g, a.to_string()) == a);
  }
}
