#include <catch_amalgamated.hpp>

#include <ckindex/af_core.hpp>
#include <ckindex/errors.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace ckindex;
using namespace ckindex::testing;

namespace {

K0FClass cls(std::size_t level, IntVector v) { return {level, std::move(v)}; }

Element pmu(const GraphPtr& g, const Path& mu) { return Element::path_projection(g, mu); }

GraphPtr graph_from_matrix(const IntMatrix& a) {
  std::string text;
  for (std::size_t v = 0; v < a.rows(); ++v) text += "vertex v" + std::to_string(v) + "\n";
  int edge = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (long k = 0; k < a(r, c).get_si(); ++k)
        text += "edge e" + std::to_string(edge++) + " v" + std::to_string(r) + " v" + std::to_string(c) + "\n";
  return make_graph(text);
}

}  // namespace

TEST_CASE("classes of path projections") {
  for (int n = 2; n <= 4; ++n) {
    const GraphPtr g = cuntz_graph(n);
    const AFCore core(g);
    for (std::size_t m = 0; m <= 3; ++m)
      for (const Path& mu : enumerate_paths(*g, m)) {
        const K0FClass x = core.class_of_projection(pmu(g, mu));
        CHECK(core.equal(x, cls(m, {1})));
        Integer den = 1;
        for (std::size_t i = 0; i < m; ++i) den *= n;
        CHECK(*core.as_rational(x) == Rational(Integer(1), den));
      }
    CHECK(core.class_of_projection(Element::vertex_projection(g, 0)) == cls(0, {1}));
    const K0FClass one = core.class_of_projection(Element::identity(g));
    Integer nm = 1;
    for (std::size_t m = 0; m <= 4; ++m, nm *= n) {
      CHECK(core.equal(one, cls(m, {nm})));
      if (m > 0) {
        CHECK_FALSE(core.equal(one, cls(m, {1})));
      }
    }
  }
}

TEST_CASE("graded classes") {
  const GraphPtr g = cuntz_graph(3);
  const AFCore core(g);
  for (std::size_t len = 1; len <= 4; ++len)
    for (const Path& mu : enumerate_paths(*g, len))
      for (long j = 0; j < static_cast<long>(len); ++j) {
        const K0FClass x = core.class_of_graded_projection({pmu(g, mu), j});
        CHECK(core.equal(x, cls(len - static_cast<std::size_t>(j), {1})));
      }
  const Element pv = Element::vertex_projection(g, 0);
  CHECK(core.class_of_graded_projection({pv, 0}) == core.class_of_projection(pv));
  const K0FClass neg = core.class_of_graded_projection({pv, -1});
  CHECK(core.equal(neg, cls(1, {1})));
  CHECK(*core.as_rational(neg) == Rational(1, 3));
}

TEST_CASE("shifted path projections") {
  for (const auto& [name, g] : corpus()) {
    const AFCore core(g);
    for (std::size_t len = 0; len <= 3; ++len)
      for (const Path& mu : enumerate_paths(*g, len))
        for (std::size_t j = 0; j <= len; ++j)
          CHECK(core.equal(core.class_of_graded_projection({pmu(g, mu), static_cast<long>(j)}),
                           core.class_of_projection(pmu(g, mu.shifted(*g, j)))));
  }
}

TEST_CASE("classes are independent of the expansion level") {
  Rng rng(7);
  for (const auto& [name, g] : corpus()) {
    const AFCore core(g);
    for (int i = 0; i < 30; ++i) {
      const Path mu = random_path(*g, 3, rng);
      const Element q = pmu(g, mu);
      for (long k = -2; k <= 2; ++k) {
        const K0FClass base = core.class_of_graded_projection({q, k});
        for (std::size_t extra = 1; extra <= 2; ++extra) {
          const Element deeper = normal_form(q, mu.length() + extra);
          CHECK(core.equal(core.class_of_graded_projection({deeper, k}), base));
        }
      }
    }
  }
}

TEST_CASE("additivity on orthogonal projections") {
  for (const auto& [name, g] : corpus()) {
    const AFCore core(g);
    const auto paths = enumerate_paths(*g, 2);
    for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
      const Element q1 = pmu(g, paths[i]);
      const Element q2 = pmu(g, paths[i + 1]);
      CHECK(core.equal(core.class_of_projection(q1 + q2),
                       core.combine({{1, core.class_of_projection(q1)}, {1, core.class_of_projection(q2)}})));
    }
  }
}

TEST_CASE("Murray-von Neumann invariance and integer traces") {
  Rng rng(8);
  for (const auto& [name, g] : corpus()) {
    const AFCore core(g);
    for (std::size_t len = 0; len <= 3; ++len) {
      const auto paths = enumerate_paths(*g, len);
      for (const Path& mu : paths)
        for (const Path& nu : paths) {
          if (mu.range() != nu.range()) continue;
          const Element w = Element::word(g, mu, nu);
          const K0FClass a = core.class_of_projection(multiply(w, adjoint(w)));
          const K0FClass b = core.class_of_projection(multiply(adjoint(w), w));
          CHECK(core.equal(a, b));
          for (const auto& x : a.vec) CHECK(x >= 0);
          if (mu != nu) {
            // Rank-one projection 1/2 (p_mu + p_nu + w + w^*).
            const Element q = GaussianRational(Rational(1, 2)) *
                              (pmu(g, mu) + pmu(g, nu) + w + adjoint(w));
            REQUIRE(classify(q).is_projection);
            CHECK(core.equal(core.class_of_projection(q), core.class_of_projection(pmu(g, mu))));
          }
        }
    }
  }
}

TEST_CASE("non-integer block traces abort") {
  const GraphPtr g = cuntz_graph(2);
  const AFCore core(g);
  const Element half = GaussianRational(Rational(1, 2)) * Element::vertex_projection(g, 0);
  CHECK_THROWS_AS(core.graded_class_unchecked(half, 0), InternalError);
  CHECK_THROWS_AS(core.class_of_projection(half), InvalidInput);
  CHECK_THROWS_AS(core.class_of_projection(Element::path(g, Path::of_edge(*g, 0))), InvalidInput);
  const GraphPtr sink = with_sink();
  CHECK_THROWS_AS(AFCore(sink).class_of_projection(Element::identity(sink)), HypothesisViolation);
}

TEST_CASE("equality in the direct limit") {
  const AFCore tv(two_vertex());
  const IntMatrix b = tv.connecting_map();
  CHECK(tv.equal(cls(2, {1, 0}), cls(3, b.apply({1, 0}))));
  const AFCore o3(cuntz_graph(3));
  CHECK(o3.equal(cls(0, {1}), cls(1, {3})));
  CHECK_FALSE(o3.equal(cls(0, {1}), cls(1, {1})));
  const AFCore nil(make_graph("vertex a\nvertex b\nedge e a a\nedge f b a\n"));  // B = [[1,1],[0,0]]
  REQUIRE(nil.connecting_map() == IntMatrix{{1, 1}, {0, 0}});
  CHECK(nil.equal(cls(0, {1, -1}), cls(0, {0, 0})));
  CHECK_FALSE(nil.equal(cls(0, {1, 0}), cls(0, {0, 0})));
}

TEST_CASE("combinations") {
  const AFCore o3(cuntz_graph(3));
  const K0FClass x = cls(2, {5});
  CHECK(o3.is_zero(o3.combine({{1, x}, {-1, x}})));
  const AFCore o4(cuntz_graph(4));
  CHECK(o4.equal(o4.combine({{1, cls(1, {1})}, {1, cls(1, {1})}, {1, cls(1, {1})}, {1, cls(1, {1})}}),
                 cls(0, {1})));
  CHECK(o3.combine({{1, cls(1, {1})}, {1, cls(2, {1})}}) == cls(2, {4}));
  CHECK(k0f_combine(o3, {{1, cls(1, {1})}, {1, cls(2, {1})}}) == cls(2, {4}));
  CHECK(k0f_equal(o3, cls(2, {4}), cls(3, {12})));
}

TEST_CASE("equality matches bounded power search") {
  Rng rng(9);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_int_distribution<int> entry(-2, 2), lvl(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = dim(rng);
    IntMatrix a = random_matrix(k, k, 0, 2, rng);
    if (trial % 2 == 0)
      for (std::size_t r = 0; r < k; ++r) a(r, (r + 1) % k) = 0;
    const AFCore core(graph_from_matrix(a));
    const IntMatrix& b = core.connecting_map();
    for (int s = 0; s < 10; ++s) {
      K0FClass x{static_cast<std::size_t>(lvl(rng)), IntVector(k)}, y{static_cast<std::size_t>(lvl(rng)), IntVector(k)};
      for (auto& e : x.vec) e = entry(rng);
      if (s % 2 == 0) {
        y = x;
        y.level = x.level + 1;
        y.vec = b.apply(x.vec);
        y.vec[0] += entry(rng) % 2;
      } else {
        for (auto& e : y.vec) e = entry(rng);
      }
      const std::size_t top = std::max(x.level, y.level);
      IntVector u = power(b, top - x.level).apply(x.vec) - power(b, top - y.level).apply(y.vec);
      const bool brute = is_zero(u) || killed_by_power(b, u, 6);
      REQUIRE(core.equal(x, y) == brute);
    }
  }
}

TEST_CASE("colimit descriptions") {
  CHECK(AFCore(cuntz_graph(3)).describe().closed_form == "Z[1/3]");
  CHECK(AFCore(single_loop()).describe().closed_form == "Z");
  CHECK(AFCore(two_vertex()).describe().closed_form == "Z^2");
  CHECK(AFCore(golden_mean()).describe().closed_form == "Z^2");
  CHECK(AFCore(cycle_with_chords()).describe().closed_form == "Z^3");
  CHECK_FALSE(AFCore(make_graph("vertex a\nvertex b\nedge e a a\nedge f a b\nedge g b a\nedge h b b\n"))
                  .describe()
                  .closed_form.has_value());
  CHECK(k0f_describe(AFCore(cuntz_graph(2))).colimit == "colim(Z^1, B)");
}
