#include <ckindex/graph_ktheory.hpp>

#include <ckindex/errors.hpp>
#include <ckindex/generators.hpp>

namespace ckindex {

namespace {

IntMatrix one_minus_at(const Graph& g) {
  return IntMatrix::identity(g.vertex_count()) - vertex_matrix(g).transpose();
}

}  // namespace

KTheoryReport graph_k_theory(const Graph& g) {
  require_no_sinks_no_sources(g, "graph K-theory");
  KTheoryReport r;
  r.presentation_matrix = one_minus_at(g);
  const Cokernel coker(r.presentation_matrix);
  r.k0 = coker.group();
  r.k1_basis = integer_kernel_basis(r.presentation_matrix);
  r.k1.free_rank = r.k1_basis.size();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    IntVector e(g.vertex_count());
    e[v] = 1;
    r.k0_generator_images.emplace(g.vertex_name(v), coker.coordinates(e));
  }
  return r;
}

JStar::JStar(const AFCore& core)
    : core_(&core), presentation_(one_minus_at(core.graph())), cokernel_(presentation_) {}

JStarImage JStar::operator()(const K0FClass& x) const {
  if (x.vec.size() != core_->rank()) throw GraphMismatch();
  JStarImage img;
  img.inclusion = cokernel_.coordinates(x.vec);
  IntVector neg(x.vec.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -x.vec[i];
  img.sequence = cokernel_.coordinates(neg);
  return img;
}

bool JStar::surjective_on_vertex_generators() const {
  const std::size_t n = core_->rank();
  std::vector<IntVector> gens;
  for (std::size_t v = 0; v < n; ++v) {
    IntVector e(n);
    e[v] = 1;
    gens.push_back(e);  // j_*[p_v] = e_v + im(1 - A^T)
  }
  for (std::size_t c = 0; c < presentation_.cols(); ++c) gens.push_back(presentation_.column(c));
  return Lattice(std::move(gens), n).is_full();
}

JStarImage j_star(const AFCore& core, const K0FClass& x) { return JStar(core)(x); }

ExactnessReport exactness_report(const GraphPtr& g, std::size_t horizon, Execution exec) {
  require_no_sinks_no_sources(*g, "exactness report");
  const AFCore core(g);
  const JStar js(core);
  ExactnessReport rep;
  rep.horizon = horizon;

  const auto gens = edge_generators(g, horizon);
  rep.generator_count = gens.size();
  // ev_*[v] = [v^* v] - [v v^*]
  const auto ev = indexed_map<K0FClass>(
      gens.size(),
      [&](std::size_t i) {
        const Element& v = gens[i].element;
        const Element star = adjoint(v);
        return core.combine({{1, core.graded_class_unchecked(multiply(star, v), 0)},
                             {-1, core.graded_class_unchecked(multiply(v, star), 0)}});
      },
      exec);

  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!js(ev[i]).sequence.is_zero()) rep.composite_failures.push_back(gens[i].label);
  rep.composite_zero = rep.composite_failures.empty();
  rep.j_star_surjective = js.surjective_on_vertex_generators();

  std::size_t top = horizon + 1;
  for (const auto& x : ev) top = std::max(top, x.level);
  std::vector<IntVector> span = core.stabilized_kernel().basis();
  for (const auto& x : ev) span.push_back(core.push_to(x, top).vec);
  const Lattice image(std::move(span), core.rank());

  const IntMatrix& b = core.connecting_map();
  for (std::size_t level = 0; level <= horizon; ++level)
    for (VertexId v = 0; v < g->vertex_count(); ++v) {
      IntVector e(core.rank());
      e[v] = 1;
      KernelSample s{g->vertex_name(v), level, {level, e - b.apply(e)}, false};
      s.certified = js(s.element).inclusion.is_zero() && image.contains(core.push_to(s.element, top).vec);
      rep.uncertified += !s.certified;
      rep.kernel_samples.push_back(std::move(s));
    }
  return rep;
}

}  // namespace ckindex
