#include <ckindex/mapping_cone.hpp>

#include <ckindex/errors.hpp>

namespace ckindex {

namespace {

bool in_F(const Element& a) {
  const auto d = gauge_degrees(a);
  return d.empty() || d == std::set<long>{0};
}

}  // namespace

MembershipResult vfa_membership(const std::vector<Element>& blocks) {
  MembershipResult r;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Element& v = blocks[b];
    const std::string where = "block " + std::to_string(b) + ": ";
    const Element star = adjoint(v);
    if (!is_equal(multiply(multiply(v, star), v), v)) r.diagnostics.push_back(where + "v v* v != v");
    if (!in_F(multiply(star, v))) r.diagnostics.push_back(where + "v* v is not in F");
    if (!in_F(multiply(v, star))) r.diagnostics.push_back(where + "v v* is not in F");
  }
  r.member = r.diagnostics.empty();
  return r;
}

ConeClass::ConeClass(const AFCore& core, AdmissibleIsometry rep) : rep_(std::move(rep)) {
  std::vector<std::pair<Integer, K0FClass>> src, rng;
  for (const Element& v : rep_.blocks()) {
    const Element star = adjoint(v);
    src.emplace_back(1, core.graded_class_unchecked(multiply(star, v), 0));
    rng.emplace_back(1, core.graded_class_unchecked(multiply(v, star), 0));
  }
  source_ = core.combine(src);
  range_ = core.combine(rng);
  pairing_ = pairing(core, rep_);
  index_ = pairing_.odd_route;
}

K0FClass ev_star(const AFCore& core, const ConeClass& c) {
  return core.combine({{1, c.source_class()}, {-1, c.range_class()}});
}

DecompositionReport decompose_relations(const AFCore& core, const Element& word) {
  const GraphPtr& g = word.graph_ptr();
  const Graph& graph = *g;
  if (word.terms().size() != 1 || !(word.terms().begin()->second == GaussianRational(1)))
    throw InvalidInput("expected a single word S_gamma S_delta^* with coefficient 1");
  const Word& w = word.terms().begin()->first;

  DecompositionReport rep;
  // [S_alpha P_mu], alpha = gamma minus the suffix mu.
  auto telescope = [&](const Path& alpha, const Path& mu, int sign) {
    const std::size_t n = alpha.length();
    for (std::size_t j = 0; j < n; ++j) {
      const Path edge = Path::of_edge(graph, alpha.edges()[j]);
      const Path tail = alpha.shifted(graph, j + 1).concat(mu);  // alpha_{j+1}..alpha_n mu
      Element gen = Element::word(g, edge.concat(tail), tail);
      std::string label = "S(" + edge.to_string(graph) + ")";
      if (tail.length() > 0) label += "*P(" + tail.to_string(graph) + ")";
      rep.relations.push_back({sign, std::move(gen), std::move(label)});
    }
  };
  const auto& gamma = w.mu;
  const auto& delta = w.nu;
  const std::size_t gl = gamma.length(), dl = delta.length();
  const bool suffix =
      dl <= gl && std::equal(delta.edges().begin(), delta.edges().end(), gamma.edges().begin() + (gl - dl));
  if (suffix) {
    const Path alpha = gamma.prefix(graph, gl - dl);
    telescope(alpha, delta, +1);
  } else {
    telescope(gamma, Path::vertex(gamma.range()), +1);
    telescope(delta, Path::vertex(delta.range()), -1);
  }

  const ConeClass whole(core, AdmissibleIsometry::single(word));
  std::vector<std::pair<Integer, K0FClass>> index_sum, ev_sum;
  for (const auto& rel : rep.relations) {
    const ConeClass part(core, AdmissibleIsometry::single(rel.generator));
    index_sum.emplace_back(rel.sign, part.index_class());
    ev_sum.emplace_back(rel.sign, ev_star(core, part));
  }
  rep.pairing_preserved = core.equal(core.combine(index_sum), whole.index_class());
  rep.ev_preserved = core.equal(core.combine(ev_sum), ev_star(core, whole));
  return rep;
}

const char* to_string(ConeEquality e) {
  switch (e) {
    case ConeEquality::equal: return "equal";
    case ConeEquality::unequal: return "unequal";
    case ConeEquality::unknown: return "unknown";
  }
  return "unknown";
}

ConeEquality cone_equal(const AFCore& core, const ConeClass& a, const ConeClass& b) {
  const GraphProperties p = validate_graph(core.graph());
  const bool same_index = core.equal(a.index_class(), b.index_class());
  if (p.no_sinks && p.no_sources && p.weakly_connected)
    return same_index ? ConeEquality::equal : ConeEquality::unequal;
  if (!same_index || !core.equal(ev_star(core, a), ev_star(core, b))) return ConeEquality::unequal;
  return ConeEquality::unknown;
}

MappingConeGroups mapping_cone_k_groups(const GraphPtr& g) {
  require_no_sinks_no_sources(*g, "mapping cone K-groups");
  const AFCore core(g);
  const KTheoryReport kt = graph_k_theory(*g);
  const JStar js(core);
  MappingConeGroups r;
  r.k1_of_A = kt.k1;
  r.k0_of_A = kt.k0;
  r.k1_cone_zero = js.surjective_on_vertex_generators();
  r.k1_certificate = r.k1_cone_zero
                         ? "j_* maps the vertex classes [p_v] onto generators of K0(A) = coker(1 - A^T); "
                           "exactness at K0(A) gives K1(M(F,A)) = 0"
                         : "j_* is not onto on vertex generators";
  r.index_isomorphism = validate_graph(*g).weakly_connected;
  r.k0_of_F = core.describe();
  r.ev_image = "ker(j_*) = (1 - B) K0(F)";
  if (core.rank() == 1) {
    const Integer& n = core.connecting_map()(0, 0);
    if (n > 1) {
      const Integer m = n - 1;
      r.ev_image_closed_form = (m == 1 ? std::string() : m.get_str()) + "Z[1/" + n.get_str() + "]";
    } else if (n == 1) {
      r.ev_image_closed_form = "0";
    }
  }
  if (r.index_isomorphism) {
    r.k0_closed_form = r.k0_of_F.closed_form;
    r.description = "K0(M(F,A)) ~= K0(F) = " + r.k0_of_F.closed_form.value_or(r.k0_of_F.colimit) +
                    " via the index map; extension of " + r.ev_image + " by K1(A) = " + kt.k1.to_string();
  } else {
    r.description = "K0(M(F,A)) is an extension of " + r.ev_image + " by K1(A) = " + kt.k1.to_string();
  }
  return r;
}

}  // namespace ckindex
