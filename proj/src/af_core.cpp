#include <ckindex/af_core.hpp>

#include <ckindex/errors.hpp>
#include <ckindex/smith.hpp>

#include <algorithm>

namespace ckindex {

AFCore::AFCore(GraphPtr graph)
    : graph_(std::move(graph)),
      b_(vertex_matrix(*graph_).transpose()),
      kernel_(ckindex::stabilized_kernel(b_), b_.rows()) {}

K0FClass AFCore::unit_vector(VertexId v, std::size_t level) const {
  K0FClass x{level, IntVector(rank())};
  x.vec.at(v) = 1;
  return x;
}

K0FClass AFCore::unit_class() const {
  K0FClass x{0, IntVector(rank())};
  for (auto& c : x.vec) c = 1;
  return x;
}

K0FClass AFCore::push_to(const K0FClass& x, std::size_t to) const {
  if (to < x.level) throw InvalidInput("cannot pull a K0(F) class back to a lower level");
  if (x.vec.size() != rank()) throw GraphMismatch();
  K0FClass y = x;
  for (; y.level < to; ++y.level) y.vec = b_.apply(y.vec);
  return y;
}

bool AFCore::equal(const K0FClass& x, const K0FClass& y) const {
  const std::size_t n = std::max(x.level, y.level);
  return kernel_.contains(push_to(x, n).vec - push_to(y, n).vec);
}

K0FClass AFCore::combine(const std::vector<std::pair<Integer, K0FClass>>& terms) const {
  std::size_t n = 0;
  for (const auto& [c, x] : terms) n = std::max(n, x.level);
  K0FClass r{n, IntVector(rank())};
  for (const auto& [c, x] : terms) r.vec = r.vec + scaled(push_to(x, n).vec, c);
  return r;
}

void AFCore::require_hypotheses(const char* op) const {
  require_no_sinks_no_sources(*graph_, op);
}

IntVector AFCore::block_ranks(const Element& q, std::size_t level) const {
  const Element expanded = normal_form(q, level);
  std::vector<GaussianRational> trace(rank());
  for (const auto& [w, c] : expanded.terms()) {
    if (w.mu.length() != level || w.nu.length() != level)
      throw InternalError("term of degree " + std::to_string(w.degree()) +
                          " in a projection of F");
    if (w.mu == w.nu) trace[w.mu.range()] += c;
  }
  IntVector ranks(rank());
  for (std::size_t v = 0; v < rank(); ++v) {
    if (!trace[v].is_integer() || sgn(trace[v].re()) < 0)
      throw InternalError("block trace " + trace[v].to_string() + " at vertex '" +
                          graph_->vertex_name(static_cast<VertexId>(v)) +
                          "' is not a nonnegative integer");
    ranks[v] = trace[v].re().get_num();
  }
  return ranks;
}

K0FClass AFCore::class_of_projection(const Element& q) const {
  return class_of_graded_projection({q, 0});
}

K0FClass AFCore::class_of_graded_projection(const GradedProjection& gp) const {
  if (gp.q.graph_ptr() != graph_) throw GraphMismatch();
  require_hypotheses("class of a projection in F");
  const ElementClassification c = classify(gp.q);
  if (!c.in_F) throw InvalidInput("element is not in the fixed-point algebra F");
  if (!c.is_projection) throw InvalidInput("element is not a projection");
  return graded_class_unchecked(gp.q, gp.k);
}

// q Phi_k X: for a rank-one piece p_mu (|mu| = m), L_{S_mu^*} identifies
// p_mu Phi_k X with p_{r(mu)} Phi_{k-m} X, and for j = m - k >= 0 the
// partial isometry Phi_0 L_{S_l} Phi_{-j} (|l| = j, r(l) = r(mu)) identifies
// that with p_l F. Either way the class is e_{r(mu)} at level m - k.
K0FClass AFCore::graded_class_unchecked(const Element& q, long k) const {
  std::size_t m = q.level();
  m = std::max(m, static_cast<std::size_t>(std::max(k, 0L)));
  m = std::max(m, q.max_length());
  return K0FClass{static_cast<std::size_t>(static_cast<long>(m) - k), block_ranks(q, m)};
}

ColimitDescription AFCore::describe() const {
  ColimitDescription d{b_, "colim(Z^" + std::to_string(rank()) + ", B)", std::nullopt};
  if (rank() == 1) {
    const Integer& n = b_(0, 0);
    if (n == 1)
      d.closed_form = "Z";
    else if (n > 1)
      d.closed_form = "Z[1/" + n.get_str() + "]";
  } else if (rank() > 1) {
    const Integer det = determinant(b_);
    if (det == 1 || det == -1) d.closed_form = "Z^" + std::to_string(rank());
  }
  return d;
}

std::optional<Rational> AFCore::as_rational(const K0FClass& x) const {
  if (rank() != 1 || sgn(b_(0, 0)) <= 0) return std::nullopt;
  Integer den = 1;
  for (std::size_t i = 0; i < x.level; ++i) den *= b_(0, 0);
  Rational r(x.vec.at(0), den);
  r.canonicalize();
  return r;
}

bool k0f_equal(const AFCore& core, const K0FClass& x, const K0FClass& y) {
  return core.equal(x, y);
}

K0FClass k0f_combine(const AFCore& core, const std::vector<std::pair<Integer, K0FClass>>& terms) {
  return core.combine(terms);
}

ColimitDescription k0f_describe(const AFCore& core) { return core.describe(); }

}  // namespace ckindex
