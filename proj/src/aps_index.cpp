#include <ckindex/aps_index.hpp>

#include <ckindex/errors.hpp>

namespace ckindex {

namespace {

std::string degree_name(long d) { return "degree " + std::to_string(d); }

void append_window(Breakdown& out, int sign, const Element& q, long first, long last) {
  for (long j = first; j <= last; ++j) out.push_back({sign, {q, j}});
}

}  // namespace

AdmissibleIsometry AdmissibleIsometry::make(std::vector<Element> blocks) {
  if (blocks.empty()) throw InvalidInput("an admissible isometry needs at least one block");
  AdmissibleIsometry a;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Element& v = blocks[b];
    if (v.graph_ptr() != blocks.front().graph_ptr()) throw GraphMismatch();
    const std::string where = "block " + std::to_string(b) + " (" + v.to_string() + ")";
    const Element star = ckindex::adjoint(v);
    if (!is_equal(multiply(multiply(v, star), v), v))
      throw InvalidInput(where + ": v v* v != v, not a partial isometry");
    if (gauge_degrees(multiply(star, v)) != std::set<long>{} &&
        gauge_degrees(multiply(star, v)) != std::set<long>{0})
      throw InvalidInput(where + ": v* v is not in F");
    if (gauge_degrees(multiply(v, star)) != std::set<long>{} &&
        gauge_degrees(multiply(v, star)) != std::set<long>{0})
      throw InvalidInput(where + ": v v* is not in F");

    std::vector<std::pair<long, Element>> comps;
    for (long d : v.raw_degrees()) {
      Element c = gauge_component(v, d);
      if (!is_zero(c)) comps.emplace_back(d, std::move(c));
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (i == j) continue;
        const auto& [di, vi] = comps[i];
        const auto& [dj, vj] = comps[j];
        if (!is_zero(multiply(vi, ckindex::adjoint(vj))))
          throw InvalidInput(where + ": components of " + degree_name(di) + " and " +
                             degree_name(dj) + " have v_d v_e* != 0");
        if (!is_zero(multiply(ckindex::adjoint(vi), vj)))
          throw InvalidInput(where + ": components of " + degree_name(di) + " and " +
                             degree_name(dj) + " have v_d* v_e != 0");
      }
    for (auto& c : comps) a.components_.push_back(std::move(c));
  }
  a.blocks_ = std::move(blocks);
  return a;
}

AdmissibleIsometry AdmissibleIsometry::direct_sum(const AdmissibleIsometry& other) const {
  if (graph_ptr() != other.graph_ptr()) throw GraphMismatch();
  AdmissibleIsometry s = *this;
  s.blocks_.insert(s.blocks_.end(), other.blocks_.begin(), other.blocks_.end());
  s.components_.insert(s.components_.end(), other.components_.begin(), other.components_.end());
  return s;
}

AdmissibleIsometry AdmissibleIsometry::adjoint() const {
  AdmissibleIsometry s;
  for (const auto& b : blocks_) s.blocks_.push_back(ckindex::adjoint(b));
  for (const auto& [d, c] : components_) s.components_.emplace_back(-d, ckindex::adjoint(c));
  return s;
}

std::string AdmissibleIsometry::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += "; ";
    s += b.to_string();
  }
  return s;
}

Breakdown homogeneous_pairing(const Element& v, long degree) {
  Breakdown out;
  const Element star = adjoint(v);
  if (degree > 0) append_window(out, +1, multiply(v, star), 0, degree - 1);
  if (degree < 0) append_window(out, -1, multiply(star, v), 0, -degree - 1);
  return out;
}

K0FClass evaluate(const AFCore& core, const Breakdown& b) {
  std::vector<std::pair<Integer, K0FClass>> terms;
  terms.reserve(b.size());
  for (const auto& s : b) terms.emplace_back(s.sign, core.graded_class_unchecked(s.gp.q, s.gp.k));
  return core.combine(terms);
}

ApsKernelClasses aps_kernel_classes(const AFCore& core, const Element& v, long d) {
  const Element star = adjoint(v);
  const Element source = multiply(star, v);
  const Element range = multiply(v, star);
  ApsKernelClasses r;
  // v^*(P - Phi_0)v = v^*v sum_{j >= 1-d} Phi_j, cut down by (1 - P).
  append_window(r.kernel, +1, source, 1 - d, -1);
  // v^*(1-P)vP: j < -d and j >= 0.
  append_window(r.adjoint_kernels, +1, source, 0, -d - 1);
  // v^*Phi_0 vP: the single index -d when it is >= 0.
  if (d <= 0) r.adjoint_kernels.push_back({+1, {source, -d}});
  // Trivial extended solutions (1 - vv^*) Phi_0 X.
  r.adjoint_kernels.push_back({+1, {Element::identity(v.graph_ptr()) - range, 0}});

  r.ker_class = evaluate(core, r.kernel);
  r.adjoint_ker_class = evaluate(core, r.adjoint_kernels);
  r.index_cylinder = core.combine({{-1, core.unit_class()}});
  r.total = core.combine({{1, r.ker_class}, {-1, r.adjoint_ker_class}, {-1, r.index_cylinder}});
  return r;
}

Breakdown aps_simplified_breakdown(const Element& v, long d) {
  Breakdown out;
  const Element source = multiply(adjoint(v), v);
  // v^*Pv(1-P) = v^*v sum_{-d <= j < 0} Phi_j
  append_window(out, +1, source, -d, -1);
  // v^*(1-P)vP = v^*v sum_{0 <= j < -d} Phi_j
  append_window(out, -1, source, 0, -d - 1);
  return out;
}

K0FClass aps_simplified(const AFCore& core, const Element& v, long degree) {
  return evaluate(core, aps_simplified_breakdown(v, degree));
}

PairingReport pairing(const AFCore& core, const AdmissibleIsometry& v) {
  if (v.graph_ptr() != core.graph_ptr()) throw GraphMismatch();
  require_no_sinks_no_sources(core.graph(), "index pairing");
  PairingReport r;
  std::vector<std::pair<Integer, K0FClass>> aps_terms;
  for (const auto& [d, c] : v.components()) {
    for (auto& s : homogeneous_pairing(c, d)) r.odd_breakdown.push_back(std::move(s));
    for (auto& s : aps_simplified_breakdown(c, d)) r.simplified_breakdown.push_back(std::move(s));
    ApsKernelClasses k = aps_kernel_classes(core, c, d);
    for (auto& s : k.kernel) r.aps_breakdown.push_back(std::move(s));
    for (auto& s : k.adjoint_kernels) r.aps_breakdown.push_back({-s.sign, std::move(s.gp)});
    r.aps_breakdown.push_back({+1, {Element::identity(core.graph_ptr()), 0}});
    aps_terms.emplace_back(1, k.total);
  }
  r.odd_route = evaluate(core, r.odd_breakdown);
  r.simplified_route = evaluate(core, r.simplified_breakdown);
  r.aps_route = core.combine(aps_terms);
  r.agree = core.equal(r.odd_route, r.aps_route) && core.equal(r.odd_route, r.simplified_route);
  return r;
}

}  // namespace ckindex
