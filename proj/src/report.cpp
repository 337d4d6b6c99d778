#include <ckindex/report.hpp>

#include <sstream>

namespace ckindex {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Json to_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(to_json(d));
  return {{"free_rank", g.free_rank}, {"torsion", t}};
}

Json to_json(const CosetCoordinates& c) {
  Json t = Json::array(), f = Json::array();
  for (const auto& x : c.torsion) t.push_back(to_json(x));
  for (const auto& x : c.free) f.push_back(to_json(x));
  return {{"torsion", t}, {"free", f}};
}

Json to_json(const GraphProperties& p) {
  return {{"no_sources", p.no_sources},
          {"no_sinks", p.no_sinks},
          {"weakly_connected", p.weakly_connected},
          {"locally_finite", p.locally_finite}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"id", e.name}, {"source", g.vertex_name(e.source)}, {"range", g.vertex_name(e.range)}});
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

Json to_json(const AFCore& core, const K0FClass& x) {
  Json vec = Json::object();
  for (std::size_t v = 0; v < x.vec.size(); ++v)
    vec[core.graph().vertex_name(static_cast<VertexId>(v))] = to_json(x.vec[v]);
  Json j = {{"level", x.level}, {"vector", vec}};
  if (auto r = core.as_rational(x)) j["closed_form"] = r->get_str();
  return j;
}

Json to_json(const Breakdown& b) {
  Json out = Json::array();
  for (const auto& item : b)
    out.push_back({{"sign", item.sign}, {"projection", item.gp.q.to_string()}, {"grade", item.gp.k}});
  return out;
}

Json to_json(const ElementClassification& c) {
  Json j = {{"is_projection", c.is_projection},
            {"is_partial_isometry", c.is_partial_isometry},
            {"in_F", c.in_F},
            {"degrees", c.degrees}};
  j["homogeneous_degree"] = c.homogeneous_degree ? Json(*c.homogeneous_degree) : Json(nullptr);
  return j;
}

Json to_json(const ColimitDescription& d) {
  Json j = {{"connecting_map", to_json(d.connecting_map)}, {"colimit", d.colimit}};
  j["closed_form"] = d.closed_form ? Json(*d.closed_form) : Json(nullptr);
  return j;
}

Json to_json(const KTheoryReport& r, const Graph& g) {
  Json basis = Json::array();
  for (const auto& v : r.k1_basis) {
    Json col = Json::array();
    for (const auto& x : v) col.push_back(to_json(x));
    basis.push_back(col);
  }
  Json images = Json::object();
  for (const auto& [vertex, c] : r.k0_generator_images) images[vertex] = to_json(c);
  (void)g;
  return {{"K0", to_json(r.k0)},
          {"K1", to_json(r.k1)},
          {"matrix", to_json(r.presentation_matrix)},
          {"K1_basis", basis},
          {"vertex_classes", images}};
}

Json to_json(const AFCore& core, const ExactnessReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.kernel_samples)
    samples.push_back({{"vertex", s.vertex},
                       {"level", s.level},
                       {"element", to_json(core, s.element)},
                       {"certified", s.certified}});
  return {{"horizon", r.horizon},
          {"generator_count", r.generator_count},
          {"composite_zero", r.composite_zero},
          {"composite_failures", r.composite_failures},
          {"j_star_surjective", r.j_star_surjective},
          {"kernel_samples", samples},
          {"not_certified", r.uncertified}};
}

Json to_json(const AFCore& core, const PairingReport& r) {
  return {{"orientation", PairingReport::orientation},
          {"agree", r.agree},
          {"routes",
           {{"odd", to_json(core, r.odd_route)},
            {"aps", to_json(core, r.aps_route)},
            {"simplified", to_json(core, r.simplified_route)}}},
          {"breakdown",
           {{"odd", to_json(r.odd_breakdown)},
            {"aps", to_json(r.aps_breakdown)},
            {"simplified", to_json(r.simplified_breakdown)}}}};
}

Json to_json(const AFCore& core, const CrosscheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j = {{"generator", e.generator},
              {"kind", e.kind},
              {"agree", e.report.agree},
              {"index", to_json(core, e.report.odd_route)}};
    if (e.matches_path_projection) j["index_equals_path_projection"] = *e.matches_path_projection;
    if (e.matches_closed_form) j["matches_closed_form"] = *e.matches_closed_form;
    if (!e.report.agree) j["routes"] = to_json(core, e.report)["routes"];
    entries.push_back(std::move(j));
  }
  return {{"horizon", r.horizon},
          {"generator_count", r.entries.size()},
          {"all_agree", r.all_agree},
          {"all_path_projection_checks", r.all_projection_checks},
          {"all_closed_forms", r.all_closed_forms},
          {"failures", r.failures},
          {"entries", entries}};
}

Json to_json(const AFCore& core, const ConeClass& c) {
  return {{"representative", c.representative().to_string()},
          {"source_class", to_json(core, c.source_class())},
          {"range_class", to_json(core, c.range_class())},
          {"ev", to_json(core, ev_star(core, c))},
          {"index", to_json(core, c.index_class())}};
}

Json to_json(const AFCore& core, const DecompositionReport& r) {
  (void)core;
  Json rel = Json::array();
  for (const auto& x : r.relations)
    rel.push_back({{"sign", x.sign}, {"generator", x.label}, {"expression", x.generator.to_string()}});
  return {{"relations", rel}, {"pairing_preserved", r.pairing_preserved}, {"ev_preserved", r.ev_preserved}};
}

Json to_json(const MappingConeGroups& r) {
  Json j = {{"K0_A", to_json(r.k0_of_A)},
            {"K1_A", to_json(r.k1_of_A)},
            {"K1_cone_zero", r.k1_cone_zero},
            {"K1_cone_certificate", r.k1_certificate},
            {"index_isomorphism", r.index_isomorphism},
            {"K0_F", to_json(r.k0_of_F)},
            {"ev_image", r.ev_image},
            {"description", r.description}};
  j["K0_cone_closed_form"] = r.k0_closed_form ? Json(*r.k0_closed_form) : Json(nullptr);
  j["ev_image_closed_form"] = r.ev_image_closed_form ? Json(*r.ev_image_closed_form) : Json(nullptr);
  return j;
}

Json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void write_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        os << pad << key << ": ";
        if (value.is_array()) {
          os << '[';
          bool first = true;
          for (const auto& x : value) {
            os << (first ? "" : ", ") << scalar_text(x);
            first = false;
          }
          os << "]\n";
        } else {
          os << scalar_text(value) << '\n';
        }
      } else {
        os << pad << key << ":\n";
        write_text(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_flat(x)) {
        os << pad << "- " << scalar_text(x) << '\n';
      } else {
        os << pad << "-\n";
        write_text(os, x, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_report(const Json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  std::ostringstream os;
  write_text(os, report, 0);
  return os.str();
}

}  // namespace ckindex
