#include <ckindex/cli.hpp>

#include <ckindex/errors.hpp>
#include <ckindex/expression.hpp>
#include <ckindex/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace ckindex {

namespace {

struct Options {
  std::string format = "json";
  std::size_t horizon = 4;
  std::string route = "all";
  long grade = 0;
  std::optional<std::size_t> level;
  std::string graph_path;
  std::vector<std::string> exprs;
};

GraphPtr load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return std::make_shared<const Graph>(parse_graph(text.str()));
}

std::vector<Element> parse_blocks(const GraphPtr& g, const std::string& text) {
  std::vector<Element> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    blocks.push_back(parse_expression(g, text.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return blocks;
}

const std::string& single_expr(const Options& o) {
  if (o.exprs.size() != 1) throw InvalidInput("expected exactly one expression");
  return o.exprs.front();
}

Json cmd_graph_validate(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  Json j = {{"graph", to_json(*g)}, {"properties", to_json(validate_graph(*g))}};
  j["vertex_matrix"] = to_json(vertex_matrix(*g));
  return j;
}

Json cmd_graph_ktheory(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const KTheoryReport kt = graph_k_theory(*g);
  const AFCore core(g);
  Json j = to_json(kt, *g);
  j["exactness"] = to_json(core, exactness_report(g, o.horizon));
  j["K0_F"] = to_json(core.describe());
  return j;
}

Json cmd_elem_eval(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const Element a = parse_expression(g, single_expr(o));
  const std::size_t level = o.level.value_or(a.level());
  return {{"input", a.to_string()},
          {"level", level},
          {"normal_form", normal_form(a, level).to_string()},
          {"classification", to_json(classify(a))}};
}

Json cmd_elem_check(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  if (o.exprs.size() == 1) {
    const Element a = parse_expression(g, o.exprs[0]);
    return {{"input", a.to_string()}, {"is_zero", is_zero(a)}};
  }
  if (o.exprs.size() != 2) throw InvalidInput("expected one or two expressions");
  const Element a = parse_expression(g, o.exprs[0]);
  const Element b = parse_expression(g, o.exprs[1]);
  return {{"left", a.to_string()}, {"right", b.to_string()}, {"equal", is_equal(a, b)}};
}

Json cmd_class_af(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const AFCore core(g);
  const Element q = parse_expression(g, single_expr(o));
  const K0FClass x = core.class_of_graded_projection({q, o.grade});
  return {{"projection", q.to_string()}, {"grade", o.grade}, {"class", to_json(core, x)},
          {"K0_F", to_json(core.describe())}};
}

Json cmd_pair(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const AFCore core(g);
  const AdmissibleIsometry v = AdmissibleIsometry::make(parse_blocks(g, single_expr(o)));
  Json full = to_json(core, pairing(core, v));
  if (o.route != "all") {
    for (const char* key : {"routes", "breakdown"}) {
      Json kept = Json::object();
      kept[o.route] = full[key][o.route];
      full[key] = kept;
    }
  }
  full["input"] = v.to_string();
  return full;
}

Json cmd_cone_ev(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const AFCore core(g);
  const auto blocks = parse_blocks(g, single_expr(o));
  const MembershipResult m = vfa_membership(blocks);
  Json j = {{"member", m.member}, {"diagnostics", m.diagnostics}};
  if (m.member) j["class"] = to_json(core, ConeClass(core, AdmissibleIsometry::make(blocks)));
  return j;
}

Json cmd_cone_equal(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  if (o.exprs.size() != 2) throw InvalidInput("expected two expressions");
  const AFCore core(g);
  const ConeClass a(core, AdmissibleIsometry::make(parse_blocks(g, o.exprs[0])));
  const ConeClass b(core, AdmissibleIsometry::make(parse_blocks(g, o.exprs[1])));
  return {{"left", to_json(core, a)},
          {"right", to_json(core, b)},
          {"result", to_string(cone_equal(core, a, b))},
          {"properties", to_json(validate_graph(*g))}};
}

Json cmd_cone_decompose(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const AFCore core(g);
  const Element w = parse_expression(g, single_expr(o));
  Json j = to_json(core, decompose_relations(core, w));
  j["input"] = w.to_string();
  return j;
}

Json cmd_cone_ktheory(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  return to_json(mapping_cone_k_groups(g));
}

Json cmd_crosscheck(const Options& o) {
  const GraphPtr g = load_graph(o.graph_path);
  const AFCore core(g);
  return to_json(core, pairing_crosscheck(g, o.horizon));
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Index pairings and K-theory of graph C*-algebras", "ckindex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--horizon", o.horizon, "Path length bound for generator enumerations");
  app.add_option("--route", o.route, "Pairing route (pair)")
      ->check(CLI::IsMember({"odd", "aps", "simplified", "all"}));
  app.add_option("--grade", o.grade, "Grading index k for class-af");
  app.add_option("--level", o.level, "Expansion level for elem-eval");

  using Handler = Json (*)(const Options&);
  const std::vector<std::tuple<const char*, const char*, int, Handler>> commands = {
      {"graph-validate", "Parse a graph and report its properties", 0, cmd_graph_validate},
      {"graph-ktheory", "K0 and K1 of the graph algebra with exactness checks", 0, cmd_graph_ktheory},
      {"elem-eval", "Normal form and classification of an element", 1, cmd_elem_eval},
      {"elem-check", "Decide a = 0, or a = b", -1, cmd_elem_check},
      {"class-af", "Class of q Phi_k X in K0(F)", 1, cmd_class_af},
      {"pair", "Index pairing by the three routes", 1, cmd_pair},
      {"cone-ev", "Membership and ev_* of a mapping-cone representative", 1, cmd_cone_ev},
      {"cone-equal", "Compare two mapping-cone classes", 2, cmd_cone_equal},
      {"cone-decompose", "Rewrite a word into edge-level generators", 1, cmd_cone_decompose},
      {"cone-ktheory", "K-groups of the mapping cone", 0, cmd_cone_ktheory},
      {"crosscheck", "Three-route agreement on all generators up to the horizon", 0, cmd_crosscheck},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, nexpr, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph_path, "Graph file")->required();
    if (nexpr != 0) sub->add_option("expr", o.exprs, "Element expressions")->required();
    subs.emplace_back(sub, fn);
  }

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, render_report(error_object("usage_error", e.what()), Format::json)};
  }
  const Format format = o.format == "text" ? Format::text : Format::json;

  try {
    for (const auto& [sub, fn] : subs)
      if (sub->parsed()) {
        Json report = fn(o);
        report["command"] = sub->get_name();
        return {0, render_report(report, format)};
      }
    throw InternalError("no subcommand dispatched");
  } catch (const InternalError& e) {
    result = {1, render_report(error_object(e.kind(), e.what()), format)};
  } catch (const Error& e) {
    result = {2, render_report(error_object(e.kind(), e.what()), format)};
  } catch (const std::exception& e) {
    result = {1, render_report(error_object("internal_error", e.what()), format)};
  }
  return result;
}

}  // namespace ckindex
