#include <ckindex/generators.hpp>

namespace ckindex {

std::vector<LabeledElement> edge_generators(const GraphPtr& g, std::size_t horizon) {
  std::vector<LabeledElement> out;
  for (std::size_t len = 0; len <= horizon; ++len)
    for (const Path& alpha : enumerate_paths(*g, len))
      for (EdgeId e : g->in_edges(alpha.source())) {
        const Path ea = Path::of_edge(*g, e).concat(alpha);
        std::string label = "S(" + g->edge(e).name + ")";
        if (len > 0) label += "*P(" + alpha.to_string(*g) + ")";
        out.push_back({std::move(label), Element::word(g, ea, alpha)});
      }
  return out;
}

std::vector<LabeledElement> shifted_path_generators(const GraphPtr& g, std::size_t horizon) {
  std::vector<LabeledElement> out;
  for (std::size_t len = 1; len <= horizon; ++len)
    for (const Path& mu : enumerate_paths(*g, len)) {
      const Path bar = mu.shifted(*g, 1);
      out.push_back({"S(" + mu.to_string(*g) + ")*adj(S(" + bar.to_string(*g) + "))",
                     Element::word(g, mu, bar)});
    }
  return out;
}

std::vector<LabeledElement> path_generators(const GraphPtr& g, std::size_t horizon) {
  std::vector<LabeledElement> out;
  for (std::size_t len = 1; len <= horizon; ++len)
    for (const Path& mu : enumerate_paths(*g, len))
      out.push_back({"S(" + mu.to_string(*g) + ")", Element::path(g, mu)});
  return out;
}

}  // namespace ckindex
