#pragma once

#include <ckindex/ck_algebra.hpp>

#include <string>
#include <vector>

namespace ckindex {

struct LabeledElement {
  std::string label;
  Element element;
};

/// S_e P_alpha = S_{e alpha} S_alpha^* for every edge e and path alpha with
/// s(alpha) = r(e), |alpha| <= horizon (|alpha| = 0 gives S_e).
std::vector<LabeledElement> edge_generators(const GraphPtr& g, std::size_t horizon);

/// S_mu S_{sigma(mu)}^* for 1 <= |mu| <= horizon.
std::vector<LabeledElement> shifted_path_generators(const GraphPtr& g, std::size_t horizon);

/// S_mu for 1 <= |mu| <= horizon.
std::vector<LabeledElement> path_generators(const GraphPtr& g, std::size_t horizon);

}  // namespace ckindex
