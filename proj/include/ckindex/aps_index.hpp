#pragma once

#include <ckindex/af_core.hpp>
#include <ckindex/parallel.hpp>

#include <string>
#include <vector>

namespace ckindex {

/// Formal diagonal direct sum of partial isometries v with v^*v, vv^* in F
/// whose gauge components are mutually orthogonal
/// (v_d v_e^* = 0 = v_d^* v_e for d != e). For such v each component is a
/// homogeneous partial isometry and v_d^* D v_d = v_d^*v_d (D - d) commutes
/// with P and Phi_0.
class AdmissibleIsometry {
 public:
  /// Throws InvalidInput naming the failing block / component pair.
  static AdmissibleIsometry make(std::vector<Element> blocks);
  static AdmissibleIsometry single(Element v) { return make({std::move(v)}); }

  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  const GraphPtr& graph_ptr() const { return blocks_.front().graph_ptr(); }

  /// Nonzero homogeneous components of every block, with their degrees.
  const std::vector<std::pair<long, Element>>& components() const noexcept { return components_; }

  /// Blocks of this followed by blocks of other.
  AdmissibleIsometry direct_sum(const AdmissibleIsometry& other) const;
  AdmissibleIsometry adjoint() const;

  std::string to_string() const;

 private:
  std::vector<Element> blocks_;
  std::vector<std::pair<long, Element>> components_;
};

struct SignedGradedProjection {
  int sign = 1;
  GradedProjection gp;
};

using Breakdown = std::vector<SignedGradedProjection>;

/// Shift identity used throughout: Phi_k L_v = L_v Phi_{k-d} for v of
/// degree d, so v^* Phi_k v = v^*v Phi_{k-d}.

/// Index(P v^* P) = -Index(P v P) for homogeneous v of degree d:
///   d > 0: + (vv^*, Phi_j), j = 0..d-1
///   d = 0: nothing
///   d < 0: - (v^*v, Phi_j), j = 0..|d|-1
Breakdown homogeneous_pairing(const Element& v, long degree);

struct ApsKernelClasses {
  Breakdown kernel;           // v^*(P - Phi_0)v(1 - P)X
  Breakdown adjoint_kernels;  // v^*(1-P)vP X + v^*Phi_0 vP X + (1 - vv^*)Phi_0 X
  K0FClass ker_class;
  K0FClass adjoint_ker_class;
  K0FClass index_cylinder;  // Index(d/dt + D) = -[X_0]
  K0FClass total;           // ker - adjoint - index_cylinder
};

ApsKernelClasses aps_kernel_classes(const AFCore& core, const Element& v, long degree);

/// [v^*Pv(1-P)X] - [v^*(1-P)vPX].
Breakdown aps_simplified_breakdown(const Element& v, long degree);
K0FClass aps_simplified(const AFCore& core, const Element& v, long degree);

K0FClass evaluate(const AFCore& core, const Breakdown& b);

enum class Route { odd, aps, simplified };

struct PairingReport {
  K0FClass odd_route;
  K0FClass aps_route;
  K0FClass simplified_route;
  bool agree = false;
  Breakdown odd_breakdown;
  Breakdown aps_breakdown;
  Breakdown simplified_breakdown;

  static constexpr const char* orientation =
      "<[e_v]-[1],[(X^,D^)]> = Index(Pv*P) = -Index(PvP)";
};

/// Pairing of the mapping-cone class of v with the APS module, by all three
/// routes, summed over blocks and homogeneous components.
PairingReport pairing(const AFCore& core, const AdmissibleIsometry& v);

struct CrosscheckEntry {
  std::string generator;
  std::string kind;  // "edge", "shifted", "path"
  PairingReport report;
  /// For S_mu S_{sigma(mu)}^*: Index = [p_mu]; for the other kinds unset.
  std::optional<bool> matches_path_projection;
  /// Single-vertex graphs: (n^d - 1)/((n - 1) n^d) for S_mu.
  std::optional<bool> matches_closed_form;
};

struct CrosscheckReport {
  std::size_t horizon = 0;
  std::vector<CrosscheckEntry> entries;
  bool all_agree = false;
  bool all_projection_checks = false;
  bool all_closed_forms = false;
  std::vector<std::string> failures;
};

/// Runs pairing() on S_e P_alpha, S_mu S_{sigma(mu)}^*, S_mu up to the
/// horizon. Requires no sinks and no sources.
CrosscheckReport pairing_crosscheck(const GraphPtr& g, std::size_t horizon,
                                    Execution exec = Execution::parallel);

}  // namespace ckindex
