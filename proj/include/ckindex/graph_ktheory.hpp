#pragma once

#include <ckindex/af_core.hpp>
#include <ckindex/parallel.hpp>
#include <ckindex/smith.hpp>

#include <map>
#include <string>
#include <vector>

namespace ckindex {

struct KTheoryReport {
  AbelianGroup k0;
  AbelianGroup k1;
  IntMatrix presentation_matrix;  // 1 - A^T
  std::vector<IntVector> k1_basis;
  std::map<std::string, CosetCoordinates> k0_generator_images;  // vertex -> [p_v]
};

/// K0(C*(E)) = coker(1 - A^T), K1(C*(E)) = ker(1 - A^T). Requires no sinks
/// and no sources.
KTheoryReport graph_k_theory(const Graph& g);

/// Image of a K0(F) class in K0(A).
struct JStarImage {
  CosetCoordinates inclusion;  // induced by F -> A
  CosetCoordinates sequence;   // the six-term map: minus the inclusion
};

/// j_*[vec, m] = vec + im(1 - A^T); independent of the representative since
/// (B - 1) vec dies in the cokernel.
class JStar {
 public:
  explicit JStar(const AFCore& core);

  const AbelianGroup& target() const { return cokernel_.group(); }
  JStarImage operator()(const K0FClass& x) const;
  /// Vertex images together with im(1 - A^T) span Z^{E0}.
  bool surjective_on_vertex_generators() const;

 private:
  const AFCore* core_;
  IntMatrix presentation_;
  Cokernel cokernel_;
};

JStarImage j_star(const AFCore& core, const K0FClass& x);

struct KernelSample {
  std::string vertex;
  std::size_t level = 0;
  K0FClass element;  // [(1 - B) e_v, level]
  bool certified = false;
};

struct ExactnessReport {
  std::size_t horizon = 0;
  std::size_t generator_count = 0;
  std::vector<std::string> composite_failures;  // generators with j_* ev_* != 0
  bool composite_zero = false;
  bool j_star_surjective = false;
  std::vector<KernelSample> kernel_samples;
  std::size_t uncertified = 0;
};

/// Checks the six-term sequence on the cone generators [S_e P_alpha],
/// |alpha| <= horizon: j_* ev_* = 0, j_* onto, and kernel elements
/// (1 - B) e_v at levels 0..horizon lie in the span of ev_* images.
ExactnessReport exactness_report(const GraphPtr& g, std::size_t horizon,
                                 Execution exec = Execution::parallel);

}  // namespace ckindex
