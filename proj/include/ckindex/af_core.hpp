#pragma once

#include <ckindex/ck_algebra.hpp>
#include <ckindex/integer_matrix.hpp>
#include <ckindex/lattice.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ckindex {

/// Representative [vec, level] of a class in K0(F) = colim(Z^{E0}, B), B = A^T.
/// [vec, m] and [B vec, m + 1] denote the same class.
struct K0FClass {
  std::size_t level = 0;
  IntVector vec;

  friend bool operator==(const K0FClass&, const K0FClass&) = default;
};

/// The right F-module q * Phi_k * X for a projection q in F.
struct GradedProjection {
  Element q;
  long k = 0;
};

/// Closed-form reading of the direct limit, when one is recognised.
struct ColimitDescription {
  IntMatrix connecting_map;  // B = A^T
  std::string colimit;       // "colim(Z^{E0}, B)"
  std::optional<std::string> closed_form;
};

/// K0 of the AF core F = C*(E)^gamma. Holds B = A^T and the stabilized
/// kernel that decides equality in the direct limit.
class AFCore {
 public:
  explicit AFCore(GraphPtr graph);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const IntMatrix& connecting_map() const noexcept { return b_; }
  std::size_t rank() const noexcept { return b_.rows(); }

  K0FClass zero() const { return {0, IntVector(rank())}; }
  K0FClass unit_vector(VertexId v, std::size_t level) const;
  /// [1] = sum_v [p_v] at level 0.
  K0FClass unit_class() const;

  /// Representative of the same class at level `to` >= x.level.
  K0FClass push_to(const K0FClass& x, std::size_t to) const;

  /// Equal in the direct limit: aligned difference lies in ker(B^k).
  bool equal(const K0FClass& x, const K0FClass& y) const;
  bool is_zero(const K0FClass& x) const { return equal(x, zero()); }

  /// Integer combination, represented at the largest input level.
  K0FClass combine(const std::vector<std::pair<Integer, K0FClass>>& terms) const;

  /// Class of a projection q in F: expand to the level of q and read off the
  /// trace of each per-vertex block (its rank).
  K0FClass class_of_projection(const Element& q) const;

  /// Class of q Phi_k X: expand q at m = max(k, 0, level), take block ranks,
  /// place them at level m - k.
  K0FClass class_of_graded_projection(const GradedProjection& gp) const;

  /// Same as class_of_graded_projection without re-checking that q is a
  /// projection in F (callers that have already established it).
  K0FClass graded_class_unchecked(const Element& q, long k) const;

  ColimitDescription describe() const;

  /// Exact value in Z[1/n] for single-vertex graphs, as "p/q".
  std::optional<Rational> as_rational(const K0FClass& x) const;

  const Lattice& stabilized_kernel() const noexcept { return kernel_; }

 private:
  IntVector block_ranks(const Element& q, std::size_t level) const;
  void require_hypotheses(const char* op) const;

  GraphPtr graph_;
  IntMatrix b_;
  Lattice kernel_;
};

/// Free-function forms of the AFCore operations.
bool k0f_equal(const AFCore& core, const K0FClass& x, const K0FClass& y);
K0FClass k0f_combine(const AFCore& core, const std::vector<std::pair<Integer, K0FClass>>& terms);
ColimitDescription k0f_describe(const AFCore& core);

}  // namespace ckindex
