#pragma once

#include <ckindex/integer_matrix.hpp>

#include <vector>

namespace ckindex {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

/// Pivot rule: smallest nonzero absolute value in the active block,
/// first in row-major order on ties. Output is a deterministic function of M.
SNFResult smith_normal_form(const IntMatrix& m);

/// Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ..., every d_i >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of a finite group; 0 when free_rank > 0.
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^rows / M Z^cols.
AbelianGroup abelian_group_from_cokernel(const IntMatrix& m);

/// Coordinates of x + im(M) in the decomposition read off the SNF:
/// residues mod each torsion factor, then the free coordinates.
struct CosetCoordinates {
  std::vector<Integer> torsion;
  std::vector<Integer> free;

  bool is_zero() const;
  friend bool operator==(const CosetCoordinates&, const CosetCoordinates&) = default;
};

class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& m);

  const AbelianGroup& group() const noexcept { return group_; }
  CosetCoordinates coordinates(const IntVector& x) const;

 private:
  SNFResult snf_;
  AbelianGroup group_;
  std::size_t rank_ = 0;
};

/// Basis of {x in Z^cols : M x = 0}, in Hermite normal form.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

/// Basis of the union of ker(B^j), which equals ker(B^k) for k = size of B.
/// ker(B^j) is pure (m x in ker implies x in ker) so the chain stops by k.
std::vector<IntVector> stabilized_kernel(const IntMatrix& b);

}  // namespace ckindex
