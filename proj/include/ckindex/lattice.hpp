#pragma once

#include <ckindex/integer_matrix.hpp>

#include <vector>

namespace ckindex {

/// Row Hermite normal form of the lattice spanned by `generators`: echelon
/// rows with positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> generators,
                                           std::size_t dimension);

/// Sublattice of Z^n with a membership test.
class Lattice {
 public:
  explicit Lattice(std::size_t dimension) : dimension_(dimension) {}
  Lattice(std::vector<IntVector> generators, std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  bool contains(const IntVector& x) const;
  bool is_full() const;

 private:
  std::size_t dimension_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ckindex
