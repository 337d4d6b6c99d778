#include <ckindex/lattice.hpp>

#include <stdexcept>

namespace ckindex {

namespace {

void axpy(IntVector& dst, const IntVector& src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += factor * src[i];
}

}  // namespace

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows, std::size_t dimension) {
  for (const auto& r : rows)
    if (r.size() != dimension) throw std::invalid_argument("generator has wrong dimension");
  std::size_t top = 0;
  for (std::size_t col = 0; col < dimension && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (sgn(rows[i][col]) != 0 && (best == rows.size() || cmpabs(rows[i][col], rows[best][col]) < 0))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      Integer q;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        axpy(rows[i], rows[top], -q);
        clean = clean && sgn(rows[i][col]) == 0;
      }
      if (clean) break;
    }
    if (sgn(rows[top][col]) == 0) continue;
    if (sgn(rows[top][col]) < 0)
      for (auto& x : rows[top]) x = -x;
    Integer q;
    for (std::size_t i = 0; i < top; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
      axpy(rows[i], rows[top], -q);
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

Lattice::Lattice(std::vector<IntVector> generators, std::size_t dimension)
    : dimension_(dimension), basis_(hermite_normal_form(std::move(generators), dimension)) {
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (sgn(row[p]) == 0) ++p;
    pivots_.push_back(p);
  }
}

bool Lattice::contains(const IntVector& x) const {
  if (x.size() != dimension_) throw std::invalid_argument("vector has wrong dimension");
  IntVector r = x;
  std::size_t next = 0;
  for (std::size_t col = 0; col < dimension_; ++col) {
    if (next < basis_.size() && pivots_[next] == col) {
      const Integer& p = basis_[next][col];
      if (!mpz_divisible_p(r[col].get_mpz_t(), p.get_mpz_t())) return false;
      Integer q = r[col] / p;
      axpy(r, basis_[next], -q);
      ++next;
    } else if (sgn(r[col]) != 0) {
      return false;
    }
  }
  return true;
}

bool Lattice::is_full() const {
  if (basis_.size() != dimension_) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i][pivots_[i]] != 1) return false;
  return true;
}

}  // namespace ckindex
