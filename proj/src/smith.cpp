#include <ckindex/smith.hpp>

#include <ckindex/lattice.hpp>

#include <algorithm>

namespace ckindex {

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) r += sgn(D(i, i)) != 0;
  return r;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SNFResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SNFResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = res.D;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest |entry| in the active block, first in row-major order.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pr == rows || cmpabs(d(i, j), d(pr, pc)) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) goto finished;  // active block is zero

      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && sgn(d(i, t)) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && sgn(d(t, j)) == 0;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
finished:
  return res;
}

Integer AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) add("Z/" + t.get_str());
  return s.empty() ? "0" : s;
}

AbelianGroup abelian_group_from_cokernel(const IntMatrix& m) {
  return Cokernel(m).group();
}

bool CosetCoordinates::is_zero() const {
  auto zero = [](const Integer& x) { return sgn(x) == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

Cokernel::Cokernel(const IntMatrix& m) : snf_(smith_normal_form(m)) {
  rank_ = snf_.rank();
  group_.free_rank = m.rows() - rank_;
  for (std::size_t i = 0; i < rank_; ++i)
    if (snf_.D(i, i) != 1) group_.torsion.push_back(snf_.D(i, i));
}

// U M V = D, so x + im(M) corresponds to U x + im(D).
CosetCoordinates Cokernel::coordinates(const IntVector& x) const {
  const IntVector y = snf_.U.apply(x);
  CosetCoordinates c;
  for (std::size_t i = 0; i < rank_; ++i) {
    const Integer& di = snf_.D(i, i);
    if (di == 1) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), di.get_mpz_t());
    c.torsion.push_back(r);
  }
  for (std::size_t i = rank_; i < y.size(); ++i) c.free.push_back(y[i]);
  return c;
}

// M x = 0 iff D (V^-1 x) = 0, so the kernel is spanned by the columns of V
// beyond the rank.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const SNFResult snf = smith_normal_form(m);
  std::vector<IntVector> gens;
  for (std::size_t c = snf.rank(); c < m.cols(); ++c) gens.push_back(snf.V.column(c));
  return hermite_normal_form(std::move(gens), m.cols());
}

std::vector<IntVector> stabilized_kernel(const IntMatrix& b) {
  return integer_kernel_basis(power(b, b.rows()));
}

}  // namespace ckindex
