#include "foldcob/smith.hpp"

#include <algorithm>

namespace foldcob::algebra {
namespace {

struct Reducer {
  IntMatrix a, u, u_inv, v, v_inv;

  explicit Reducer(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  // row[target] += q * row[source]
  void row_add(std::size_t target, std::size_t source, const Integer& q) {
    a.add_row_multiple(target, source, q);
    u.add_row_multiple(target, source, q);
    u_inv.add_col_multiple(source, target, -q);
  }
  // col[target] += q * col[source]
  void col_add(std::size_t target, std::size_t source, const Integer& q) {
    a.add_col_multiple(target, source, q);
    v.add_col_multiple(target, source, q);
    v_inv.add_row_multiple(source, target, -q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t pi = t, pj = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) best = abs(a(i, t)), pi = i, pj = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) best = abs(a(t, j)), pi = t, pj = j;
        row_swap(t, pi);
        col_swap(t, pj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_add(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }
};

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(s(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  std::size_t t = 0;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!r.find_pivot(t, pi, pj)) break;
    r.row_swap(t, pi);
    r.col_swap(t, pj);
    r.reduce_at(t);
    if (r.a(t, t) < 0) r.row_negate(t);
  }
  return SmithForm{std::move(r.u), std::move(r.u_inv), std::move(r.a), std::move(r.v), std::move(r.v_inv), t};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  const std::size_t n = m.cols();
  IntMatrix k(n, n - f.rank);
  for (std::size_t j = f.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - f.rank) = f.v(i, j);
  return k;
}

IntMatrix row_hermite_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == a.rows()) break;
      a.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        a.add_row_multiple(i, r, -q);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      a.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  std::vector<std::size_t> rows(r), cols(a.cols());
  for (std::size_t i = 0; i < r; ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return a.select(rows, cols);
}

LatticeSolver::LatticeSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), snf_(smith_normal_form(m)) {}

std::optional<IntVector> LatticeSolver::solve(std::span<const Integer> b) const {
  if (b.size() != rows_) throw std::invalid_argument("LatticeSolver: right-hand side has wrong length");
  IntVector c = snf_.u * b;
  IntVector z(cols_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.s(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.v * std::span<const Integer>(z);
}

}  // namespace foldcob::algebra
