#pragma once

#include "foldcob/int_matrix.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace foldcob::testing {

/// Rank over the rationals by plain Gaussian elimination on mpq values.
inline std::size_t rational_rank(const algebra::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mpq_class(m(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
inline std::vector<mpz_class> determinantal_invariant_factors(const algebra::IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
      if (rows.size() == k) {
        pick_cols(0);
        return;
      }
      for (std::size_t i = start; i < m.rows(); ++i) {
        rows.push_back(i);
        pick_rows(i + 1);
        rows.pop_back();
      }
    };
    pick_cols = [&](std::size_t start) {
      if (cols.size() == k) {
        mpz_class det = algebra::determinant(m.select(rows, cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        return;
      }
      for (std::size_t j = start; j < m.cols(); ++j) {
        cols.push_back(j);
        pick_cols(j + 1);
        cols.pop_back();
      }
    };
    pick_rows(0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

}  // namespace foldcob::testing
