#pragma once

#include "foldcob/int_matrix.hpp"

#include <optional>

namespace foldcob::algebra {

/// Smith normal form u * m * v = s, with the inverses of u and v kept alongside.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix s;
  IntMatrix v;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... (length == rank).
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x : m x = 0} as matrix columns.
IntMatrix kernel_basis(const IntMatrix& m);

/// Row-style Hermite normal form; zero rows are dropped.
IntMatrix row_hermite_form(const IntMatrix& m);

/// Solves m * y = b over the integers, reusing one factorization for many right-hand sides.
class LatticeSolver {
public:
  explicit LatticeSolver(const IntMatrix& m);

  std::optional<IntVector> solve(std::span<const Integer> b) const;
  const SmithForm& smith() const noexcept { return snf_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

private:
  std::size_t rows_;
  std::size_t cols_;
  SmithForm snf_;
};

}  // namespace foldcob::algebra
