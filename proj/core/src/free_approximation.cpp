#include "foldcob/free_approximation.hpp"

#include "foldcob/catalog.hpp"

#include <stdexcept>

namespace foldcob::algebra {

FreeApproximation free_approximation(const MixedComplex& v) {
  if (!same_complex(v, fibers::catalog(fibers::CatalogId::V32)))
    throw std::invalid_argument("free_approximation is defined for the V32 complex only");

  MixedComplex f = v;
  f.id = "F32";
  for (auto& gens : f.generators)
    for (auto& g : gens) g.ring = Ring::Free;
  f.generators[2].push_back({"A", Parity::None, Ring::Free});

  // diffs[1] maps degree 2 to degree 1; append the column for A.
  IntMatrix a_col(f.size(1), 1);
  a_col(f.index_of(1, "I2o"), 0) = 2;
  f.diffs[1] = f.diffs[1].hcat(a_col);

  FreeApproximation out{f, identity_on_labels(f, v)};
  if (auto bad = validate_complex(out.f); !bad.empty())
    throw std::logic_error("free approximation is not a complex: " + bad.front().message);
  if (auto bad = validate_chain_map(out.lambda); !bad.empty())
    throw std::logic_error("lambda is not a chain map: " + bad.front().message);
  if (!is_surjective_on_generators(out.lambda)) throw std::logic_error("lambda is not surjective");
  for (std::size_t k : {0u, 1u})
    if (!induced_map(out.lambda, k, Side::Homology, Coefficients::Z).report.isomorphism)
      throw std::logic_error("lambda_* is not an isomorphism in degree " + std::to_string(k));
  return out;
}

Hypercohomology hypercohomology(const MixedComplex& v, Coefficients g, std::size_t deg) {
  if (deg > 2) throw std::out_of_range("hypercohomology is available in degrees 0, 1, 2");
  FreeApproximation fa = free_approximation(v);
  InducedMap cmp = induced_map(fa.lambda, deg, Side::Cohomology, g);
  return {cmp.codomain, cmp};
}

}  // namespace foldcob::algebra
