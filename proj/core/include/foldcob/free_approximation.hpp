#pragma once

#include "foldcob/homology.hpp"

namespace foldcob::algebra {

struct FreeApproximation {
  MixedComplex f;   // all generators free, plus the extra degree-2 generator "A"
  ChainMap lambda;  // f -> v, identity on names, A -> 0
};

/// The explicit free approximation of the V32 mixed complex. Any other input is rejected.
FreeApproximation free_approximation(const MixedComplex& v);

struct Hypercohomology {
  AbelianGroupPresentation group;  // H^deg(Hom(F, g))
  InducedMap comparison;           // H^deg(Hom(v, g)) -> group, induced by lambda
};

Hypercohomology hypercohomology(const MixedComplex& v, Coefficients g, std::size_t deg);

}  // namespace foldcob::algebra
