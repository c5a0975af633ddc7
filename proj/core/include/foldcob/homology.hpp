#pragma once

#include "foldcob/complex.hpp"
#include "foldcob/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace foldcob::algebra {

/// Z^free_rank + Z/d_1 + ... + Z/d_m with d_1 | d_2 | ... and representative cycles.
/// basis_cycles lists the free generators first, then the torsion ones.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<IntVector> basis_cycles;

  std::size_t num_generators() const noexcept { return free_rank + torsion.size(); }
  bool same_type(const AbelianGroupPresentation& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
  /// "Z^2 + Z/2", "0" for the trivial group.
  std::string to_string() const;
};

/// H_deg (or H^deg) of a mixed complex together with the data needed to express classes.
class Homology {
public:
  Homology(const MixedComplex& cx, std::size_t deg);

  const AbelianGroupPresentation& group() const noexcept { return group_; }
  bool is_cycle(std::span<const Integer> v) const;
  /// Coordinates of the class of `cycle`; torsion coordinates reduced into [0, d).
  IntVector express(std::span<const Integer> cycle) const;

private:
  MixedComplex cx_;
  std::size_t deg_;
  IntMatrix cycles_;                          // lattice basis of cycles, one per column
  std::optional<LatticeSolver> cycle_solver_;
  IntMatrix u2_;                              // change of basis on cycle coordinates
  std::vector<std::size_t> free_rows_;
  std::vector<std::size_t> torsion_rows_;
  AbelianGroupPresentation group_;
};

AbelianGroupPresentation homology(const MixedComplex& cx, std::size_t deg);
IntVector express_class(const MixedComplex& cx, std::size_t deg, std::span<const Integer> cycle);

/// All generators become two-torsion and differentials are reduced mod 2 (cx tensored with Z2).
MixedComplex reduce_mod2(const MixedComplex& cx);

enum class Side { Homology, Cohomology };

struct GroupMapReport {
  bool injective = false;
  bool surjective = false;
  bool isomorphism = false;
  AbelianGroupPresentation image;  // free_rank/torsion only
};

/// Properties of a homomorphism between presented groups, given on their bases.
GroupMapReport analyze_group_map(const IntMatrix& m, const AbelianGroupPresentation& domain,
                                 const AbelianGroupPresentation& codomain);

struct InducedMap {
  IntMatrix matrix;  // columns: domain basis, rows: codomain basis
  AbelianGroupPresentation domain;
  AbelianGroupPresentation codomain;
  GroupMapReport report;
};

/// Map induced by f in degree `deg`. On the cohomology side the source is H^deg(Hom(f.target, g))
/// and the target H^deg(Hom(f.source, g)).
InducedMap induced_map(const ChainMap& f, std::size_t deg, Side side, Coefficients g);

/// Chain-level surjectivity: every target group in every degree is hit.
bool is_surjective_on_generators(const ChainMap& f);

}  // namespace foldcob::algebra
