#pragma once

#include "foldcob/error.hpp"
#include "foldcob/int_matrix.hpp"

#include <string>
#include <vector>

namespace foldcob::algebra {

enum class Direction { Homological, Cohomological };
enum class Ring { Free, TwoTorsion };
enum class Parity { Odd, Even, None };
enum class Coefficients { Z, Z2 };

struct Generator {
  std::string name;
  Parity parity = Parity::None;
  Ring ring = Ring::Free;

  /// Name with its parity suffix, e.g. "I0o".
  std::string label() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Graded free/two-torsion module with integer differentials.
///
/// diffs[k] joins degrees k and k+1. Homological complexes store the boundary
/// C_{k+1} -> C_k (rows index degree k); cohomological ones store the
/// coboundary C^k -> C^{k+1} (rows index degree k+1).
struct MixedComplex {
  std::string id;
  Direction direction = Direction::Homological;
  std::vector<std::vector<Generator>> generators;
  std::vector<IntMatrix> diffs;

  std::size_t num_degrees() const noexcept { return generators.size(); }
  std::size_t size(std::size_t deg) const { return deg < generators.size() ? generators[deg].size() : 0; }

  /// Differential leaving degree `deg`, with rows indexing its target degree.
  IntMatrix outgoing(std::size_t deg) const;
  /// Differential arriving in degree `deg`, with rows indexing degree `deg`.
  IntMatrix incoming(std::size_t deg) const;
  /// Degree hit by the outgoing differential; -1 when it leaves the range.
  long outgoing_target(std::size_t deg) const;

  /// Index of the generator labelled e.g. "II01e"; throws if absent.
  std::size_t index_of(std::size_t deg, const std::string& label) const;
  /// Integer vector in degree `deg` from {label, coefficient} pairs.
  IntVector vector(std::size_t deg, std::initializer_list<std::pair<const char*, long>> terms) const;
};

bool same_complex(const MixedComplex& a, const MixedComplex& b);

ViolationList validate_complex(const MixedComplex& cx);

/// Two-torsion relation vectors 2e_i for a degree, as matrix columns.
IntMatrix torsion_relations(const MixedComplex& cx, std::size_t deg);

/// True when v is zero in the group of degree `deg` (exactly on free, mod 2 on two-torsion generators).
bool vanishes_in_group(const MixedComplex& cx, std::size_t deg, std::span<const Integer> v);

/// Hom(cx, Z) or Hom(cx, Z2) as a cohomological complex.
MixedComplex hom_dual(const MixedComplex& cx, Coefficients g);

/// Generators tagged FREE only, keeping every differential entry between them.
MixedComplex free_part(const MixedComplex& cx);

/// Same complex with a block of generators removed by label.
MixedComplex drop_generators(const MixedComplex& cx, const std::vector<std::string>& labels);

/// Degree-wise maps; maps[k] has rows indexing target degree k and columns source degree k.
struct ChainMap {
  MixedComplex source;
  MixedComplex target;
  std::vector<IntMatrix> maps;
};

ViolationList validate_chain_map(const ChainMap& f);

/// Generator-for-generator identity on shared labels; unmatched source generators map to zero.
ChainMap identity_on_labels(const MixedComplex& source, const MixedComplex& target);

std::string to_string(Direction d);
std::string to_string(Ring r);
std::string to_string(Parity p);
std::string to_string(Coefficients g);

}  // namespace foldcob::algebra
