#pragma once

#include "foldcob/catalog.hpp"

#include <string>
#include <vector>

namespace foldcob::fibers {

/// sum_X f[X] * |X(f)| + sum_Y F[Y] * |Y(F)| = 0, with X over codimension-1 and Y over
/// codimension-2 generators of the catalog. |.| is the algebraic count.
struct CountingIdentity {
  algebra::IntVector f;
  algebra::IntVector F;
};

struct CountingIdentities {
  CatalogId id;
  std::vector<algebra::Generator> codim1;
  std::vector<algebra::Generator> codim2;
  /// One identity per codimension-1 class X, coefficient of |X(f)| equal to 1.
  std::vector<CountingIdentity> per_class;
  /// Identities among the |X(f)| alone (F-part zero), in Hermite normal form.
  /// For CO32 these are taken over the cusped catalog CUSP32, where the cusp counts may be nonzero.
  std::vector<CountingIdentity> eliminated;

  /// "|I0o(f)| = -|II01o(F)| + |II01e(F)| - |IIae(F)|"; eliminated forms render as "... = 0".
  std::string render(const CountingIdentity& identity) const;
};

CountingIdentities counting_identities(CatalogId id);

struct CuspCocycleReport {
  algebra::IntVector c1;           // Iao - Iae + I1o - I1e
  algebra::IntVector c2;           // -I0o + I0e
  algebra::IntVector delta_c1;
  algebra::IntVector delta_c2;
  algebra::IntVector cusp_sum;     // IIao + IIae + IIgo + IIge
  bool delta_c2_is_cusp_sum = false;
  bool delta_c1_is_negative = false;
  bool sum_is_cocycle = false;
  bool ok() const { return delta_c2_is_cusp_sum && delta_c1_is_negative && sum_is_cocycle; }
};

CuspCocycleReport cusp_cocycle_check();

/// delta_1 applied to a degree-1 cochain of BCUSP32.
algebra::IntVector bcusp_delta1(std::span<const algebra::Integer> cochain);

}  // namespace foldcob::fibers
