#pragma once

#include "foldcob/complex.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace foldcob::fibers {

enum class CatalogId {
  CO32,
  CO32_ORI,
  SCO32,
  SCO32_ORI,
  CO21,
  C32_Z2,
  C32_Z2_SIMPLE,
  C21_Z2,
  V32,
  F32,
  CUSP32,
  BCUSP32,
};

std::span<const CatalogId> all_catalog_ids();
std::string to_string(CatalogId id);
std::optional<CatalogId> parse_catalog_id(std::string_view text);

/// The universal complex registered under `id`. Generators follow the global ordering.
algebra::MixedComplex catalog(CatalogId id);

/// Chain complex of the n = 2 fibers (degrees 0 and 1) with the same ring tags as V32.
algebra::MixedComplex v21_complex();

enum class SuspensionVariant { CoZ, FullZ2 };

std::string to_string(SuspensionVariant v);
std::optional<SuspensionVariant> parse_suspension_variant(std::string_view text);

/// Same-name map from the n = 2 chain complex into the n = 3 one.
/// CoZ uses the co-orientable (free) parts, whose Z-duals are CO21 and CO32.
/// FullZ2 uses the complete mixed complexes, whose Z2-duals are C21_Z2 and C32_Z2.
algebra::ChainMap suspension_map(SuspensionVariant variant);

}  // namespace foldcob::fibers
