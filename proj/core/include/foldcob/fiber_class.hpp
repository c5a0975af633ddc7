#pragma once

#include "foldcob/complex.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace foldcob::fibers {

/// A named class of singular fibers (without parity decoration).
struct FiberClass {
  std::string_view alias;    // ASCII name, e.g. "II0a"
  std::string_view display;  // Unicode name, e.g. "ĨI⁰ᵅ"
  int codim = 0;
  bool coorientable = false;
  bool cusp_class = false;
};

/// Every class in fixed global order.
std::span<const FiberClass> all_fiber_classes();

std::optional<FiberClass> find_fiber_class(std::string_view alias);
const FiberClass& fiber_class(std::string_view alias);

/// Global ordering key: alias lexicographic, then o before e.
bool generator_less(const algebra::Generator& a, const algebra::Generator& b);

/// Display name with parity subscript, e.g. "Ĩ⁰ₒ".
std::string display_label(const algebra::Generator& g);

}  // namespace foldcob::fibers
