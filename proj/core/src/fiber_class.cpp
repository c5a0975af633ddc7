#include "foldcob/fiber_class.hpp"

#include <array>
#include <stdexcept>

namespace foldcob::fibers {
namespace {

constexpr std::array<FiberClass, 21> kClasses{{
    {"0", "0̃", 0, true, false},
    {"I0", "Ĩ⁰", 1, true, false},
    {"I1", "Ĩ¹", 1, true, false},
    {"I2", "Ĩ²", 1, false, false},
    {"II00", "ĨI⁰⁰", 2, false, false},
    {"II01", "ĨI⁰¹", 2, true, false},
    {"II02", "ĨI⁰²", 2, false, false},
    {"II0a", "ĨI⁰ᵅ", 2, true, false},
    {"II11", "ĨI¹¹", 2, false, false},
    {"II12", "ĨI¹²", 2, false, false},
    {"II1a", "ĨI¹ᵅ", 2, true, false},
    {"II22", "ĨI²²", 2, false, false},
    {"II3", "ĨI³", 2, false, false},
    {"II4", "ĨI⁴", 2, false, false},
    {"II5", "ĨI⁵", 2, false, false},
    {"II6", "ĨI⁶", 2, false, false},
    {"II7", "ĨI⁷", 2, false, false},
    {"IIa", "ĨIᵃ", 2, true, true},
    {"IIb", "ĨIᵝ", 2, true, false},
    {"IIg", "ĨIᵞ", 2, true, true},
    {"Ia", "Ĩᵅ", 1, true, false},
}};

}  // namespace

std::span<const FiberClass> all_fiber_classes() { return kClasses; }

std::optional<FiberClass> find_fiber_class(std::string_view alias) {
  for (const auto& c : kClasses)
    if (c.alias == alias) return c;
  return std::nullopt;
}

const FiberClass& fiber_class(std::string_view alias) {
  for (const auto& c : kClasses)
    if (c.alias == alias) return c;
  throw std::out_of_range("unknown fiber class " + std::string(alias));
}

bool generator_less(const algebra::Generator& a, const algebra::Generator& b) {
  if (a.name != b.name) return a.name < b.name;
  auto rank = [](algebra::Parity p) { return p == algebra::Parity::Odd ? 0 : p == algebra::Parity::Even ? 1 : 2; };
  return rank(a.parity) < rank(b.parity);
}

std::string display_label(const algebra::Generator& g) {
  auto cls = find_fiber_class(g.name);
  std::string base = cls ? std::string(cls->display) : g.name;
  switch (g.parity) {
    case algebra::Parity::Odd: return base + "ₒ";
    case algebra::Parity::Even: return base + "ₑ";
    case algebra::Parity::None: break;
  }
  return base;
}

}  // namespace foldcob::fibers
