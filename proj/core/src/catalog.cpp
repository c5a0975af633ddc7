#include "foldcob/catalog.hpp"

#include "foldcob/fiber_class.hpp"
#include "foldcob/free_approximation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace foldcob::fibers {

using algebra::Direction;
using algebra::Generator;
using algebra::IntMatrix;
using algebra::MixedComplex;
using algebra::Parity;
using algebra::Ring;

namespace {

using Terms = std::initializer_list<std::pair<const char*, long>>;

std::vector<Generator> pairs(std::initializer_list<const char*> names, Ring ring) {
  std::vector<Generator> out;
  for (const char* n : names) {
    out.push_back({n, Parity::Odd, ring});
    out.push_back({n, Parity::Even, ring});
  }
  return out;
}

class Builder {
public:
  Builder(std::string id, Direction dir) {
    cx_.id = std::move(id);
    cx_.direction = dir;
  }

  Builder& degree(std::vector<Generator> gens) {
    std::stable_sort(gens.begin(), gens.end(), generator_less);
    cx_.generators.push_back(std::move(gens));
    if (cx_.generators.size() > 1) {
      const std::size_t k = cx_.generators.size() - 2;
      const bool hom = cx_.direction == Direction::Homological;
      cx_.diffs.emplace_back(hom ? cx_.size(k) : cx_.size(k + 1), hom ? cx_.size(k + 1) : cx_.size(k));
    }
    return *this;
  }

  // Differential of one generator in degree `deg`, written as a sum of labelled terms.
  Builder& d(std::size_t deg, const char* source, Terms terms) {
    const bool hom = cx_.direction == Direction::Homological;
    const std::size_t target_deg = hom ? deg - 1 : deg + 1;
    IntMatrix& m = cx_.diffs.at(hom ? deg - 1 : deg);
    const std::size_t j = cx_.index_of(deg, source);
    for (const auto& [label, coeff] : terms) m(cx_.index_of(target_deg, label), j) += coeff;
    return *this;
  }

  MixedComplex build() const { return cx_; }

private:
  MixedComplex cx_;
};

MixedComplex co_complex(std::string id, bool with_degree_two) {
  Builder b(std::move(id), Direction::Cohomological);
  b.degree(pairs({"0"}, Ring::Free)).degree(pairs({"I0", "I1"}, Ring::Free));
  b.d(0, "0o", {{"I0o", 1}, {"I0e", 1}, {"I1o", 1}, {"I1e", 1}});
  b.d(0, "0e", {{"I0o", -1}, {"I0e", -1}, {"I1o", -1}, {"I1e", -1}});
  if (with_degree_two) {
    b.degree(pairs({"II01"}, Ring::Free));
    b.d(1, "I0o", {{"II01o", 1}, {"II01e", -1}});
    b.d(1, "I0e", {{"II01o", 1}, {"II01e", -1}});
    b.d(1, "I1o", {{"II01o", -1}, {"II01e", 1}});
    b.d(1, "I1e", {{"II01o", -1}, {"II01e", 1}});
  }
  return b.build();
}

constexpr std::initializer_list<const char*> kDegreeTwoNames = {"II00", "II01", "II02", "II11", "II12", "II22",
                                                                  "II3",  "II4",  "II5",  "II6",  "II7"};

MixedComplex z2_complex(std::string id, bool with_degree_two) {
  Builder b(std::move(id), Direction::Cohomological);
  b.degree(pairs({"0"}, Ring::TwoTorsion)).degree(pairs({"I0", "I1", "I2"}, Ring::TwoTorsion));
  for (const char* g : {"0o", "0e"}) b.d(0, g, {{"I0o", 1}, {"I0e", 1}, {"I1o", 1}, {"I1e", 1}});
  if (with_degree_two) {
    b.degree(pairs(kDegreeTwoNames, Ring::TwoTorsion));
    for (const char* g : {"I0o", "I0e", "I1o", "I1e"}) b.d(1, g, {{"II01o", 1}, {"II01e", 1}});
    for (const char* g : {"I2o", "I2e"})
      b.d(1, g, {{"II02o", 1}, {"II02e", 1}, {"II12o", 1}, {"II12e", 1}, {"II6o", 1}, {"II6e", 1}});
  }
  return b.build();
}

MixedComplex v_complex(std::string id, bool with_degree_two) {
  Builder b(std::move(id), Direction::Homological);
  b.degree(pairs({"0"}, Ring::Free));
  auto deg1 = pairs({"I0", "I1"}, Ring::Free);
  for (auto& g : pairs({"I2"}, Ring::TwoTorsion)) deg1.push_back(g);
  b.degree(std::move(deg1));
  for (const char* g : {"I0o", "I0e", "I1o", "I1e"}) b.d(1, g, {{"0o", 1}, {"0e", -1}});
  if (with_degree_two) {
    std::vector<Generator> deg2;
    for (const char* n : kDegreeTwoNames)
      for (auto& g : pairs({n}, std::string_view(n) == "II01" ? Ring::Free : Ring::TwoTorsion)) deg2.push_back(g);
    b.degree(std::move(deg2));
    b.d(2, "II01o", {{"I0o", 1}, {"I0e", 1}, {"I1o", -1}, {"I1e", -1}});
    b.d(2, "II01e", {{"I0o", -1}, {"I0e", -1}, {"I1o", 1}, {"I1e", 1}});
    for (const char* g : {"II02o", "II02e", "II12o", "II12e", "II6o", "II6e"}) b.d(2, g, {{"I2o", 1}, {"I2e", 1}});
  }
  return b.build();
}

MixedComplex cusp_closed() {
  Builder b("CUSP32", Direction::Cohomological);
  b.degree(pairs({"0"}, Ring::Free)).degree(pairs({"I0", "I1"}, Ring::Free)).degree(pairs({"II01", "IIa"}, Ring::Free));
  b.d(0, "0o", {{"I0o", 1}, {"I0e", 1}, {"I1o", 1}, {"I1e", 1}});
  b.d(0, "0e", {{"I0o", -1}, {"I0e", -1}, {"I1o", -1}, {"I1e", -1}});
  b.d(1, "I0o", {{"II01o", 1}, {"II01e", -1}, {"IIae", 1}});
  b.d(1, "I0e", {{"II01o", 1}, {"II01e", -1}, {"IIao", -1}});
  b.d(1, "I1o", {{"II01o", -1}, {"II01e", 1}, {"IIao", 1}});
  b.d(1, "I1e", {{"II01o", -1}, {"II01e", 1}, {"IIae", -1}});
  return b.build();
}

MixedComplex cusp_boundary() {
  Builder b("BCUSP32", Direction::Cohomological);
  b.degree(pairs({"0"}, Ring::Free))
      .degree(pairs({"I0", "I1", "Ia"}, Ring::Free))
      .degree(pairs({"II01", "II0a", "II1a", "IIb", "IIg", "IIa"}, Ring::Free));
  const Terms all = {{"I0o", 1}, {"I0e", 1}, {"I1o", 1}, {"I1e", 1}, {"Iao", 1}, {"Iae", 1}};
  b.d(0, "0o", all);
  b.d(0, "0e", {{"I0o", -1}, {"I0e", -1}, {"I1o", -1}, {"I1e", -1}, {"Iao", -1}, {"Iae", -1}});
  b.d(1, "I0o", {{"II01o", 1}, {"II01e", -1}, {"IIae", -1}, {"II0ao", -1}, {"II0ae", 1}, {"IIge", -1}});
  b.d(1, "I0e", {{"II01o", 1}, {"II01e", -1}, {"IIao", 1}, {"II0ao", -1}, {"II0ae", 1}, {"IIgo", 1}});
  b.d(1, "I1o", {{"II01o", -1}, {"II01e", 1}, {"IIao", -1}, {"II1ao", -1}, {"II1ae", 1}, {"IIbe", -1}});
  b.d(1, "I1e", {{"II01o", -1}, {"II01e", 1}, {"IIae", 1}, {"II1ao", -1}, {"II1ae", 1}, {"IIbo", 1}});
  b.d(1, "Iao", {{"II0ao", 1}, {"II0ae", -1}, {"II1ao", 1}, {"II1ae", -1}, {"IIbe", 1}, {"IIgo", -1}});
  b.d(1, "Iae", {{"II0ao", 1}, {"II0ae", -1}, {"II1ao", 1}, {"II1ae", -1}, {"IIbo", -1}, {"IIge", 1}});
  return b.build();
}

constexpr std::array<CatalogId, 12> kIds{CatalogId::CO32,   CatalogId::CO32_ORI,      CatalogId::SCO32,
                                         CatalogId::SCO32_ORI, CatalogId::CO21,      CatalogId::C32_Z2,
                                         CatalogId::C32_Z2_SIMPLE, CatalogId::C21_Z2, CatalogId::V32,
                                         CatalogId::F32,    CatalogId::CUSP32,        CatalogId::BCUSP32};

}  // namespace

std::span<const CatalogId> all_catalog_ids() { return kIds; }

std::string to_string(CatalogId id) {
  switch (id) {
    case CatalogId::CO32: return "CO32";
    case CatalogId::CO32_ORI: return "CO32_ORI";
    case CatalogId::SCO32: return "SCO32";
    case CatalogId::SCO32_ORI: return "SCO32_ORI";
    case CatalogId::CO21: return "CO21";
    case CatalogId::C32_Z2: return "C32_Z2";
    case CatalogId::C32_Z2_SIMPLE: return "C32_Z2_SIMPLE";
    case CatalogId::C21_Z2: return "C21_Z2";
    case CatalogId::V32: return "V32";
    case CatalogId::F32: return "F32";
    case CatalogId::CUSP32: return "CUSP32";
    case CatalogId::BCUSP32: return "BCUSP32";
  }
  throw std::invalid_argument("unknown catalog id");
}

std::optional<CatalogId> parse_catalog_id(std::string_view text) {
  for (CatalogId id : kIds)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

MixedComplex catalog(CatalogId id) {
  const std::string name = to_string(id);
  switch (id) {
    case CatalogId::CO32:
    case CatalogId::CO32_ORI:
    case CatalogId::SCO32:
    case CatalogId::SCO32_ORI: return co_complex(name, true);
    case CatalogId::CO21: return co_complex(name, false);
    case CatalogId::C32_Z2: return z2_complex(name, true);
    case CatalogId::C32_Z2_SIMPLE: {
      MixedComplex cx = algebra::drop_generators(z2_complex(name, true), {"II6o", "II6e"});
      return cx;
    }
    case CatalogId::C21_Z2: return z2_complex(name, false);
    case CatalogId::V32: return v_complex(name, true);
    case CatalogId::F32: return algebra::free_approximation(v_complex("V32", true)).f;
    case CatalogId::CUSP32: return cusp_closed();
    case CatalogId::BCUSP32: return cusp_boundary();
  }
  throw std::invalid_argument("unknown catalog id");
}

MixedComplex v21_complex() { return v_complex("V21", false); }

std::string to_string(SuspensionVariant v) { return v == SuspensionVariant::CoZ ? "co_Z" : "full_Z2"; }

std::optional<SuspensionVariant> parse_suspension_variant(std::string_view text) {
  if (text == "co_Z") return SuspensionVariant::CoZ;
  if (text == "full_Z2") return SuspensionVariant::FullZ2;
  return std::nullopt;
}

algebra::ChainMap suspension_map(SuspensionVariant variant) {
  MixedComplex source = v21_complex();
  MixedComplex target = catalog(CatalogId::V32);
  if (variant == SuspensionVariant::CoZ) {
    source = algebra::free_part(source);
    target = algebra::free_part(target);
  }
  algebra::ChainMap f = algebra::identity_on_labels(source, target);
  if (auto v = algebra::validate_chain_map(f); !v.empty())
    throw std::logic_error("suspension map fails the chain condition: " + v.front().message);
  return f;
}

}  // namespace foldcob::fibers
