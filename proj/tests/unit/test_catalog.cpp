#include <doctest.h>

#include "foldcob/catalog.hpp"
#include "foldcob/fiber_class.hpp"
#include "foldcob/identities.hpp"

#include <algorithm>

using namespace foldcob::algebra;
using namespace foldcob::fibers;

namespace {

std::vector<std::string> labels(const MixedComplex& cx, std::size_t deg) {
  std::vector<std::string> out;
  for (const auto& g : cx.generators[deg]) out.push_back(g.label());
  return out;
}

std::size_t count_ring(const MixedComplex& cx, std::size_t deg, Ring r) {
  return static_cast<std::size_t>(
      std::count_if(cx.generators[deg].begin(), cx.generators[deg].end(), [&](const Generator& g) { return g.ring == r; }));
}

const CountingIdentity& identity_for(const CountingIdentities& ids, const std::string& label) {
  for (std::size_t i = 0; i < ids.codim1.size(); ++i)
    if (ids.codim1[i].label() == label) return ids.per_class.at(i);
  throw std::out_of_range(label);
}

}  // namespace

TEST_CASE("catalog ids round trip") {
  CHECK(all_catalog_ids().size() == 12);
  for (CatalogId id : all_catalog_ids()) {
    CHECK(parse_catalog_id(to_string(id)) == id);
    CAPTURE(to_string(id));
    CHECK(validate_complex(catalog(id)).empty());
  }
  CHECK_FALSE(parse_catalog_id("V33").has_value());
}

TEST_CASE("generator lists") {
  const MixedComplex co = catalog(CatalogId::CO32);
  CHECK(co.direction == Direction::Cohomological);
  CHECK(labels(co, 0) == std::vector<std::string>{"0o", "0e"});
  CHECK(labels(co, 1) == std::vector<std::string>{"I0o", "I0e", "I1o", "I1e"});
  CHECK(labels(co, 2) == std::vector<std::string>{"II01o", "II01e"});

  const MixedComplex v = catalog(CatalogId::V32);
  CHECK(v.direction == Direction::Homological);
  CHECK(v.size(2) == 22);
  CHECK(count_ring(v, 2, Ring::Free) == 2);
  CHECK(count_ring(v, 2, Ring::TwoTorsion) == 20);
  CHECK(count_ring(v, 1, Ring::TwoTorsion) == 2);

  CHECK(labels(catalog(CatalogId::CUSP32), 2) == std::vector<std::string>{"II01o", "II01e", "IIao", "IIae"});
  CHECK(catalog(CatalogId::BCUSP32).size(1) == 6);
  CHECK(catalog(CatalogId::BCUSP32).size(2) == 12);
  CHECK(catalog(CatalogId::CO21).num_degrees() == 2);
  CHECK(catalog(CatalogId::C21_Z2).num_degrees() == 2);

  const MixedComplex f = catalog(CatalogId::F32);
  CHECK(f.size(2) == 23);
  CHECK(count_ring(f, 2, Ring::TwoTorsion) == 0);
}

TEST_CASE("generators follow the global order") {
  for (CatalogId id : all_catalog_ids()) {
    if (id == CatalogId::F32) continue;
    const MixedComplex cx = catalog(id);
    for (const auto& gens : cx.generators) CHECK(std::is_sorted(gens.begin(), gens.end(), generator_less));
  }
}

TEST_CASE("oriented variants share the co-orientable complex") {
  const MixedComplex co = catalog(CatalogId::CO32);
  for (CatalogId id : {CatalogId::CO32_ORI, CatalogId::SCO32, CatalogId::SCO32_ORI}) {
    const MixedComplex other = catalog(id);
    CHECK(same_complex(co, other));
    CHECK(other.id == to_string(id));
  }
}

TEST_CASE("simple Z2 catalog omits II6") {
  const MixedComplex full = catalog(CatalogId::C32_Z2);
  const MixedComplex simple = catalog(CatalogId::C32_Z2_SIMPLE);
  CHECK(same_complex(drop_generators(full, {"II6o", "II6e"}), simple));
  CHECK(simple.size(2) + 2 == full.size(2));
}

TEST_CASE("ring tags follow co-orientability on integer catalogs") {
  for (CatalogId id : {CatalogId::CO32, CatalogId::CO21, CatalogId::V32, CatalogId::CUSP32, CatalogId::BCUSP32}) {
    const MixedComplex cx = catalog(id);
    for (const auto& gens : cx.generators)
      for (const auto& g : gens) {
        CAPTURE(g.label());
        CHECK((g.ring == Ring::Free) == fiber_class(g.name).coorientable);
      }
  }
  for (CatalogId id : {CatalogId::C32_Z2, CatalogId::C21_Z2})
    for (const auto& gens : catalog(id).generators)
      for (const auto& g : gens) CHECK(g.ring == Ring::TwoTorsion);
}

TEST_CASE("fiber classes") {
  CHECK(all_fiber_classes().size() == 21);
  CHECK(fiber_class("I0").codim == 1);
  CHECK(fiber_class("II01").coorientable);
  CHECK_FALSE(fiber_class("I2").coorientable);
  CHECK(fiber_class("IIa").cusp_class);
  CHECK_FALSE(find_fiber_class("I9").has_value());
  CHECK(generator_less({"I0", Parity::Odd, Ring::Free}, {"I0", Parity::Even, Ring::Free}));
  CHECK(generator_less({"I0", Parity::Even, Ring::Free}, {"I1", Parity::Odd, Ring::Free}));
}

TEST_CASE("suspension maps are chain maps") {
  for (auto variant : {SuspensionVariant::CoZ, SuspensionVariant::FullZ2}) {
    const ChainMap f = suspension_map(variant);
    CHECK(validate_chain_map(f).empty());
    CHECK(parse_suspension_variant(to_string(variant)) == variant);
  }
  CHECK(same_complex(hom_dual(suspension_map(SuspensionVariant::CoZ).source, Coefficients::Z),
                     catalog(CatalogId::CO21)));
  CHECK(same_complex(hom_dual(suspension_map(SuspensionVariant::FullZ2).source, Coefficients::Z2),
                     catalog(CatalogId::C21_Z2)));
}

TEST_CASE("CUSP32 counting identities") {
  const CountingIdentities ids = counting_identities(CatalogId::CUSP32);
  REQUIRE(ids.per_class.size() == 4);
  const CountingIdentity& i0o = identity_for(ids, "I0o");
  CHECK(ids.render(i0o) == "|I0o(f)| = -|II01o(F)| + |II01e(F)| - |IIae(F)|");

  // (I0o) - (I0e) leaves the cusp total on the F side.
  const CountingIdentity& i0e = identity_for(ids, "I0e");
  IntVector f_diff(i0o.f.size()), F_diff(i0o.F.size());
  for (std::size_t i = 0; i < f_diff.size(); ++i) f_diff[i] = i0o.f[i] - i0e.f[i];
  for (std::size_t i = 0; i < F_diff.size(); ++i) F_diff[i] = i0o.F[i] - i0e.F[i];
  CHECK(f_diff == make_vector({1, -1, 0, 0}));
  CHECK(F_diff == make_vector({0, 0, 1, 1}));
}

TEST_CASE("CO32 eliminated identities") {
  const CountingIdentities ids = counting_identities(CatalogId::CO32);
  REQUIRE(ids.eliminated.size() == 2);
  std::vector<IntVector> forms;
  for (const auto& e : ids.eliminated) {
    CHECK(is_zero(e.F));
    forms.push_back(e.f);
  }
  // Codimension-1 order is I0o, I0e, I1o, I1e.
  CHECK(std::find(forms.begin(), forms.end(), make_vector({1, 0, 0, 1})) != forms.end());
  CHECK(std::find(forms.begin(), forms.end(), make_vector({0, 1, 1, 0})) != forms.end());
  for (const auto& e : ids.eliminated) CHECK(ids.render(e).ends_with(" = 0"));
  CHECK_THROWS(counting_identities(CatalogId::V32));
}

TEST_CASE("BCUSP32 identities") {
  const CountingIdentities ids = counting_identities(CatalogId::BCUSP32);
  CHECK(ids.per_class.size() == 6);
  for (const auto& e : ids.per_class) CHECK(e.F.size() == 12);
}

TEST_CASE("cusp cocycle") {
  const CuspCocycleReport r = cusp_cocycle_check();
  CHECK(r.delta_c2_is_cusp_sum);
  CHECK(r.delta_c1_is_negative);
  CHECK(r.sum_is_cocycle);
  CHECK(r.ok());
  CHECK(is_zero(bcusp_delta1(IntVector(6))));
  IntVector sum(r.c1.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = r.c1[i] + r.c2[i];
  CHECK(is_zero(bcusp_delta1(sum)));
  CHECK(bcusp_delta1(r.c2) == r.cusp_sum);
}
