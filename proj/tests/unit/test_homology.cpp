#include <doctest.h>

#include "foldcob/catalog.hpp"
#include "foldcob/free_approximation.hpp"
#include "foldcob/homology.hpp"
#include "rational_rank.hpp"

#include <algorithm>
#include <random>

using namespace foldcob::algebra;
using foldcob::fibers::CatalogId;
using foldcob::fibers::catalog;

namespace {

MixedComplex zero_complex() {
  MixedComplex cx;
  cx.id = "zero";
  cx.generators.resize(1);
  return cx;
}

Generator gen(std::string name, Ring ring = Ring::Free) { return {std::move(name), Parity::None, ring}; }

bool has_code(const foldcob::ViolationList& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const foldcob::Violation& x) { return x.code == code; });
}

/// Free homological complex C_0 <- C_1 <- C_2 with d1 * d2 = 0, made by d2 = random, d1 = random * cokernel projection.
MixedComplex random_free_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::size_t n0 = size(rng), n1 = size(rng), n2 = size(rng);
  IntMatrix d2(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) d2(i, j) = entry(rng);
  // Rows of d1 are integer combinations of a basis of the left kernel of d2.
  const IntMatrix left = kernel_basis(d2.transpose());  // n1 x k
  IntMatrix mix(left.cols(), n0);
  for (std::size_t i = 0; i < mix.rows(); ++i)
    for (std::size_t j = 0; j < n0; ++j) mix(i, j) = entry(rng);
  const IntMatrix d1 = left.cols() == 0 ? IntMatrix(n0, n1) : (left * mix).transpose();

  MixedComplex cx;
  cx.id = "random";
  cx.generators.resize(3);
  for (std::size_t i = 0; i < n0; ++i) cx.generators[0].push_back(gen("a" + std::to_string(i)));
  for (std::size_t i = 0; i < n1; ++i) cx.generators[1].push_back(gen("b" + std::to_string(i)));
  for (std::size_t i = 0; i < n2; ++i) cx.generators[2].push_back(gen("c" + std::to_string(i)));
  cx.diffs = {d1, d2};
  return cx;
}

}  // namespace

TEST_CASE("catalog homology examples") {
  const auto h1 = homology(catalog(CatalogId::V32), 1);
  CHECK(h1.free_rank == 2);
  CHECK(h1.torsion == std::vector<Integer>{2});
  CHECK(h1.to_string() == "Z^2 + Z/2");

  const auto h0 = homology(catalog(CatalogId::CO32), 0);
  CHECK(h0.free_rank == 1);
  CHECK(h0.torsion.empty());

  const auto hz = homology(zero_complex(), 0);
  CHECK(hz.free_rank == 0);
  CHECK(hz.torsion.empty());
  CHECK(hz.to_string() == "0");
}

TEST_CASE("validate_complex") {
  CHECK(validate_complex(catalog(CatalogId::V32)).empty());

  SUBCASE("two-torsion source into a free target") {
    MixedComplex cx;
    cx.generators = {{gen("x")}, {gen("y", Ring::TwoTorsion)}};
    cx.diffs = {IntMatrix{{1}}};
    CHECK(has_code(validate_complex(cx), "two-torsion source maps to free target"));
  }
  SUBCASE("d1 d2 equal to twice a free generator") {
    MixedComplex cx;
    cx.generators = {{gen("x")}, {gen("y")}, {gen("z")}};
    cx.diffs = {IntMatrix{{1}}, IntMatrix{{2}}};
    const auto v = validate_complex(cx);
    REQUIRE(has_code(v, "d∘d nonzero"));
    const auto it = std::find_if(v.begin(), v.end(), [](const auto& x) { return x.code == "d∘d nonzero"; });
    CHECK(it->message.find("2") != std::string::npos);
  }
  SUBCASE("d1 d2 equal to twice a two-torsion generator is fine") {
    MixedComplex cx;
    cx.generators = {{gen("x", Ring::TwoTorsion)}, {gen("y")}, {gen("z")}};
    cx.diffs = {IntMatrix{{1}}, IntMatrix{{2}}};
    CHECK(validate_complex(cx).empty());
  }
  SUBCASE("shape mismatch") {
    MixedComplex cx;
    cx.generators = {{gen("x")}, {gen("y")}};
    cx.diffs = {IntMatrix{{1, 1}}};
    CHECK(has_code(validate_complex(cx), "shape"));
  }
}

TEST_CASE("free ranks agree with rational ranks") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const MixedComplex cx = random_free_complex(rng);
    REQUIRE(validate_complex(cx).empty());
    const std::size_t r1 = foldcob::testing::rational_rank(cx.diffs[0]);
    const std::size_t r2 = foldcob::testing::rational_rank(cx.diffs[1]);
    CHECK(homology(cx, 0).free_rank == cx.size(0) - r1);
    CHECK(homology(cx, 1).free_rank == cx.size(1) - r1 - r2);
    CHECK(homology(cx, 2).free_rank == cx.size(2) - r2);
  }
}

TEST_CASE("universal coefficients: dim H^k(C; Z2) = rank + torsion(H_k) + torsion(H_{k-1})") {
  std::mt19937_64 rng(17);
  auto even = [](const AbelianGroupPresentation& g) {
    return static_cast<std::size_t>(std::count_if(g.torsion.begin(), g.torsion.end(),
                                                  [](const Integer& d) { return d % 2 == 0; }));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const MixedComplex cx = random_free_complex(rng);
    const MixedComplex dual = hom_dual(cx, Coefficients::Z2);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto hk = homology(cx, k);
      const std::size_t ext = k == 0 ? 0 : even(homology(cx, k - 1));
      const auto cohom = homology(dual, k);
      CHECK(cohom.free_rank == 0);
      CHECK(cohom.torsion.size() == hk.free_rank + even(hk) + ext);
    }
  }
}

TEST_CASE("hom_dual") {
  CHECK(same_complex(hom_dual(catalog(CatalogId::V32), Coefficients::Z), catalog(CatalogId::CO32)));
  CHECK(same_complex(hom_dual(catalog(CatalogId::V32), Coefficients::Z2), catalog(CatalogId::C32_Z2)));
  const MixedComplex dz = hom_dual(zero_complex(), Coefficients::Z);
  CHECK(dz.direction == Direction::Cohomological);
  CHECK(dz.num_degrees() == 1);
  CHECK(dz.size(0) == 0);

  // Hom(-, Z) drops two-torsion generators; Hom(-, Z2) keeps every generator.
  const MixedComplex v = catalog(CatalogId::V32);
  const MixedComplex z = hom_dual(v, Coefficients::Z);
  const MixedComplex z2 = hom_dual(v, Coefficients::Z2);
  for (std::size_t k = 0; k < v.num_degrees(); ++k) {
    const auto free_count = std::count_if(v.generators[k].begin(), v.generators[k].end(),
                                          [](const Generator& g) { return g.ring == Ring::Free; });
    CHECK(z.size(k) == static_cast<std::size_t>(free_count));
    CHECK(z2.size(k) == v.size(k));
  }
}

TEST_CASE("express") {
  const MixedComplex co = catalog(CatalogId::CO32);
  Homology h1(co, 1);
  CHECK(is_zero(h1.express(IntVector(co.size(1)))));

  const IntVector coboundary = co.outgoing(0) * std::span<const Integer>(co.vector(0, {{"0o", 1}}));
  CHECK(h1.is_cycle(coboundary));
  CHECK(is_zero(h1.express(coboundary)));

  const auto& g = h1.group();
  for (std::size_t i = 0; i < g.basis_cycles.size(); ++i) {
    IntVector unit(g.num_generators());
    unit[i] = 1;
    CHECK(h1.is_cycle(g.basis_cycles[i]));
    CHECK(h1.express(g.basis_cycles[i]) == unit);
  }

  const MixedComplex v = catalog(CatalogId::V32);
  Homology hv(v, 1);
  REQUIRE(hv.group().torsion.size() == 1);
  const IntVector t = hv.group().basis_cycles.back();
  IntVector twice(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) twice[i] = 2 * t[i];
  CHECK(is_zero(hv.express(twice)));
}

TEST_CASE("analyze_group_map") {
  AbelianGroupPresentation z{1, {}, {}};
  AbelianGroupPresentation z2{0, {2}, {}};
  const auto twice = analyze_group_map(IntMatrix{{2}}, z, z);
  CHECK(twice.injective);
  CHECK_FALSE(twice.surjective);
  const auto onto = analyze_group_map(IntMatrix{{1}}, z, z2);
  CHECK(onto.surjective);
  CHECK_FALSE(onto.injective);
  CHECK(onto.image.torsion == std::vector<Integer>{2});
  const auto iso = analyze_group_map(IntMatrix{{1}}, z2, z2);
  CHECK(iso.isomorphism);
}

TEST_CASE("induced map of the identity") {
  const MixedComplex co = catalog(CatalogId::CO32);
  const ChainMap id = identity_on_labels(co, co);
  CHECK(validate_chain_map(id).empty());
  for (std::size_t k = 0; k < co.num_degrees(); ++k) {
    const InducedMap m = induced_map(id, k, Side::Homology, Coefficients::Z);
    CHECK(m.matrix == IntMatrix::identity(m.domain.num_generators()));
    CHECK(m.report.isomorphism);
  }
  const MixedComplex v = catalog(CatalogId::V32);
  const ChainMap idv = identity_on_labels(v, v);
  for (std::size_t k = 0; k < 2; ++k) {
    const InducedMap m = induced_map(idv, k, Side::Cohomology, Coefficients::Z2);
    CHECK(m.matrix == IntMatrix::identity(m.domain.num_generators()));
  }
}

TEST_CASE("free approximation") {
  const MixedComplex v = catalog(CatalogId::V32);
  const FreeApproximation fa = free_approximation(v);
  CHECK(fa.f.size(2) == 23);
  CHECK(fa.f.generators[2].back().name == "A");
  CHECK(validate_complex(fa.f).empty());
  CHECK(validate_chain_map(fa.lambda).empty());
  CHECK(is_surjective_on_generators(fa.lambda));
  CHECK(homology(fa.f, 1).same_type(homology(v, 1)));
  CHECK(induced_map(fa.lambda, 0, Side::Homology, Coefficients::Z).report.isomorphism);
  CHECK_THROWS(free_approximation(catalog(CatalogId::CO32)));

  const auto h1 = hypercohomology(v, Coefficients::Z, 1);
  CHECK(h1.group.free_rank == 2);
  CHECK(h1.group.torsion.empty());
  CHECK(h1.comparison.report.isomorphism);
  const auto h0 = hypercohomology(v, Coefficients::Z2, 0);
  CHECK(h0.group.torsion == std::vector<Integer>{2});
  CHECK(h0.comparison.report.isomorphism);
  CHECK(hypercohomology(v, Coefficients::Z, 0).group.free_rank == 1);
}
