#include "foldcob/catalog.hpp"
#include "foldcob/circle_diagram.hpp"
#include "foldcob/free_approximation.hpp"
#include "foldcob/normal_form.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace foldcob;

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> entry(-9, 9);
  algebra::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(16)->Arg(32);

static void BM_HomologyV32(benchmark::State& state) {
  const auto v = fibers::catalog(fibers::CatalogId::V32);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::homology(v, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HomologyV32)->DenseRange(0, 2);

static void BM_Hypercohomology(benchmark::State& state) {
  const auto v = fibers::catalog(fibers::CatalogId::V32);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::hypercohomology(v, algebra::Coefficients::Z2, 1));
}
BENCHMARK(BM_Hypercohomology);

static void BM_ReebNormalForm(benchmark::State& state) {
  const auto g = reeb::random_reeb(7, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(reeb::reduce_to_normal_form(g, reeb::Category::Unoriented));
}
BENCHMARK(BM_ReebNormalForm)->Arg(16)->Arg(128)->Arg(1024);

static void BM_CuspCount(benchmark::State& state) {
  const auto d = circle::random_paired_diagram(3, static_cast<std::size_t>(state.range(0)), circle::BoundaryMode::WithBoundary);
  for (auto _ : state) benchmark::DoNotOptimize(circle::cusp_count(d));
}
BENCHMARK(BM_CuspCount)->Arg(64)->Arg(4096);
BENCHMARK_MAIN();
