#include <benchmark/benchmark.h>

#include <random>

#include "cohomex/cohomology/bar_complex.hpp"
#include "cohomex/cohomology/engine.hpp"
#include "cohomex/exponent/analysis.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/group/subgroups.hpp"
#include "cohomex/linalg/local_elimination.hpp"
#include "cohomex/linalg/smith.hpp"

using namespace cohomex;

namespace {

SparseIntMatrix random_sparse(Index n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> val(-5, 5);
  std::vector<Triplet> t;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      if (coin(rng) < density) t.push_back({r, c, BigInt(val(rng))});
    }
  }
  return SparseIntMatrix::from_triplets(n, n, std::move(t));
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto a = random_sparse(static_cast<Index>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(20)->Arg(50)->Arg(100);

void BM_SmithWithTransforms(benchmark::State& state) {
  const auto a = random_sparse(static_cast<Index>(state.range(0)), 0.1, 11);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a, true));
}
BENCHMARK(BM_SmithWithTransforms)->Arg(20)->Arg(50);

void BM_LocalSnf(benchmark::State& state) {
  const auto a = random_sparse(static_cast<Index>(state.range(0)), 0.05, 13);
  for (auto _ : state) benchmark::DoNotOptimize(snf_local(a, 2, 40));
}
BENCHMARK(BM_LocalSnf)->Arg(100)->Arg(400);

void BM_BarDifferential(benchmark::State& state) {
  const FiniteGroup g = cyclic_group(4);
  BarComplex bar(g);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bar.differential(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bar.generator_count(n + 1)));
}
BENCHMARK(BM_BarDifferential)->DenseRange(3, 6);

void BM_CyclicCohomology(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    CohomologyEngine e(cyclic_group(4));
    benchmark::DoNotOptimize(e.cohomology(n, CoefficientSpec::integral()));
  }
}
BENCHMARK(BM_CyclicCohomology)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_DihedralCohomology(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    CohomologyEngine e(build_from_descriptor("family:p=2,a=1,b=1,g=1,d=0"));
    benchmark::DoNotOptimize(e.cohomology(n, CoefficientSpec::integral()));
  }
}
BENCHMARK(BM_DihedralCohomology)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ModularCohomology(benchmark::State& state) {
  for (auto _ : state) {
    CohomologyEngine e(build_from_descriptor("product:(cyclic:2)x(cyclic:2)"));
    benchmark::DoNotOptimize(e.cohomology(4, CoefficientSpec::modular(2)));
  }
}
BENCHMARK(BM_ModularCohomology)->Unit(benchmark::kMillisecond);

void BM_BuildFamilyGroup(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family_group(normalize_params(p, 2, 2, 2, 1)));
}
BENCHMARK(BM_BuildFamilyGroup)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Lemma1Bound(benchmark::State& state) {
  const FiniteGroup g = build_family_group(normalize_params(2, 1, 1, 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(lemma1_bound(g, 4));
}
BENCHMARK(BM_Lemma1Bound)->Unit(benchmark::kMillisecond);

void BM_MinimalSplittingSubgroup(benchmark::State& state) {
  const FiniteGroup g = build_family_group(normalize_params(3, 2, 2, 2, 0));
  const Subgroup c = generate_subgroup(g, std::vector<ElementId>{g.generator("c")});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_splitting_subgroup(g, c));
}
BENCHMARK(BM_MinimalSplittingSubgroup)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
