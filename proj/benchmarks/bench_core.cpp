#include <benchmark/benchmark.h>

#include "lgrass/blocks.hpp"
#include "lgrass/decompose.hpp"

using namespace lgrass;

static void BM_ContractionMatrix(benchmark::State& state) {
    const SymplecticLabels labels(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(contraction_matrix(labels));
    }
}
BENCHMARK(BM_ContractionMatrix)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RankGF2(benchmark::State& state) {
    const BinaryMatrix b = contraction_matrix(SymplecticLabels(static_cast<int>(state.range(0))));
    const FieldSpec field = FieldSpec::gf(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(b, field));
    }
}
BENCHMARK(BM_RankGF2)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RankModP(benchmark::State& state) {
    const BinaryMatrix b = contraction_matrix(SymplecticLabels(static_cast<int>(state.range(0))));
    const FieldSpec field = FieldSpec::gf(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(b, field));
    }
}
BENCHMARK(BM_RankModP)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RankChar0Block(benchmark::State& state) {
    const BinaryMatrix block = canonical_block(static_cast<int>(state.range(0)));
    const FieldSpec field = FieldSpec::rationals();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(block, field));
    }
}
BENCHMARK(BM_RankChar0Block)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PermutationEquivalence(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const BinaryMatrix block = canonical_block(k);
    const BinaryMatrix oracle = inclusion_matrix(2 * (k - 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_equivalent(block, oracle));
    }
}
BENCHMARK(BM_PermutationEquivalence)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Decomposition(benchmark::State& state) {
    const SymplecticLabels labels(static_cast<int>(state.range(0)));
    const std::vector<std::uint64_t> chars{2, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_decomposition(labels, chars));
    }
}
BENCHMARK(BM_Decomposition)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
