#include <benchmark/benchmark.h>

#include "hookcoh/admissible.hpp"
#include "hookcoh/bott.hpp"
#include "hookcoh/extremal.hpp"
#include "hookcoh/grassmann.hpp"
#include "hookcoh/partition.hpp"

using namespace hookcoh;

static void BM_Hat(benchmark::State& state) {
    const Partition nu{4, 3, 3, 2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(hat(nu, 5, 8));
}
BENCHMARK(BM_Hat);

static void BM_EnumerateAdmissible(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(4, 4, 8));
}
BENCHMARK(BM_EnumerateAdmissible);

static void BM_SnowTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_table(3, 6, 4));
}
BENCHMARK(BM_SnowTable);

static void BM_BottTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_table(3, 6, 4));
}
BENCHMARK(BM_BottTable);

static void BM_LrProduct(benchmark::State& state) {
    const Partition a{3, 2, 1};
    const Partition b{2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(lr_product(a, b, 6));
}
BENCHMARK(BM_LrProduct);

static void BM_Maximize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(maximize(6, 12, 5));
}
BENCHMARK(BM_Maximize);

BENCHMARK_MAIN();
