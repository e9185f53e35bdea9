#include <benchmark/benchmark.h>

#include <cfree/cfree.hpp>

using namespace cfree;

static void BM_EnumerateNC(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_nc(n));
    }
}
BENCHMARK(BM_EnumerateNC)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateNCL(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_ncl(n));
    }
}
BENCHMARK(BM_EnumerateNCL)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

static void BM_EnumerateNC0(benchmark::State &state)
{
    const int two_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_nc_0(two_n));
    }
}
BENCHMARK(BM_EnumerateNC0)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Kreweras(benchmark::State &state)
{
    const auto all = enumerate_nc(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto &p : all) {
            benchmark::DoNotOptimize(kreweras(p));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size()));
}
BENCHMARK(BM_Kreweras)->Arg(8)->Arg(10);
