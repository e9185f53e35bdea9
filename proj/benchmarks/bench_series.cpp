#include <benchmark/benchmark.h>

#include <cfree/cfree.hpp>

using namespace cfree;
using SQ = Series<ComplexRational>;

static void BM_InvertComposition(benchmark::State &state)
{
    RandomInputs rnd(1);
    const SQ f = rnd.series(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_composition(f));
    }
}
BENCHMARK(BM_InvertComposition)->Arg(4)->Arg(8)->Arg(12);

static void BM_BoxedConvolution(benchmark::State &state)
{
    RandomInputs rnd(2);
    const auto N = static_cast<std::size_t>(state.range(0));
    const SQ f = rnd.series(N);
    const SQ g = rnd.series(N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(boxed_convolution(f, g));
    }
}
BENCHMARK(BM_BoxedConvolution)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_TTransforms(benchmark::State &state)
{
    RandomInputs rnd(3);
    const auto N = static_cast<std::size_t>(state.range(0));
    const SQ m = rnd.series(N);
    const SQ M = rnd.series(N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t_transform(m));
        benchmark::DoNotOptimize(ct_transform(M, m));
    }
}
BENCHMARK(BM_TTransforms)->Arg(4)->Arg(8);

static void BM_SigmaRoutes(benchmark::State &state)
{
    RandomInputs rnd(4);
    const SQ m = rnd.series(8);
    const SQ M = rnd.series(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_routes(M, m));
    }
}
BENCHMARK(BM_SigmaRoutes);

static void BM_ProductCumulantsNC0(benchmark::State &state)
{
    RandomInputs rnd(5);
    const auto N = static_cast<std::size_t>(state.range(0));
    const auto X = TwoStateData<ComplexRational>::from_cumulants(rnd.series(N), rnd.series(N));
    const auto Y = TwoStateData<ComplexRational>::from_cumulants(rnd.series(N), rnd.series(N));
    for (auto _ : state) {
        benchmark::DoNotOptimize(product_phi_cumulant_series(X, Y));
    }
}
BENCHMARK(BM_ProductCumulantsNC0)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MomentsViaNCL(benchmark::State &state)
{
    RandomInputs rnd(6);
    const SQ t = rnd.unit_series(7);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(moments_via_ncl(t, std::optional<SQ>{}, n));
    }
}
BENCHMARK(BM_MomentsViaNCL)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
