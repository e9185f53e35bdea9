#include <benchmark/benchmark.h>

#include <cfree/cfree.hpp>

using namespace cfree;

static void BM_CFreeConvolveApprox(benchmark::State &state)
{
    RandomInputs rnd(7);
    const auto N = static_cast<std::size_t>(state.range(0));
    const MeasurePair a{rnd.atomic(4, 12), rnd.atomic_nonzero_mean(4, 12)};
    const MeasurePair b{rnd.atomic(4, 12), rnd.atomic_nonzero_mean(4, 12)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cfree_multiplicative_convolve(a, b, N));
    }
}
BENCHMARK(BM_CFreeConvolveApprox)->Arg(6)->Arg(12)->Arg(24);

static void BM_CFreeConvolveExact(benchmark::State &state)
{
    RandomInputs rnd(8);
    const auto N = static_cast<std::size_t>(state.range(0));
    const PairMoments<ComplexRational> a{*exact_moment_series(rnd.atomic(3, 4), N),
                                         *exact_moment_series(rnd.atomic_nonzero_mean(3, 4), N)};
    const PairMoments<ComplexRational> b{*exact_moment_series(rnd.atomic(3, 4), N),
                                         *exact_moment_series(rnd.atomic_nonzero_mean(3, 4), N)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cfree_convolve_moments(a, b));
    }
}
BENCHMARK(BM_CFreeConvolveExact)->Arg(6)->Arg(10);

static void BM_SemigroupPair(benchmark::State &state)
{
    const IdGenerator gen = make_generator(unit_from_turns(mpq_class(1, 10)), {Atom{mpq_class(1, 3), mpq_class(1, 4)}});
    const auto target =
        herglotz_exp(make_generator(unit_from_turns(mpq_class(1, 12)), {Atom{mpq_class(2, 5), mpq_class(1, 5)}}), -1, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(semigroup_pair(gen, target, 0.5, 8));
    }
}
BENCHMARK(BM_SemigroupPair);

static void BM_LimitExperiment(benchmark::State &state)
{
    LimitConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_experiment(cfg));
    }
}
BENCHMARK(BM_LimitExperiment)->Unit(benchmark::kMillisecond);
