#include <benchmark/benchmark.h>

#include "topofilt/bht.hpp"
#include "topofilt/instances.hpp"
#include "topofilt/lpf.hpp"
#include "topofilt/oracle.hpp"

using namespace topofilt;

namespace {

GwfSignal grid_instance(int m) {
    InstanceRng rng(static_cast<std::uint32_t>(m) * 7919u + 3u);
    return image_to_gwf(random_int_image(rng, m, m, 0, 255));
}

void BM_CanonicalOrdering(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    const InducedGraphSignal ind = build_induced(g.embedding, g.signal);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_ordering(ind.signal));
    }
}
BENCHMARK(BM_CanonicalOrdering)->Arg(16)->Arg(64)->Arg(128);

void BM_BuildBht(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    const InducedGraphSignal ind = build_induced(g.embedding, g.signal);
    const TotalOrder order = canonical_ordering(ind.signal);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_bht(ind.signal, order));
    }
}
BENCHMARK(BM_BuildBht)->Arg(16)->Arg(64)->Arg(128);

void BM_Lpf0(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    const InducedGraphSignal ind = build_induced(g.embedding, g.signal);
    const TotalOrder order = canonical_ordering(ind.signal);
    const Bht bht = build_bht(ind.signal, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpf0(ind.signal, bht, 16.0));
    }
}
BENCHMARK(BM_Lpf0)->Arg(16)->Arg(64)->Arg(128);

void BM_PdGwf(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pd_gwf(g.embedding, g.signal, 0));
        benchmark::DoNotOptimize(pd_gwf(g.embedding, g.signal, 1));
    }
}
BENCHMARK(BM_PdGwf)->Arg(16)->Arg(64);

void BM_LpfStar(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpf_star(g.embedding, g.signal, 16.0));
    }
}
BENCHMARK(BM_LpfStar)->Arg(16)->Arg(32);

// The reduction oracle is cubic by design; kept here as the contrast case.
void BM_OracleReduction(benchmark::State& state) {
    const GwfSignal g = grid_instance(static_cast<int>(state.range(0)));
    const TotalOrder order = canonical_ordering(g.embedding.host(), g.signal);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_pd(g.embedding.host(), g.signal, order));
    }
}
BENCHMARK(BM_OracleReduction)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
