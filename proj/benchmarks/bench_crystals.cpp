#include <benchmark/benchmark.h>

#include "crystals/coordinate.hpp"
#include "crystals/demazure.hpp"
#include "crystals/graph.hpp"
#include "crystals/signature.hpp"

using namespace crystals;

static void BM_Enumerate(benchmark::State& state) {
    AffineType t(Family::B1, 3);
    CoordCrystal B(t, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(B.elements());
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(3);

static void BM_GraphClosure(benchmark::State& state) {
    AffineType t(Family::C1, 2);
    auto B = make_crystal(t, static_cast<int>(state.range(0)));
    std::vector<int> labels{0, 1, 2};
    auto seeds = B->elements();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_graph(*B, seeds, labels, 1000000));
}
BENCHMARK(BM_GraphClosure)->Arg(1)->Arg(2);

static void BM_PathClosure(benchmark::State& state) {
    AffineType t(Family::A2even, 2);
    auto B = make_crystal(t, 1);
    Weight lambda = multiple_of_fundamental(t, 0, 1);
    DemazureContext ctx{B.get(), lambda, builtin_schedule(t, lambda), 0};
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(recursive_oracle(ctx, k));
}
BENCHMARK(BM_PathClosure)->Arg(4)->Arg(8);

static void BM_SignatureReduce(benchmark::State& state) {
    Signature s;
    for (int i = 0; i < state.range(0); ++i) {
        s.push_back({(i * 7919) % 3 != 0, i});
    }
    for (auto _ : state) benchmark::DoNotOptimize(reduce_signature(s));
}
BENCHMARK(BM_SignatureReduce)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
