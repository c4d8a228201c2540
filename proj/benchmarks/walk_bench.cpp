#include "funcwalk/classify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace funcwalk;

WalkSpec walk(const char* f, const char* g, unsigned m) {
    return make_walk(parse_expr(f), g ? std::optional(parse_expr(g)) : std::nullopt, m, 1);
}

void BM_vertices_float(benchmark::State& state) {
    const WalkSpec spec = walk("n^2", "1/n", 12);
    const std::size_t steps = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertices_float(spec, steps, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_vertices_float)->Arg(1000)->Arg(10000);

void BM_vertices_exact(benchmark::State& state) {
    const WalkSpec spec = walk("n^2", "1/n", 12);
    const std::size_t steps = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertices_exact(spec, steps));
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_vertices_exact)->Arg(50)->Arg(200);

void BM_cyclotomic_poly(benchmark::State& state) {
    const unsigned m = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclotomic_poly(m));
    }
}
BENCHMARK(BM_cyclotomic_poly)->Arg(12)->Arg(105)->Arg(1000);

void BM_is_closed(benchmark::State& state) {
    const WalkSpec spec = walk("n^2", nullptr, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_closed(spec));
    }
}
BENCHMARK(BM_is_closed)->Arg(6)->Arg(62);

void BM_classify_all(benchmark::State& state) {
    const WalkSpec spec = walk("n", "1/n", 4);
    ClassifyOptions opts;
    opts.horizon = state.range(0);
    opts.tail_window = opts.horizon / 10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_all(spec, opts));
    }
}
BENCHMARK(BM_classify_all)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
