#include <benchmark/benchmark.h>

#include "netfit/fitting.hpp"
#include "netfit/generators.hpp"

using namespace netfit;

static void BM_GenerateWs(benchmark::State& state) {
    const WsParams p{static_cast<std::size_t>(state.range(0)), 8, 0.1};
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate_ws(p, seed++));
}
BENCHMARK(BM_GenerateWs)->Arg(1000)->Arg(10000);

static void BM_GenerateCba(benchmark::State& state) {
    const CbaParams p{static_cast<std::size_t>(state.range(0)), 3, 0.5};
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate_cba(p, seed++));
}
BENCHMARK(BM_GenerateCba)->Arg(1000)->Arg(10000);

static void BM_Generate2K(benchmark::State& state) {
    const auto target = generate_cba({static_cast<std::size_t>(state.range(0)), 3, 0.5}, 7);
    const auto fit = fit_2k(target);
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate(fit.params, seed++));
}
BENCHMARK(BM_Generate2K)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_FitWs(benchmark::State& state) {
    const auto target = generate_ws({static_cast<std::size_t>(state.range(0)), 6, 0.1}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fit_ws(target, WsTarget::clustering));
}
BENCHMARK(BM_FitWs)->Arg(300)->Unit(benchmark::kMillisecond);
