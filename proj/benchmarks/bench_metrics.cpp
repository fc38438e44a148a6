#include <benchmark/benchmark.h>

#include "netfit/generators.hpp"
#include "netfit/metrics.hpp"

using namespace netfit;

namespace {

Graph ws_graph(benchmark::State& state) {
    return generate_ws({static_cast<std::size_t>(state.range(0)), 8, 0.1}, 1);
}

}  // namespace

static void BM_Clustering(benchmark::State& state) {
    const auto g = ws_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(average_clustering(g));
}
BENCHMARK(BM_Clustering)->Arg(1000)->Arg(10000);

static void BM_PathLength(benchmark::State& state) {
    const auto g = ws_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(average_path_length_normalized(g));
}
BENCHMARK(BM_PathLength)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_Eigenvector(benchmark::State& state) {
    const auto g = ws_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(max_eigenvector_centrality(g));
}
BENCHMARK(BM_Eigenvector)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_FeatureVector(benchmark::State& state) {
    const auto g = ws_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(feature_vector(g));
}
BENCHMARK(BM_FeatureVector)->Arg(1000)->Unit(benchmark::kMillisecond);
