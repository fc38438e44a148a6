#include <benchmark/benchmark.h>

#include <random>

#include "netfit/classify.hpp"

using namespace netfit;

namespace {

LabeledDataset random_dataset(std::size_t rows) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> noise;
    LabeledDataset d;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t label = i % 6;
        std::vector<double> x(6);
        for (std::size_t f = 0; f < 6; ++f) x[f] = noise(rng) + (f == label ? 1.5 : 0.0);
        d.features.push_back(std::move(x));
        d.labels.push_back(label);
    }
    for (int c = 0; c < 6; ++c) d.class_names.push_back("c" + std::to_string(c));
    for (auto name : kClassificationFeatures) d.feature_names.emplace_back(name);
    return d;
}

}  // namespace

static void BM_TrainTree(benchmark::State& state) {
    const auto d = random_dataset(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(train_tree(d));
}
BENCHMARK(BM_TrainTree)->Arg(200)->Arg(2000);

static void BM_TrainForest(benchmark::State& state) {
    const auto d = random_dataset(static_cast<std::size_t>(state.range(0)));
    ForestConfig config;
    config.jobs = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(train_forest(d, config));
}
BENCHMARK(BM_TrainForest)->Args({200, 1})->Args({200, 4})->Args({2000, 4})->Unit(benchmark::kMillisecond);
