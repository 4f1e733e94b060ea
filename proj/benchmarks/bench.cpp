#include <benchmark/benchmark.h>

#include <random>

#include "spk/generator.hpp"
#include "spk/profiler.hpp"

namespace {

spk::SpkGrammar sp2() {
    return spk::parse_grammar("alphabet: abcd\nk: 2\nforbidden: ab\n");
}

void BM_compile(benchmark::State& state) {
    auto g = spk::parse_grammar("alphabet: abcd\nk: 2\nforbidden: ab,bc,cd,dc\n");
    for (auto _ : state) {
        benchmark::DoNotOptimize(spk::PiecewiseDfa::compile(g));
    }
}
BENCHMARK(BM_compile);

void BM_count_table(benchmark::State& state) {
    auto dfa = spk::PiecewiseDfa::compile(sp2());
    for (auto _ : state) {
        spk::LengthCountTable table(dfa, state.range(0));
        benchmark::DoNotOptimize(table.count_valid(state.range(0)));
    }
}
BENCHMARK(BM_count_table)->Arg(100)->Arg(500);

void BM_sample(benchmark::State& state) {
    auto dfa = spk::PiecewiseDfa::compile(sp2());
    spk::LengthCountTable table(dfa, state.range(0));
    std::uint64_t i = 0;
    for (auto _ : state) {
        spk::RngStream rng(1, i++);
        benchmark::DoNotOptimize(table.sample_uniform(state.range(0), rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample)->Arg(100)->Arg(500);

void BM_generate_dataset(benchmark::State& state) {
    auto g = sp2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spk::generate_dataset(g, spk::LengthPlan{60, 100, 500}, 7));
    }
}
BENCHMARK(BM_generate_dataset);

void BM_mi_at_distance(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::vector<std::uint8_t> data(state.range(0));
    for (auto& b : data) b = static_cast<std::uint8_t>(rng() % 4);
    auto corpus = spk::ProfiledCorpus::from_ids(std::move(data), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spk::mi_at_distance(corpus, 50, spk::Estimator::Grassberger));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_mi_at_distance)->Arg(1 << 20)->Arg(1 << 23);

}  // namespace

BENCHMARK_MAIN();
