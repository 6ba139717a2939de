#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tsum/generators.hpp"
#include "tsum/staircase_codec.hpp"
#include "tsum/table_codec.hpp"

namespace {

constexpr std::uint64_t kMagnitude = 1'000'000;

tsum::Instance instance_of(std::int64_t n) {
    return tsum::gen_random(static_cast<std::size_t>(n), 1, kMagnitude);
}

std::vector<std::size_t> query_pool(std::size_t n, std::size_t count) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dist(1, n);
    std::vector<std::size_t> pool(3 * count);
    for (auto& v : pool) v = dist(rng);
    return pool;
}

void BM_BuildPairwise(benchmark::State& state) {
    auto inst = instance_of(state.range(0));
    for (auto _ : state) {
        auto enc = tsum::PairwiseEncoding::build(inst);
        benchmark::DoNotOptimize(enc.payload_bits());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPairwise)->RangeMultiplier(4)->Range(64, 2048)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_BuildStaircase(benchmark::State& state) {
    auto inst = instance_of(state.range(0));
    for (auto _ : state) {
        auto enc = tsum::StaircaseEncoding::build(inst);
        benchmark::DoNotOptimize(enc.payload_bits());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildStaircase)->RangeMultiplier(4)->Range(64, 2048)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_QueryPairwise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto enc = tsum::PairwiseEncoding::build(instance_of(state.range(0)));
    auto pool = query_pool(n, 4096);
    std::size_t at = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enc.query(pool[at], pool[at + 1], pool[at + 2]));
        at = (at + 3) % pool.size();
    }
}
BENCHMARK(BM_QueryPairwise)->RangeMultiplier(8)->Range(64, 4096);

void BM_QueryStaircase(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto enc = tsum::StaircaseEncoding::build(instance_of(state.range(0)));
    auto pool = query_pool(n, 4096);
    std::size_t at = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enc.query(pool[at], pool[at + 1], pool[at + 2]));
        at = (at + 3) % pool.size();
    }
}
BENCHMARK(BM_QueryStaircase)->RangeMultiplier(8)->Range(64, 4096);

} // namespace

BENCHMARK_MAIN();
