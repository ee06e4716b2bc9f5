#include <benchmark/benchmark.h>

#include <vector>

#include "gdet/group_determinant.hpp"
#include "gdet/numtheory.hpp"
#include "gdet/rng.hpp"
#include "gdet/sets.hpp"
#include "gdet/witness.hpp"

using gdet::CoeffVec16;
using gdet::Int;

namespace {

std::vector<CoeffVec16> sample_vectors(int bound, int count) {
    gdet::SplitMix64 rng(0xBE4C);
    std::vector<CoeffVec16> out(count);
    for (auto& a : out)
        for (auto& x : a) x = rng.next_in(-bound, bound);
    return out;
}

void BM_det_factorized(benchmark::State& state) {
    const auto vecs = sample_vectors(int(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdet::det_c4c2c2(vecs[i++ % vecs.size()]));
    }
}
BENCHMARK(BM_det_factorized)->Arg(9)->Arg(1000);

void BM_det_matrix(benchmark::State& state) {
    const auto vecs = sample_vectors(int(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdet::det_c4c2c2_matrix(vecs[i++ % vecs.size()]));
    }
}
BENCHMARK(BM_det_matrix)->Arg(9)->Arg(1000);

void BM_classify(benchmark::State& state) {
    const auto vecs = sample_vectors(3, 256);
    std::vector<Int> values;
    for (const auto& a : vecs) values.push_back(gdet::det_c4c2c2(a));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdet::classify_c4c2c2(values[i++ % values.size()]));
    }
}
BENCHMARK(BM_classify);

void BM_synthesize(benchmark::State& state) {
    gdet::SplitMix64 rng(0x5717);
    std::vector<Int> targets;
    for (int i = 0; i < 256; ++i) targets.push_back(16 * Int(rng.next_in(-100000, 100000)) + 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdet::synthesize(targets[i++ % targets.size()]).verified);
    }
}
BENCHMARK(BM_synthesize);

void BM_factor_64bit(benchmark::State& state) {
    gdet::SplitMix64 rng(0xFAC7);
    std::vector<Int> values;
    for (int i = 0; i < 64; ++i) values.push_back(Int(rng.next() | 1));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdet::factor(values[i++ % values.size()]).sign);
    }
}
BENCHMARK(BM_factor_64bit);

}  // namespace

BENCHMARK_MAIN();
