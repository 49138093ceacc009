#include <benchmark/benchmark.h>

#include "angulator/mutation.hpp"
#include "angulator/pairs.hpp"

using namespace angulator;

namespace {

void BM_EnumerateDiagonals(benchmark::State& state) {
    auto params = make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto diagonals = enumerate_diagonals(params);
        benchmark::DoNotOptimize(diagonals);
    }
}
BENCHMARK(BM_EnumerateDiagonals)->Args({2, 2})->Args({5, 1})->Args({6, 1})->Args({3, 3});

void BM_NcClosure(benchmark::State& state) {
    NcCalculus calc(HomModel::type_a(make_params(static_cast<int>(state.range(0)), 1)));
    ObjectSet s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(calc.ncnc(s));
        s = (s + 0x9e3779b97f4a7c15ULL) & calc.universe();
    }
}
BENCHMARK(BM_NcClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_PairsBruteForce(benchmark::State& state) {
    NcCalculus calc(HomModel::type_a(make_params(static_cast<int>(state.range(0)), 1)));
    for (auto _ : state) {
        auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce);
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_PairsBruteForce)->Arg(4)->Arg(5);

void BM_PairsNextClosure(benchmark::State& state) {
    NcCalculus calc(HomModel::type_a(make_params(static_cast<int>(state.range(0)), 1)));
    for (auto _ : state) {
        auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_PairsNextClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_CharacterizationCheck(benchmark::State& state) {
    NcCalculus calc(HomModel::type_a(make_params(static_cast<int>(state.range(0)), 1)));
    for (auto _ : state) {
        auto report = calc.check_theorem_3_14();
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_CharacterizationCheck)->Arg(4)->Arg(5);

void BM_MutationCheck(benchmark::State& state) {
    NcCalculus calc(HomModel::type_a(make_params(static_cast<int>(state.range(0)), 1)));
    for (auto _ : state) {
        auto report = check_theorem_4_13(calc, true);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_MutationCheck)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
