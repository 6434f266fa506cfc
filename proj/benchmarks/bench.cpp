#include <benchmark/benchmark.h>

#include "mediankit/algebra.hpp"
#include "mediankit/conservative.hpp"
#include "mediankit/duality.hpp"
#include "mediankit/homs.hpp"

namespace {

using namespace mediankit;

void bm_axiom_check(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto algebra = chain_algebra(n);
    for (auto _ : state) {
        auto bad = MedianAlgebra::check_axioms(n, algebra.table());
        benchmark::DoNotOptimize(bad);
    }
}
BENCHMARK(bm_axiom_check)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void bm_chain_ordering(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto algebra = chain_algebra(n);
    for (auto _ : state) {
        auto rep = chain_ordering(algebra);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bm_chain_ordering)->Arg(5)->Arg(9);

void bm_dual_space(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto algebra = chain_algebra(n);
    for (auto _ : state) {
        auto dual = dual_space(algebra);
        benchmark::DoNotOptimize(dual);
    }
}
BENCHMARK(bm_dual_space)->Arg(4)->Arg(6)->Arg(8);

void bm_enumerate_homs_brute(benchmark::State& state) {
    auto a = chain_algebra(4);
    auto b = chain_algebra(3);
    for (auto _ : state) {
        auto homs = enumerate_homs_brute(a, b);
        benchmark::DoNotOptimize(homs);
    }
}
BENCHMARK(bm_enumerate_homs_brute);

void bm_enumerate_product_homs(benchmark::State& state) {
    ProductOfChains a{{3, 2}};
    ProductOfChains b{{2, 2}};
    for (auto _ : state) {
        auto homs = enumerate_product_homs(a, b);
        benchmark::DoNotOptimize(homs);
    }
}
BENCHMARK(bm_enumerate_product_homs);

} // namespace
