// Micro-benchmarks for the hot paths: seed mutation, G/C products, polytope
// mutation and fan refinement.

#include "clusterkit/compat.hpp"
#include "clusterkit/duality.hpp"
#include "clusterkit/fan.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/seed.hpp"

#include <benchmark/benchmark.h>

using namespace ck;

namespace {

ZMat mat(std::vector<std::vector<long>> rows) {
    ZMat m;
    for (auto& r : rows) {
        ZVec v;
        for (long e : r) v.emplace_back(e);
        m.push_back(std::move(v));
    }
    return m;
}

ExchangeMatrix a3() { return ExchangeMatrix(mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})); }
ExchangeMatrix b2() { return ExchangeMatrix(mat({{0, 2}, {-1, 0}})); }
ExchangeMatrix r3() { return ExchangeMatrix(mat({{0, 2, -4}, {-2, 0, 2}, {4, -2, 0}})); }

void bm_matrix_mutation(benchmark::State& state) {
    ExchangeMatrix B = r3();
    std::vector<int> path = {1, 2, 0, 1, 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(mutate_along(B, path));
}
BENCHMARK(bm_matrix_mutation);

void bm_seed_walk(benchmark::State& state) {
    ExchangeMatrix B = a3();
    std::vector<int> path = {0, 1, 2, 0, 1, 2};
    for (auto _ : state) {
        Pattern pat(B); // fresh cache each iteration
        benchmark::DoNotOptimize(pat.state_at(path));
    }
}
BENCHMARK(bm_seed_walk);

void bm_gc_products(benchmark::State& state) {
    ExchangeMatrix B = r3();
    std::vector<int> path = {1, 2, 0, 1, 2, 0, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(gc_along(B, path));
}
BENCHMARK(bm_gc_products);

void bm_enumerate_a3(benchmark::State& state) {
    ExchangeMatrix B = a3();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_seeds(B, 32, true));
}
BENCHMARK(bm_enumerate_a3);

void bm_polytope_mutation(benchmark::State& state) {
    ExchangeMatrix B = b2();
    SeedState s0 = initial_seed(B);
    LaurentPoly prod = exchange_binomial(s0, 0) * exchange_binomial(s0, 1);
    WeightedPolytope N = newton(prod, B);
    DegreeVector h = grade(prod, B);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_polytope_geometric(N, h, 0, B));
}
BENCHMARK(bm_polytope_mutation);

void bm_tracked_cube_step(benchmark::State& state) {
    ExchangeMatrix B = a3();
    TrackedCube tc = cube(B);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_tracked(tc, 0));
}
BENCHMARK(bm_tracked_cube_step);

void bm_ng_fan_a2(benchmark::State& state) {
    ExchangeMatrix B(mat({{0, 1}, {-1, 0}}));
    for (auto _ : state) benchmark::DoNotOptimize(ng_fan(B, 16, true));
}
BENCHMARK(bm_ng_fan_a2);

} // namespace

BENCHMARK_MAIN();
