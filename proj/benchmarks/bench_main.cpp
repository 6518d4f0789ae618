// Copyright 2026 The tilequbo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.
//
// Microbenchmarks for the hot paths: catalog enumeration, model
// construction, energy evaluation, incremental flip deltas, the heuristic
// solvers, and exact enumeration. Everything runs on the default 5x8
// two-of-each instance unless stated otherwise.

#include <benchmark/benchmark.h>

#include <random>

#include <tilequbo/catalog.hpp>
#include <tilequbo/decompose.hpp>
#include <tilequbo/exact_cover.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/ising.hpp>
#include <tilequbo/qubo.hpp>
#include <tilequbo/solvers.hpp>

namespace {

using namespace tilequbo;

const PlacementCatalog& default_catalog() {
    static PlacementCatalog catalog = enumerate_placements(default_instance());
    return catalog;
}

const Qubo& default_model() {
    static Qubo q = build_qubo(default_catalog(), {1.0, 1.0});
    return q;
}

Assignment random_bits(int n, std::mt19937_64& rng) {
    Assignment x(n, 0);
    for (auto& bit : x) bit = rng() & 1;
    return x;
}

void bm_enumerate_placements(benchmark::State& state) {
    auto instance = default_instance();
    for (auto _ : state) {
        auto catalog = enumerate_placements(instance);
        benchmark::DoNotOptimize(catalog);
    }
}
BENCHMARK(bm_enumerate_placements);

void bm_build_qubo(benchmark::State& state) {
    const auto& catalog = default_catalog();
    for (auto _ : state) {
        Qubo q = build_qubo(catalog, {1.0, 1.0});
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(bm_build_qubo);

void bm_energy_full(benchmark::State& state) {
    const Qubo& q = default_model();
    std::mt19937_64 rng(7);
    Assignment x = random_bits(q.num_variables(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q.energy(x));
    }
}
BENCHMARK(bm_energy_full);

// One full sweep of single-bit flip deltas plus an applied flip, the inner
// loop both heuristics spend their time in.
void bm_flip_delta_sweep(benchmark::State& state) {
    const Qubo& q = default_model();
    std::mt19937_64 rng(11);
    FlipEvaluator ev(q, random_bits(q.num_variables(), rng));
    int next = 0;
    for (auto _ : state) {
        double sum = 0.0;
        for (int i = 0; i < q.num_variables(); ++i) sum += ev.flip_delta(i);
        benchmark::DoNotOptimize(sum);
        ev.flip(next);
        next = (next + 1) % q.num_variables();
    }
    state.SetItemsProcessed(state.iterations() * q.num_variables());
}
BENCHMARK(bm_flip_delta_sweep);

void bm_simulated_annealing(benchmark::State& state) {
    const Qubo& q = default_model();
    SolverConfig cfg;
    cfg.sa_sweeps = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto result = simulated_annealing(q, cfg, seed++);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * cfg.sa_sweeps *
                            q.num_variables());
}
BENCHMARK(bm_simulated_annealing)->Arg(100)->Unit(benchmark::kMillisecond);

void bm_tabu_search(benchmark::State& state) {
    const Qubo& q = default_model();
    SolverConfig cfg;
    cfg.tabu_max_iterations = state.range(0);
    cfg.stall_limit = state.range(0);  // run the full budget
    Assignment start(q.num_variables(), 0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto result = tabu_search(q, cfg, start, seed++);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_tabu_search)->Arg(1000)->Unit(benchmark::kMillisecond);

void bm_decompose_rounds(benchmark::State& state) {
    const Qubo& q = default_model();
    DecomposeConfig dc;
    dc.sub_size = 50;
    dc.max_rounds = static_cast<int>(state.range(0));
    dc.stall_rounds = dc.max_rounds;  // measure a fixed round count
    SolverConfig sc;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto result = solve_decomposed(q, dc, sc, seed++);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_decompose_rounds)->Arg(50)->Unit(benchmark::kMillisecond);

void bm_enumerate_exact(benchmark::State& state) {
    CoverProblem cover = build_cover_problem(default_catalog());
    for (auto _ : state) {
        auto solutions = enumerate_exact(cover);
        benchmark::DoNotOptimize(solutions);
    }
    state.SetLabel("3106 solutions");
}
BENCHMARK(bm_enumerate_exact)->Unit(benchmark::kMillisecond);

void bm_to_ising(benchmark::State& state) {
    const Qubo& q = default_model();
    for (auto _ : state) {
        IsingModel m = to_ising(q);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(bm_to_ising);

}  // namespace

BENCHMARK_MAIN();
