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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <tilequbo/catalog.hpp>
#include <tilequbo/decompose.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/qubo.hpp>
#include <tilequbo/solvers.hpp>

namespace tilequbo::harness {

enum class Method { sa, tabu, decompose, exact };

/// One seeded solver invocation. Monolithic methods start from the all-zero
/// assignment so that runs are reproducible from the seed alone.
SolveResult run_method(const Qubo& q, Method method, const DecomposeConfig& dc,
                       const SolverConfig& sc, std::uint64_t seed,
                       std::vector<RoundTrace>* trace = nullptr);

struct RunRecord {
    std::uint64_t seed = 0;
    double energy = 0.0;
    bool valid = false;
    int defect_cells = 0;
    std::int64_t subproblem_solves = 0;
    std::vector<int> chosen;  // selected placement indices, ascending
};

struct ExperimentStats {
    int runs = 0;
    int valid_count = 0;
    int invalid_count = 0;
    std::map<double, int> energy_histogram;
    std::map<int, int> defect_histogram;  // overlap + gap cells per run
    int distinct_valid_solutions = 0;
    /// Mean subproblem-solve count over runs that reached energy 0, or over
    /// all runs when none did. Zero for monolithic methods.
    double mean_subproblem_solves = 0.0;
};

struct ExperimentResult {
    ExperimentStats stats;
    std::vector<RunRecord> records;  // ordered by seed offset
};

/// Executes `runs` independent solves with seeds base_seed..base_seed+runs-1,
/// up to `jobs` of them concurrently. Validity is recomputed from the decoded
/// tiling, not taken from the solver's energy. Aggregation is deterministic:
/// records are ordered by seed offset regardless of completion order.
ExperimentResult run_experiment(const Qubo& q, const PlacementCatalog& catalog,
                                const PuzzleInstance& instance, Method method,
                                const DecomposeConfig& dc, const SolverConfig& sc,
                                std::uint64_t base_seed, int runs, int jobs);

std::string format_stats(const ExperimentStats& stats);

}  // namespace tilequbo::harness
