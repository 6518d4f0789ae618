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

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include <tilequbo/tiling.hpp>

namespace tilequbo::harness {

SolveResult run_method(const Qubo& q, Method method, const DecomposeConfig& dc,
                       const SolverConfig& sc, std::uint64_t seed,
                       std::vector<RoundTrace>* trace) {
    switch (method) {
        case Method::sa:
            return simulated_annealing(q, sc, seed);
        case Method::tabu:
            return tabu_search(q, sc, Assignment(q.num_variables(), 0), seed);
        case Method::decompose:
            return solve_decomposed(q, dc, sc, seed, trace);
        case Method::exact:
            break;  // handled by the exact-cover path in the CLI
    }
    throw std::invalid_argument("method has no sampling solver");
}

ExperimentResult run_experiment(const Qubo& q, const PlacementCatalog& catalog,
                                const PuzzleInstance& instance, Method method,
                                const DecomposeConfig& dc, const SolverConfig& sc,
                                std::uint64_t base_seed, int runs, int jobs) {
    ExperimentResult result;
    result.records.resize(static_cast<std::size_t>(runs));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int at = next.fetch_add(1);
            if (at >= runs) return;
            std::uint64_t seed = base_seed + static_cast<std::uint64_t>(at);
            SolveResult solve = run_method(q, method, dc, sc, seed);
            Tiling tiling = decode(solve.best_assignment, catalog);
            ValidationReport report = validate(tiling, instance);

            RunRecord& rec = result.records[static_cast<std::size_t>(at)];
            rec.seed = seed;
            rec.energy = solve.best_energy;
            rec.valid = report.is_valid;
            rec.defect_cells = report.defect_cells();
            rec.subproblem_solves = solve.subproblem_solves;
            rec.chosen.reserve(tiling.chosen.size());
            for (const auto& pl : tiling.chosen) rec.chosen.push_back(pl.index);
            std::sort(rec.chosen.begin(), rec.chosen.end());
        }
    };

    int workers = std::clamp(jobs, 1, runs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentStats& stats = result.stats;
    stats.runs = runs;
    std::set<std::vector<int>> distinct;
    std::int64_t converged_solves = 0;
    std::int64_t total_solves = 0;
    for (const auto& rec : result.records) {
        stats.valid_count += rec.valid ? 1 : 0;
        stats.energy_histogram[rec.energy] += 1;
        stats.defect_histogram[rec.defect_cells] += 1;
        total_solves += rec.subproblem_solves;
        if (rec.valid) {
            distinct.insert(rec.chosen);
            converged_solves += rec.subproblem_solves;
        }
    }
    stats.invalid_count = stats.runs - stats.valid_count;
    stats.distinct_valid_solutions = static_cast<int>(distinct.size());
    if (stats.valid_count > 0) {
        stats.mean_subproblem_solves =
            static_cast<double>(converged_solves) / stats.valid_count;
    } else if (stats.runs > 0) {
        stats.mean_subproblem_solves =
            static_cast<double>(total_solves) / stats.runs;
    }
    return result;
}

std::string format_stats(const ExperimentStats& stats) {
    std::ostringstream out;
    out << "runs " << stats.runs << "\n";
    out << "valid " << stats.valid_count << "\n";
    out << "invalid " << stats.invalid_count << "\n";
    out << "distinct_valid_solutions " << stats.distinct_valid_solutions << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", stats.mean_subproblem_solves);
    out << "mean_subproblem_solves " << buf << "\n";
    for (const auto& [energy, count] : stats.energy_histogram) {
        out << "energy " << energy << " count " << count << "\n";
    }
    for (const auto& [defects, count] : stats.defect_histogram) {
        out << "defects " << defects << " count " << count << "\n";
    }
    return out.str();
}

}  // namespace tilequbo::harness
