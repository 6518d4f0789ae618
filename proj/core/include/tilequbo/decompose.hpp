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
#include <vector>

#include "tilequbo/qubo.hpp"
#include "tilequbo/solvers.hpp"

namespace tilequbo {

enum class Subsolver { tabu, simulated_annealing, brute_force };

/// Driver configuration. The brute-force subsolver is only valid with
/// sub_size <= 25.
struct DecomposeConfig {
    int sub_size = 50;
    int max_rounds = 1000;
    int stall_rounds = 3;  // consecutive non-improving rounds before stopping
    Subsolver subsolver = Subsolver::tabu;
    bool random_start = false;  // default incumbent is all zeros

    /// Throws std::invalid_argument on out-of-range values or a brute-force
    /// subsolver with sub_size > 25.
    void validate() const;
};

/// A variable subset together with the QUBO over it obtained by clamping
/// every other variable to the incumbent assignment. The reduced model
/// satisfies energy(reduced, y) == energy(q, merge(incumbent, variables, y))
/// for every sub-assignment y.
struct SubProblem {
    std::vector<int> variables;  // global indices, ascending
    Qubo reduced;
};

/// One driver round, as emitted for run traces.
struct RoundTrace {
    int round = 0;
    int subset_size = 0;
    double energy_before = 0.0;
    double energy_after = 0.0;
    bool accepted = false;
    std::int64_t subproblem_solves = 0;  // cumulative
};

/// Folds clamped variables into the subset model: couplers between a subset
/// variable and a clamped-1 variable join the subset variable's linear term,
/// clamped-clamped and clamped linear contributions join the offset.
SubProblem clamp(const Qubo& q, const Assignment& incumbent,
                 std::vector<int> subset);

/// Ranks variables by flip impact |delta energy when bit i is flipped| under
/// the incumbent and returns the top `size` (at most n), ties toward the
/// lower index. A positive perturbation level, used by the driver after
/// non-improving rounds, moves the selection window to an rng-chosen chunk
/// of the ranking and swaps up to `perturbation` members for uniform random
/// outsiders.
std::vector<int> select_subproblem(const Qubo& q, const Assignment& incumbent,
                                   int size, Rng& rng, int perturbation = 0);

/// qbsolv-style loop: select a bounded subset, clamp, solve the subproblem,
/// merge when the full energy strictly improves. Each round is one
/// subproblem solve; non-improving rounds escalate a random perturbation of
/// the selection. Stops at the target energy (default 0, the optimality
/// certificate for the penalty models built here), after stall_rounds
/// consecutive non-improving rounds, or at max_rounds. Deterministic given
/// (q, cfg, solver_cfg, seed).
SolveResult solve_decomposed(const Qubo& q, const DecomposeConfig& cfg,
                             const SolverConfig& solver_cfg, std::uint64_t seed,
                             std::vector<RoundTrace>* trace = nullptr);

}  // namespace tilequbo
