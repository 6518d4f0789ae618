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
#include <optional>
#include <random>
#include <vector>

#include "tilequbo/qubo.hpp"

namespace tilequbo {

/// All randomness is drawn from std::mt19937_64, whose output sequence is
/// fixed by the standard, through the two helpers below instead of the
/// standard distributions (whose output is implementation defined). Results
/// therefore reproduce bit for bit across platforms for a given seed.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// Shared knobs for the heuristic solvers. Fields left unset are derived
/// from the problem: the initial temperature defaults to 10x the largest
/// absolute coefficient, the tabu tenure to min(20, n/4), and the stall
/// limit to 50n iterations.
struct SolverConfig {
    int sa_sweeps = 1000;
    std::optional<double> sa_temp_initial;  // > 0 when set
    double sa_temp_final = 0.1;
    std::optional<int> tabu_tenure;         // >= 0 when set
    std::int64_t tabu_max_iterations = 1'000'000;
    std::optional<std::int64_t> stall_limit;
    std::optional<double> target_energy;    // early exit at or below

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// (step, best energy) checkpoint recorded at every improvement.
struct TracePoint {
    std::int64_t step = 0;
    double best_energy = 0.0;
};

struct SolveResult {
    Assignment best_assignment;
    double best_energy = 0.0;  // always a fresh Qubo::energy evaluation
    std::int64_t iterations = 0;
    std::int64_t subproblem_solves = 0;  // 0 for monolithic solvers
    std::uint64_t seed = 0;
    bool reached_target = false;
    std::vector<TracePoint> trace;
};

/// Adjacency view of a Qubo plus an incrementally maintained assignment.
/// Flip deltas are O(1) from cached per-variable activations; applying a
/// flip updates neighbours in O(degree).
class FlipEvaluator {
  public:
    FlipEvaluator(const Qubo& q, Assignment start);

    double energy() const { return energy_; }
    const Assignment& assignment() const { return x_; }

    /// Energy change if bit i were flipped.
    double flip_delta(int i) const {
        return (x_[i] ? -1.0 : 1.0) * (qubo_->linear()[i] + activation_[i]);
    }

    void flip(int i);

  private:
    const Qubo* qubo_;
    std::vector<std::vector<std::pair<std::int32_t, double>>> adjacency_;
    std::vector<double> activation_;  // sum over neighbours j of w_ij x_j
    Assignment x_;
    double energy_;
};

/// Exhaustive scan of all 2^n assignments via a Gray-code walk. Returns the
/// minimum energy and every minimizer (within 1e-9 of the minimum) in
/// ascending bit-pattern order, least significant bit = variable 0. Refuses
/// n > 25.
std::pair<double, std::vector<Assignment>> brute_force(const Qubo& q);

/// Single-bit-flip Metropolis sweeps over a geometric temperature ladder
/// from a random start. One sweep attempts one flip per variable in index
/// order. Deterministic given (q, cfg, seed).
SolveResult simulated_annealing(const Qubo& q, const SolverConfig& cfg,
                                std::uint64_t seed);

/// Steepest-descent single-bit flips with a recency tabu list and
/// aspiration (a tabu move is admitted when it improves the global best).
/// Equal-delta moves break ties toward the lowest variable index. Stops
/// after the stall limit passes without improvement, at the iteration cap,
/// or at the target energy. Deterministic given (q, cfg, start).
SolveResult tabu_search(const Qubo& q, const SolverConfig& cfg,
                        const Assignment& start, std::uint64_t seed);

/// Uniformly random assignment; the common random-start helper.
Assignment random_assignment(int n, Rng& rng);

}  // namespace tilequbo
