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

#include "tilequbo/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace tilequbo {

void DecomposeConfig::validate() const {
    if (sub_size < 1) {
        throw std::invalid_argument("decompose: sub_size must be positive");
    }
    if (max_rounds < 1) {
        throw std::invalid_argument("decompose: max_rounds must be positive");
    }
    if (stall_rounds < 1) {
        throw std::invalid_argument("decompose: stall_rounds must be positive");
    }
    if (subsolver == Subsolver::brute_force && sub_size > 25) {
        throw std::invalid_argument(
            "decompose: brute-force subsolver requires sub_size <= 25, got " +
            std::to_string(sub_size));
    }
}

SubProblem clamp(const Qubo& q, const Assignment& incumbent,
                 std::vector<int> subset) {
    const int n = q.num_variables();
    if (static_cast<int>(incumbent.size()) != n) {
        throw std::invalid_argument("clamp: incumbent length mismatch");
    }
    std::sort(subset.begin(), subset.end());
    std::vector<int> local(n, -1);
    for (std::size_t k = 0; k < subset.size(); ++k) {
        int v = subset[k];
        if (v < 0 || v >= n) {
            throw std::invalid_argument("clamp: variable index out of range");
        }
        if (local[v] >= 0) {
            throw std::invalid_argument("clamp: duplicate variable in subset");
        }
        local[v] = static_cast<int>(k);
    }

    const int m = static_cast<int>(subset.size());
    std::vector<double> linear(m, 0.0);
    double offset = q.offset();
    for (int i = 0; i < n; ++i) {
        if (local[i] >= 0) {
            linear[local[i]] += q.linear()[i];
        } else if (incumbent[i]) {
            offset += q.linear()[i];
        }
    }

    std::vector<QuadTerm> quadratic;
    for (const QuadTerm& t : q.quadratic()) {
        const int li = local[t.i];
        const int lj = local[t.j];
        if (li >= 0 && lj >= 0) {
            quadratic.push_back({li, lj, t.value});
        } else if (li >= 0) {
            if (incumbent[t.j]) linear[li] += t.value;
        } else if (lj >= 0) {
            if (incumbent[t.i]) linear[lj] += t.value;
        } else if (incumbent[t.i] && incumbent[t.j]) {
            offset += t.value;
        }
    }

    return {std::move(subset), Qubo(m, std::move(linear), std::move(quadratic), offset)};
}

std::vector<int> select_subproblem(const Qubo& q, const Assignment& incumbent,
                                   int size, Rng& rng, int perturbation) {
    const int n = q.num_variables();
    if (size < 1) {
        throw std::invalid_argument("select_subproblem: size must be positive");
    }
    if (perturbation < 0) {
        throw std::invalid_argument("select_subproblem: bad perturbation");
    }
    size = std::min(size, n);

    FlipEvaluator ev(q, incumbent);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> impact(n);
    for (int i = 0; i < n; ++i) impact[i] = std::abs(ev.flip_delta(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (impact[a] != impact[b]) return impact[a] > impact[b];
        return a < b;
    });
    // Equal-impact runs are ordered by index above, then shuffled so that
    // ties do not freeze the selection into index order (flat incumbents,
    // like the all-zero start, tie everywhere).
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo + 1;
        while (hi < order.size() && impact[order[hi]] == impact[order[lo]]) ++hi;
        for (std::size_t k = hi - lo; k > 1; --k) {
            std::size_t at = static_cast<std::size_t>(uniform_below(rng, k));
            std::swap(order[lo + at], order[lo + k - 1]);
        }
        lo = hi;
    }

    // Unperturbed rounds take the highest-impact variables outright.
    // Stalled rounds alternate, by coin flip, between two complementary
    // reshapings of the selection:
    //  - a jump to a random chunk of the ranking, which re-optimizes
    //    coherent same-impact strata and drives the incumbent downhill
    //    while far from a minimum;
    //  - the top quarter plus uniform random fills, which near a minimum
    //    pairs the set bits (removals always cost energy, so they rank on
    //    top) with fresh destination candidates, the mix that lets the
    //    subsolver rearrange placed pieces out of a trap.
    if (perturbation == 0 || n <= size) {
        return {order.begin(), order.begin() + size};
    }

    if (uniform_below(rng, 2) == 0) {
        const std::uint64_t chunks =
            (static_cast<std::uint64_t>(n) + size - 1) / size;
        std::size_t begin =
            static_cast<std::size_t>(uniform_below(rng, chunks)) * size;
        begin = std::min(begin, static_cast<std::size_t>(n - size));
        return {order.begin() + begin, order.begin() + begin + size};
    }

    // Escaper mode: set bits outrank equal-impact unset variables so that
    // every placed piece is movable inside the block, and the fills are
    // biased toward unset variables with low signed delta. Those are the
    // least-conflicting candidates under the incumbent, which is where the
    // destinations of a repairing rearrangement live.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return incumbent[a] > incumbent[b];
    });
    const std::size_t keep =
        static_cast<std::size_t>(std::max(size / 4, 1));
    std::vector<int> chosen(order.begin(), order.begin() + keep);
    std::vector<int> pool(order.begin() + keep, order.end());
    std::sort(pool.begin(), pool.end(), [&](int a, int b) {
        const double da = ev.flip_delta(a);
        const double db = ev.flip_delta(b);
        if (da != db) return da < db;
        return a < b;
    });
    for (int need = size - static_cast<int>(keep); need > 0; --need) {
        const double u = uniform_double(rng);
        std::size_t at = static_cast<std::size_t>(
            u * u * static_cast<double>(pool.size()));
        at = std::min(at, pool.size() - 1);
        chosen.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    return chosen;
}

namespace {

SolveResult solve_subproblem(const Qubo& reduced, const Assignment& warm_start,
                             const DecomposeConfig& cfg,
                             const SolverConfig& solver_cfg,
                             std::uint64_t sub_seed) {
    switch (cfg.subsolver) {
        case Subsolver::tabu:
            return tabu_search(reduced, solver_cfg, warm_start, sub_seed);
        case Subsolver::simulated_annealing:
            return simulated_annealing(reduced, solver_cfg, sub_seed);
        case Subsolver::brute_force: {
            auto [energy, argmins] = brute_force(reduced);
            SolveResult r;
            r.best_assignment = argmins.front();
            r.best_energy = energy;
            r.iterations = std::int64_t{1} << reduced.num_variables();
            r.seed = sub_seed;
            return r;
        }
    }
    throw std::logic_error("decompose: unknown subsolver");
}

}  // namespace

SolveResult solve_decomposed(const Qubo& q, const DecomposeConfig& cfg,
                             const SolverConfig& solver_cfg, std::uint64_t seed,
                             std::vector<RoundTrace>* trace) {
    cfg.validate();
    solver_cfg.validate();
    const int n = q.num_variables();
    Rng rng(seed);

    // The penalty models built here are non-negative with zero certifying a
    // valid tiling, so zero is the natural default stopping energy. Callers
    // minimizing a general QUBO should set an explicit target.
    const double target = solver_cfg.target_energy.value_or(0.0);
    SolverConfig sub_cfg = solver_cfg;
    if (!sub_cfg.target_energy) sub_cfg.target_energy = target;

    SolveResult result;
    result.seed = seed;
    if (trace) trace->clear();
    if (n == 0) {
        result.best_energy = q.offset();
        result.reached_target = result.best_energy <= target;
        return result;
    }

    Assignment incumbent = cfg.random_start ? random_assignment(n, rng)
                                            : Assignment(n, 0);
    result.best_energy = q.energy(incumbent);
    result.best_assignment = incumbent;
    result.trace.push_back({0, result.best_energy});
    if (result.best_energy <= target) {
        result.reached_target = true;
        return result;
    }

    const int sub_size = std::min(cfg.sub_size, n);
    int stall = 0;
    for (int round = 1; round <= cfg.max_rounds; ++round) {
        std::vector<int> subset =
            select_subproblem(q, incumbent, sub_size, rng, stall);
        SubProblem sub = clamp(q, incumbent, std::move(subset));

        Assignment warm_start(sub.variables.size());
        for (std::size_t k = 0; k < sub.variables.size(); ++k) {
            warm_start[k] = incumbent[sub.variables[k]];
        }
        const std::uint64_t sub_seed = rng();
        SolveResult sub_result =
            solve_subproblem(sub.reduced, warm_start, cfg, sub_cfg, sub_seed);
        ++result.subproblem_solves;
        result.iterations = round;

        Assignment candidate = incumbent;
        for (std::size_t k = 0; k < sub.variables.size(); ++k) {
            candidate[sub.variables[k]] = sub_result.best_assignment[k];
        }
        const double before = result.best_energy;
        const double after = q.energy(candidate);
        const bool accepted = after < before;
        if (accepted) {
            incumbent = std::move(candidate);
            result.best_assignment = incumbent;
            result.best_energy = after;
            result.trace.push_back({round, after});
            stall = 0;
        } else {
            ++stall;
        }
        if (trace) {
            trace->push_back({round, static_cast<int>(sub.variables.size()),
                              before, accepted ? after : before, accepted,
                              result.subproblem_solves});
        }
        if (result.best_energy <= target) {
            result.reached_target = true;
            break;
        }
        if (stall >= cfg.stall_rounds) break;
    }
    return result;
}

}  // namespace tilequbo
