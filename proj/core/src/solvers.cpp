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

#include "tilequbo/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tilequbo {

void SolverConfig::validate() const {
    if (sa_sweeps < 1) throw std::invalid_argument("sa_sweeps must be >= 1");
    if (sa_temp_final <= 0.0) throw std::invalid_argument("sa_temp_final must be positive");
    if (sa_temp_initial) {
        if (*sa_temp_initial <= 0.0) {
            throw std::invalid_argument("sa_temp_initial must be positive");
        }
        if (*sa_temp_initial < sa_temp_final) {
            throw std::invalid_argument("sa_temp_initial must be >= sa_temp_final");
        }
    }
    if (tabu_tenure && *tabu_tenure < 0) {
        throw std::invalid_argument("tabu_tenure must be >= 0");
    }
    if (tabu_max_iterations < 1) {
        throw std::invalid_argument("tabu_max_iterations must be >= 1");
    }
    if (stall_limit && *stall_limit < 1) {
        throw std::invalid_argument("stall_limit must be >= 1");
    }
}

FlipEvaluator::FlipEvaluator(const Qubo& q, Assignment start)
    : qubo_(&q), x_(std::move(start)) {
    if (static_cast<int>(x_.size()) != q.num_variables()) {
        throw std::invalid_argument("start assignment length does not match qubo");
    }
    adjacency_.resize(q.num_variables());
    for (const auto& t : q.quadratic()) {
        adjacency_[t.i].push_back({t.j, t.value});
        adjacency_[t.j].push_back({t.i, t.value});
    }
    activation_.assign(q.num_variables(), 0.0);
    for (int i = 0; i < q.num_variables(); ++i) {
        if (!x_[i]) continue;
        for (const auto& [j, w] : adjacency_[i]) activation_[j] += w;
    }
    energy_ = q.energy(x_);
}

void FlipEvaluator::flip(int i) {
    energy_ += flip_delta(i);
    x_[i] ^= 1;
    const double sign = x_[i] ? 1.0 : -1.0;
    for (const auto& [j, w] : adjacency_[i]) activation_[j] += sign * w;
}

std::pair<double, std::vector<Assignment>> brute_force(const Qubo& q) {
    constexpr int kMaxVariables = 25;
    const int n = q.num_variables();
    if (n > kMaxVariables) {
        throw std::invalid_argument("brute_force refuses n > " +
                                    std::to_string(kMaxVariables) + " variables (got " +
                                    std::to_string(n) + ")");
    }
    constexpr double kTol = 1e-9;

    // Gray-code walk: step k flips bit countr_zero(k), visiting all 2^n
    // patterns with one flip each. Incremental energies are only used to
    // prefilter; minima are confirmed with fresh full evaluations.
    const std::uint64_t total = 1ull << n;
    FlipEvaluator ev(q, Assignment(n, 0));

    double best = q.energy(ev.assignment());
    for (std::uint64_t k = 1; k < total; ++k) {
        ev.flip(std::countr_zero(k));
        if (ev.energy() < best + kTol) {
            best = std::min(best, q.energy(ev.assignment()));
        }
    }

    std::vector<std::uint64_t> patterns;
    FlipEvaluator ev2(q, Assignment(n, 0));
    std::uint64_t gray = 0;
    if (q.energy(ev2.assignment()) <= best + kTol) patterns.push_back(0);
    for (std::uint64_t k = 1; k < total; ++k) {
        ev2.flip(std::countr_zero(k));
        gray ^= 1ull << std::countr_zero(k);
        if (ev2.energy() <= best + 2 * kTol &&
            q.energy(ev2.assignment()) <= best + kTol) {
            patterns.push_back(gray);
        }
    }
    std::sort(patterns.begin(), patterns.end());

    std::vector<Assignment> argmins;
    argmins.reserve(patterns.size());
    for (std::uint64_t p : patterns) {
        Assignment x(n, 0);
        for (int i = 0; i < n; ++i) x[i] = (p >> i) & 1;
        argmins.push_back(std::move(x));
    }
    return {best, std::move(argmins)};
}

Assignment random_assignment(int n, Rng& rng) {
    Assignment x(n);
    for (auto& bit : x) bit = static_cast<std::uint8_t>(rng() & 1);
    return x;
}

namespace {

void record_best(SolveResult& result, const FlipEvaluator& ev, std::int64_t step) {
    result.best_assignment = ev.assignment();
    result.best_energy = ev.energy();
    result.trace.push_back({step, ev.energy()});
}

}  // namespace

SolveResult simulated_annealing(const Qubo& q, const SolverConfig& cfg,
                                std::uint64_t seed) {
    cfg.validate();
    const int n = q.num_variables();
    Rng rng(seed);

    SolveResult result;
    result.seed = seed;
    if (n == 0) {
        result.best_energy = q.offset();
        result.reached_target =
            cfg.target_energy && result.best_energy <= *cfg.target_energy;
        return result;
    }

    double temp_initial = cfg.sa_temp_initial.value_or(
        10.0 * std::max(q.max_abs_coefficient(), 1e-3));
    temp_initial = std::max(temp_initial, cfg.sa_temp_final);

    FlipEvaluator ev(q, random_assignment(n, rng));
    record_best(result, ev, 0);

    const int sweeps = cfg.sa_sweeps;
    const double decay = sweeps > 1
        ? std::pow(cfg.sa_temp_final / temp_initial, 1.0 / (sweeps - 1))
        : 1.0;

    double temperature = temp_initial;
    for (int sweep = 0; sweep < sweeps; ++sweep, temperature *= decay) {
        for (int i = 0; i < n; ++i) {
            const double delta = ev.flip_delta(i);
            ++result.iterations;
            if (delta <= 0.0 || uniform_double(rng) < std::exp(-delta / temperature)) {
                ev.flip(i);
                if (ev.energy() < result.best_energy) {
                    record_best(result, ev, result.iterations);
                    if (cfg.target_energy && result.best_energy <= *cfg.target_energy) {
                        result.best_energy = q.energy(result.best_assignment);
                        result.reached_target =
                            result.best_energy <= *cfg.target_energy;
                        return result;
                    }
                }
            }
        }
    }
    result.best_energy = q.energy(result.best_assignment);
    result.reached_target =
        cfg.target_energy && result.best_energy <= *cfg.target_energy;
    return result;
}

SolveResult tabu_search(const Qubo& q, const SolverConfig& cfg,
                        const Assignment& start, std::uint64_t seed) {
    cfg.validate();
    const int n = q.num_variables();

    SolveResult result;
    result.seed = seed;
    if (n == 0) {
        result.best_energy = q.offset();
        result.reached_target =
            cfg.target_energy && result.best_energy <= *cfg.target_energy;
        return result;
    }

    int tenure = cfg.tabu_tenure.value_or(std::min(20, n / 4));
    tenure = std::clamp(tenure, 0, n - 1);  // a non-tabu move must always exist
    const std::int64_t stall_limit = cfg.stall_limit.value_or(50ll * n);

    FlipEvaluator ev(q, start);
    record_best(result, ev, 0);
    if (cfg.target_energy && result.best_energy <= *cfg.target_energy) {
        result.reached_target = true;
        result.best_energy = q.energy(result.best_assignment);
        return result;
    }

    std::vector<std::int64_t> tabu_until(n, -1);
    std::int64_t last_improvement = 0;

    while (result.iterations < cfg.tabu_max_iterations &&
           result.iterations - last_improvement < stall_limit) {
        const std::int64_t iter = result.iterations;
        int move = -1;
        double move_delta = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double delta = ev.flip_delta(i);
            if (delta >= move_delta) continue;  // lowest index wins ties
            const bool tabu = tabu_until[i] > iter;
            if (tabu && !(ev.energy() + delta < result.best_energy)) continue;
            move = i;
            move_delta = delta;
        }
        if (move < 0) {
            // Everything tabu and nothing aspirates: take the move that
            // expires soonest.
            move = static_cast<int>(std::min_element(tabu_until.begin(), tabu_until.end()) -
                                    tabu_until.begin());
        }

        ev.flip(move);
        ++result.iterations;
        tabu_until[move] = result.iterations + tenure;

        if (ev.energy() < result.best_energy) {
            record_best(result, ev, result.iterations);
            last_improvement = result.iterations;
            if (cfg.target_energy && result.best_energy <= *cfg.target_energy) {
                result.reached_target = true;
                break;
            }
        }
    }

    result.best_energy = q.energy(result.best_assignment);
    result.reached_target =
        cfg.target_energy && result.best_energy <= *cfg.target_energy;
    return result;
}

}  // namespace tilequbo
