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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <tilequbo/catalog.hpp>
#include <tilequbo/exact_cover.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/qubo.hpp>
#include <tilequbo/solvers.hpp>
#include <tilequbo/tiling.hpp>

using namespace tilequbo;

TEST_CASE("cover problem structure") {
    auto catalog = enumerate_placements(default_instance());
    CoverProblem p = build_cover_problem(catalog);
    CHECK(p.num_cell_columns == 40);
    CHECK(p.num_shape_columns == 5);
    REQUIRE(p.rows.size() == 429);
    for (int col = 0; col < p.num_cell_columns; ++col) {
        CHECK(p.multiplicity[col] == 1);
    }
    for (int s = 0; s < 5; ++s) {
        CHECK(p.multiplicity[p.num_cell_columns + s] == 2);
    }
    // Each row links its four cells plus one shape column.
    for (const auto& row : p.rows) {
        CHECK(row.size() == 5);
        CHECK(std::is_sorted(row.begin(), row.end()));
    }

    auto tiny = build_cover_problem(
        enumerate_placements(make_instance("2x2", "O:1")));
    CHECK(tiny.num_cell_columns == 4);
    CHECK(tiny.num_shape_columns == 1);
    CHECK(tiny.rows.size() == 1);
}

TEST_CASE("tiny instance counts") {
    auto count = [](const std::string& board, const std::string& pieces) {
        auto catalog = enumerate_placements(make_instance(board, pieces));
        return enumerate_exact(build_cover_problem(catalog)).size();
    };
    CHECK(count("4x1", "I:1") == 1);
    CHECK(count("2x2", "O:1") == 1);
    CHECK(count("4x2", "O:2") == 1);
    CHECK(count("4x2", "O:1,S:1") == 0);
    CHECK(count("2x4", "O:2") == 1);
    CHECK(count("4x4", "O:4") == 1);
}

TEST_CASE("default instance solution census") {
    auto catalog = enumerate_placements(default_instance());
    CoverProblem p = build_cover_problem(catalog);
    auto solutions = enumerate_exact(p);

    // Unordered placement sets; identical copies of a shape are one choice,
    // whole-board rotations and reflections count separately.
    CHECK(solutions.size() == 3106);

    // Pairwise distinct and each uses two placements of every shape.
    std::set<std::vector<int>> unique;
    for (const auto& s : solutions) {
        REQUIRE(s.placements.size() == 10);
        CHECK(std::is_sorted(s.placements.begin(), s.placements.end()));
        unique.insert(s.placements);
        for (int shape = 0; shape < 5; ++shape) {
            const auto& range = catalog.shape_ranges[shape];
            CHECK(std::count_if(s.placements.begin(), s.placements.end(),
                                [&](int i) { return range.contains(i); }) == 2);
        }
    }
    CHECK(unique.size() == solutions.size());

    // Grouping by whole-board symmetry matches the published census of 783.
    SymmetrySummary summary = classify_by_board_symmetry(solutions, catalog);
    CHECK(summary.num_classes == 783);
    REQUIRE(summary.orbit_sizes.size() == 2);
    CHECK(summary.orbit_sizes.at(2) == 13);
    CHECK(summary.orbit_sizes.at(4) == 770);
}

TEST_CASE("count is invariant under reversed column tie-breaking") {
    auto catalog = enumerate_placements(default_instance());
    CoverProblem p = build_cover_problem(catalog);
    auto lowest = enumerate_exact(p, std::nullopt, ColumnTieBreak::lowest);
    auto highest = enumerate_exact(p, std::nullopt, ColumnTieBreak::highest);
    REQUIRE(lowest.size() == highest.size());
    CHECK(std::set<TilingSolution>(lowest.begin(), lowest.end()) ==
          std::set<TilingSolution>(highest.begin(), highest.end()));
}

TEST_CASE("every enumerated solution is a zero-energy valid tiling") {
    auto instance = default_instance();
    auto catalog = enumerate_placements(instance);
    Qubo q = build_qubo(catalog, {1.0, 1.0});
    auto solutions = enumerate_exact(build_cover_problem(catalog));
    for (const auto& s : solutions) {
        Assignment x = assignment_from_solution(s, q.num_variables());
        REQUIRE(q.energy(x) == 0.0);
        REQUIRE(validate(decode(x, catalog), instance).is_valid);
    }
}

TEST_CASE("on small instances the energy-0 set equals the enumeration") {
    auto instance = make_instance("4x4", "O:4");
    auto catalog = enumerate_placements(instance);
    Qubo q = build_qubo(catalog, {1.0, 1.0});
    REQUIRE(q.num_variables() <= 20);

    std::set<std::vector<int>> enumerated;
    for (const auto& s : enumerate_exact(build_cover_problem(catalog))) {
        enumerated.insert(s.placements);
    }

    std::set<std::vector<int>> zero_energy;
    const int n = q.num_variables();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Assignment x(n, 0);
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
        if (q.energy(x) == 0.0) {
            std::vector<int> chosen;
            for (int i = 0; i < n; ++i) {
                if (x[i]) chosen.push_back(i);
            }
            zero_energy.insert(chosen);
        }
    }
    CHECK(zero_energy == enumerated);
}

TEST_CASE("limit stops enumeration early") {
    auto catalog = enumerate_placements(default_instance());
    CoverProblem p = build_cover_problem(catalog);
    auto some = enumerate_exact(p, 25);
    CHECK(some.size() == 25);
    auto none = enumerate_exact(p, 0);
    CHECK(none.empty());
}

TEST_CASE("solution dump is stable and ascending") {
    auto catalog = enumerate_placements(make_instance("4x2", "O:2"));
    auto solutions = enumerate_exact(build_cover_problem(catalog));
    REQUIRE(solutions.size() == 1);
    CHECK(dump_solutions(solutions) == "0 2\n");

    Assignment x = assignment_from_solution(solutions[0], 3);
    CHECK(x == Assignment{1, 0, 1});
}

TEST_CASE("symmetry classification on a symmetric singleton") {
    // The lone two-O tiling of a 2x4 board maps to itself under all board
    // symmetries: one class, orbit size 1.
    auto catalog = enumerate_placements(make_instance("4x2", "O:2"));
    auto solutions = enumerate_exact(build_cover_problem(catalog));
    SymmetrySummary summary = classify_by_board_symmetry(solutions, catalog);
    CHECK(summary.num_classes == 1);
    REQUIRE(summary.orbit_sizes.size() == 1);
    CHECK(summary.orbit_sizes.at(1) == 1);
}
