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
#include <random>

#include <tilequbo/catalog.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/qubo.hpp>

using namespace tilequbo;

namespace {

Assignment random_bits(int n, std::mt19937_64& rng) {
    Assignment x(n, 0);
    for (auto& bit : x) bit = rng() & 1;
    return x;
}

int shared_cells(const Placement& a, const Placement& b) {
    int m = 0;
    for (int cell : a.cells) {
        m += std::count(b.cells.begin(), b.cells.end(), cell);
    }
    return m;
}

}  // namespace

TEST_CASE("builder canonicalizes terms") {
    QuboBuilder builder(3);
    builder.add_linear(1, 2.0);
    builder.add_linear(1, 0.5);
    builder.add_quadratic(2, 0, 1.0);   // stored as (0, 2)
    builder.add_quadratic(0, 2, -1.0);  // cancels to zero, dropped
    builder.add_quadratic(0, 1, 3.0);
    builder.add_offset(4.0);
    Qubo q = builder.build();

    CHECK(q.num_variables() == 3);
    CHECK(q.linear() == std::vector<double>{0.0, 2.5, 0.0});
    REQUIRE(q.quadratic().size() == 1);
    CHECK(q.quadratic()[0] == QuadTerm{0, 1, 3.0});
    CHECK(q.offset() == 4.0);
    CHECK(q.max_abs_coefficient() == 3.0);
}

TEST_CASE("constructor rejects malformed terms") {
    CHECK_THROWS_AS(Qubo(2, {0, 0}, {{0, 2, 1.0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Qubo(2, {0, 0}, {{1, 1, 1.0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Qubo(2, {0, 0}, {{-1, 1, 1.0}}, 0), std::invalid_argument);

    Qubo q(2, {1, 1}, {{1, 0, 2.0}}, 0);  // unordered pair is normalized
    REQUIRE(q.quadratic().size() == 1);
    CHECK(q.quadratic()[0].i == 0);
    CHECK(q.quadratic()[0].j == 1);

    CHECK_THROWS_AS(q.energy(Assignment{1}), std::invalid_argument);

    Qubo padded(3, {1.0}, {}, 0);  // short linear arrays are zero-padded
    CHECK(padded.linear() == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("penalty model structure on the default instance") {
    auto catalog = enumerate_placements(default_instance());

    for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.5, 1.25}}) {
        Qubo q = build_qubo(catalog, {a, b});
        CHECK(q.num_variables() == 429);
        CHECK(q.offset() == Catch::Approx(20 * a + 40 * b).margin(1e-12));
        for (double c : q.linear()) {
            CHECK(c == Catch::Approx(-3 * a - 4 * b).margin(1e-12));
        }
    }
}

TEST_CASE("quadratic coefficients follow the shared-cell rule") {
    auto catalog = enumerate_placements(default_instance());
    double a = 2.0, b = 3.0;
    Qubo q = build_qubo(catalog, {a, b});

    for (std::size_t t = 0; t < q.quadratic().size(); t += 997) {
        const auto& term = q.quadratic()[t];
        const auto& pi = catalog.placements[term.i];
        const auto& pj = catalog.placements[term.j];
        int m = shared_cells(pi, pj);
        double expected = (pi.shape == pj.shape ? 2 * a : 0.0) + 2 * m * b;
        CHECK(term.value == Catch::Approx(expected).margin(1e-12));
        // Sparsity: a stored term implies same shape or a cell overlap.
        CHECK((pi.shape == pj.shape || m > 0));
    }
}

TEST_CASE("expanded energy agrees with direct evaluation") {
    auto catalog = enumerate_placements(default_instance());
    double a = 1.0, b = 1.0;
    Qubo q = build_qubo(catalog, {a, b});

    CHECK(q.energy(Assignment(429, 0)) == Catch::Approx(60.0).margin(1e-12));
    auto [h1_zero, h2_zero] = hamiltonian_terms(catalog, Assignment(429, 0));
    CHECK(h1_zero == 20.0);
    CHECK(h2_zero == 40.0);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        Assignment x = random_bits(429, rng);
        auto [h1, h2] = hamiltonian_terms(catalog, x);
        CHECK(q.energy(x) == Catch::Approx(a * h1 + b * h2).margin(1e-9));
        CHECK(q.energy(x) >= 0.0);
    }
}

TEST_CASE("piece term vanishes when counts are right") {
    auto catalog = enumerate_placements(default_instance());
    // Two placements per shape, chosen at each range boundary; overlaps are
    // irrelevant to the piece term.
    Assignment x(429, 0);
    for (const auto& range : catalog.shape_ranges) {
        x[range.begin] = 1;
        x[range.begin + 1] = 1;
    }
    auto [h1, h2] = hamiltonian_terms(catalog, x);
    CHECK(h1 == 0.0);
    CHECK(h2 > 0.0);  // ten arbitrary placements cannot tile perfectly
}

TEST_CASE("weights must be positive") {
    auto catalog = enumerate_placements(make_instance("2x2", "O:1"));
    CHECK_THROWS_AS(build_qubo(catalog, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_qubo(catalog, {1.0, -1.0}), std::invalid_argument);
}
