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

#include <random>

#include <tilequbo/catalog.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/ising.hpp>

using namespace tilequbo;

namespace {

Qubo random_sparse_qubo(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::vector<double> linear(n);
    for (auto& c : linear) c = coeff(rng);
    std::vector<QuadTerm> quad;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() % 4 == 0) quad.push_back({i, j, coeff(rng)});
        }
    }
    return Qubo(n, std::move(linear), std::move(quad), coeff(rng));
}

Assignment random_bits(int n, std::mt19937_64& rng) {
    Assignment x(n, 0);
    for (auto& bit : x) bit = rng() & 1;
    return x;
}

}  // namespace

TEST_CASE("bit/spin maps are inverse") {
    Assignment x{0, 1, 1, 0};
    SpinAssignment s = spins_from_bits(x);
    CHECK(s == SpinAssignment{-1, 1, 1, -1});
    CHECK(bits_from_spins(s) == x);
}

TEST_CASE("single-variable conversion constants") {
    double c = 3.0;
    Qubo q(1, {c}, {}, 0.0);
    IsingModel m = to_ising(q);
    REQUIRE(m.num_spins() == 1);
    // q = (s+1)/2 turns c*q into (c/2)s + c/2; the energy convention
    // E = -sum h s + offset makes h the negated slope.
    CHECK(m.fields()[0] == Catch::Approx(-c / 2).margin(1e-12));
    CHECK(m.couplings().empty());
    CHECK(m.offset() == Catch::Approx(c / 2).margin(1e-12));

    CHECK(m.energy({-1}) == Catch::Approx(0.0).margin(1e-12));
    CHECK(m.energy({1}) == Catch::Approx(c).margin(1e-12));
}

TEST_CASE("zero model converts to zero model") {
    Qubo q(3, {0, 0, 0}, {}, 0.0);
    IsingModel m = to_ising(q);
    CHECK(m.fields() == std::vector<double>{0, 0, 0});
    CHECK(m.couplings().empty());
    CHECK(m.offset() == 0.0);
    CHECK(from_ising(m) == q);
}

TEST_CASE("energy is preserved on random sparse models") {
    std::mt19937_64 rng(11);
    for (int model = 0; model < 20; ++model) {
        int n = 2 + static_cast<int>(rng() % 40);
        Qubo q = random_sparse_qubo(n, rng);
        IsingModel m = to_ising(q);
        Qubo back = from_ising(m);

        for (int trial = 0; trial < 50; ++trial) {
            Assignment x = random_bits(n, rng);
            double direct = q.energy(x);
            CHECK(m.energy(spins_from_bits(x)) ==
                  Catch::Approx(direct).margin(1e-9));
            CHECK(back.energy(x) == Catch::Approx(direct).margin(1e-9));
        }

        // Round-trip coefficients are exact to tight tolerance.
        REQUIRE(back.num_variables() == q.num_variables());
        for (int i = 0; i < n; ++i) {
            CHECK(back.linear()[i] ==
                  Catch::Approx(q.linear()[i]).margin(1e-12));
        }
        REQUIRE(back.quadratic().size() == q.quadratic().size());
        for (std::size_t t = 0; t < q.quadratic().size(); ++t) {
            CHECK(back.quadratic()[t].i == q.quadratic()[t].i);
            CHECK(back.quadratic()[t].j == q.quadratic()[t].j);
            CHECK(back.quadratic()[t].value ==
                  Catch::Approx(q.quadratic()[t].value).margin(1e-12));
        }
    }
}

TEST_CASE("energy is preserved on the default puzzle model") {
    auto catalog = enumerate_placements(default_instance());
    Qubo q = build_qubo(catalog, {1.0, 1.0});
    IsingModel m = to_ising(q);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        Assignment x = random_bits(q.num_variables(), rng);
        CHECK(m.energy(spins_from_bits(x)) ==
              Catch::Approx(q.energy(x)).margin(1e-9));
    }
}
