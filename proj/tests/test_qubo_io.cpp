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
#include <tilequbo/qubo_io.hpp>

using namespace tilequbo;

namespace {

Qubo puzzle_model() {
    auto catalog = enumerate_placements(default_instance());
    return build_qubo(catalog, {1.0, 1.0});
}

int error_line(const std::string& text) {
    try {
        parse_qubo(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("text round trip is exact") {
    Qubo q = puzzle_model();
    std::string text = export_qubo(q);
    Qubo back = parse_qubo(text);
    CHECK(back == q);
    // export(parse(t)) is idempotent.
    CHECK(export_qubo(back) == text);
    // The header declares the variable count.
    CHECK(text.find("p qubo 0 429 ") != std::string::npos);
}

TEST_CASE("text round trip with awkward coefficients") {
    Qubo q(4, {0.1, -2.5e-13, 0.0, 1.0 / 3.0},
           {{0, 1, 3.141592653589793}, {2, 3, -1e30}}, -0.7);
    CHECK(parse_qubo(export_qubo(q)) == q);
}

TEST_CASE("parse accepts comments and reports malformed lines") {
    CHECK_FALSE(parse_qubo("c comment\np qubo 0 2 1 1\n0 0 1.5\n0 1 2\n") ==
                Qubo());
    CHECK(error_line("p qubo 0 2 1 1\n0 0 1\n0 1 2\n0 1 3\n") == 4);  // dup
    CHECK(error_line("p qubo 0 2 0 1\n1 0 2\n") == 2);   // i > j
    CHECK(error_line("p qubo 0 2 0 1\n0 5 2\n") == 2);   // out of range
    CHECK(error_line("0 0 1\n") == 1);                   // data before header
    CHECK(error_line("p qubo 0 2 0 0\np qubo 0 2 0 0\n") == 2);  // dup header
    CHECK(error_line("p qubo 0 2 1 0\n0 0 one\n") == 2);  // bad value
    CHECK(error_line("") == 0);                           // missing header
    // Count mismatches are detected at end of input.
    CHECK(error_line("p qubo 0 2 2 0\n0 0 1\n") == 0);
}

TEST_CASE("json round trip preserves the model and metadata") {
    Qubo q = puzzle_model();
    auto catalog = enumerate_placements(default_instance());
    ModelMetadata meta{catalog_hash(catalog), {1.0, 1.0}};

    std::string text = qubo_to_json(q, meta);
    CHECK(json_model_kind(text) == "qubo");
    CHECK(text.find("\"n\": 429") != std::string::npos);
    CHECK(text.find(meta.instance_hash) != std::string::npos);
    CHECK(qubo_from_json(text) == q);

    IsingModel m = to_ising(q);
    std::string ising_text = ising_to_json(m, meta);
    CHECK(json_model_kind(ising_text) == "ising");
    CHECK(ising_from_json(ising_text) == m);
}

TEST_CASE("empty model round trips everywhere") {
    Qubo q;
    CHECK(parse_qubo(export_qubo(q)) == q);
    CHECK(qubo_from_json(qubo_to_json(q)) == q);
    IsingModel m = to_ising(q);
    CHECK(ising_from_json(ising_to_json(m)) == m);
    CHECK(from_ising(m) == q);
}

TEST_CASE("json parse errors") {
    CHECK_THROWS_AS(qubo_from_json("not json"), parse_error);
    CHECK_THROWS_AS(qubo_from_json("{\"model\": \"ising\"}"), parse_error);
    CHECK_THROWS_AS(ising_from_json(qubo_to_json(Qubo())), parse_error);
    CHECK_THROWS_AS(json_model_kind("{}"), parse_error);
    CHECK_THROWS_AS(
        qubo_from_json("{\"model\": \"qubo\", \"n\": 1, \"offset\": 0, "
                       "\"linear\": [0], \"quadratic\": [[1, 2]]}"),
        parse_error);
}
