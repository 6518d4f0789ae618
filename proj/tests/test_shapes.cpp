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

#include <tilequbo/shapes.hpp>

using namespace tilequbo;

namespace {

// Independent symmetry oracle: apply all 8 rotation/reflection transforms
// by direct coordinate arithmetic and deduplicate normalized cell sets.
std::set<std::vector<Cell>> oracle_orientations(const Shape& shape) {
    std::set<std::vector<Cell>> seen;
    for (int reflect = 0; reflect < 2; ++reflect) {
        std::vector<Cell> cells = shape.cells;
        if (reflect) {
            for (auto& c : cells) c.col = -c.col;
        }
        for (int rot = 0; rot < 4; ++rot) {
            for (auto& c : cells) {
                int r = c.row;
                c.row = c.col;
                c.col = -r;
            }
            seen.insert(normalize_cells(cells));
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("five base tetrominoes with canonical cells") {
    const auto& shapes = base_shapes();
    REQUIRE(shapes.size() == 5);

    std::vector<std::string> names;
    for (const auto& s : shapes) names.push_back(s.name);
    CHECK(names == std::vector<std::string>{"I", "O", "L", "T", "S"});

    for (const auto& s : shapes) {
        CHECK(s.cells.size() == 4);
        CHECK(s.cells == normalize_cells(s.cells));
        CHECK(cells_connected(s.cells));
    }

    CHECK(find_base_shape("I")->cells ==
          std::vector<Cell>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(find_base_shape("O")->cells ==
          std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(find_base_shape("L")->cells ==
          std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {2, 1}});
    CHECK(find_base_shape("T")->cells ==
          std::vector<Cell>{{0, 0}, {0, 1}, {0, 2}, {1, 1}});
    CHECK(find_base_shape("S")->cells ==
          std::vector<Cell>{{0, 1}, {0, 2}, {1, 0}, {1, 1}});
    CHECK(find_base_shape("X") == nullptr);
}

TEST_CASE("orientation counts per shape") {
    auto count = [](const char* name) {
        return orientations(*find_base_shape(name)).size();
    };
    CHECK(count("I") == 2);
    CHECK(count("O") == 1);
    CHECK(count("L") == 8);
    CHECK(count("T") == 4);
    CHECK(count("S") == 4);
}

TEST_CASE("orientations match an independent symmetry oracle") {
    for (const auto& shape : base_shapes()) {
        auto got = orientations(shape);
        auto want = oracle_orientations(shape);
        REQUIRE(got.size() == want.size());
        for (const auto& o : got) {
            CHECK(want.count(o.cells) == 1);
            CHECK(o.cells == normalize_cells(o.cells));
        }
        // Orientation count divides the symmetry group order.
        CHECK((got.size() == 1 || got.size() == 2 || got.size() == 4 ||
               got.size() == 8));
        // Canonical order: sorted by lexicographic cell list.
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("normalize_cells shifts to origin and sorts") {
    std::vector<Cell> cells{{5, 7}, {4, 7}, {4, 8}};
    auto norm = normalize_cells(cells);
    CHECK(norm == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(normalize_cells(norm) == norm);
}

TEST_CASE("connectivity detection") {
    CHECK(cells_connected({{0, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(cells_connected({{0, 0}, {1, 1}}));
    CHECK_FALSE(cells_connected({{0, 0}, {0, 2}}));
    CHECK(cells_connected({{0, 0}}));
}

TEST_CASE("make_shape validates input") {
    auto s = make_shape("domino", {{0, 1}, {0, 0}});
    CHECK(s.cells == std::vector<Cell>{{0, 0}, {0, 1}});
    CHECK_THROWS_AS(make_shape("bad", {{0, 0}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_shape("dup", {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_shape("empty", {}), std::invalid_argument);
}
