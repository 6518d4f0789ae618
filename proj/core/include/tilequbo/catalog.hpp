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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tilequbo/instance.hpp"
#include "tilequbo/shapes.hpp"

namespace tilequbo {

using bigint = boost::multiprecision::cpp_int;

/// One concrete positioning of a shape orientation on the board. `index` is
/// the placement's global binary-variable index; `cells` are sorted board
/// cell indices; `letter` is the shape name's initial, used by renderers.
struct Placement {
    int index = 0;
    int shape = 0;  // position in the catalog's shape list
    char letter = '?';
    std::vector<int> cells;
};

/// Half-open range [begin, end) of placement indices belonging to one shape.
struct IndexRange {
    int begin = 0;
    int end = 0;

    int size() const { return end - begin; }
    bool contains(int i) const { return i >= begin && i < end; }
};

/// All placements of an instance's shapes on its board, indexed contiguously
/// 0..P-1 and grouped by shape. Immutable after construction and safe to
/// share across concurrent solver runs.
struct PlacementCatalog {
    Board board;
    std::vector<Shape> shapes;            // catalog order
    std::vector<int> counts;              // required copies per shape
    std::vector<Placement> placements;
    std::vector<IndexRange> shape_ranges; // aligned with shapes
    std::vector<std::vector<int>> cell_incidence;  // board cell -> placements

    int num_placements() const { return static_cast<int>(placements.size()); }
    int num_shapes() const { return static_cast<int>(shapes.size()); }
};

/// Enumerates every placement of every shape: for each shape, for each
/// orientation in canonical order, for each top-left anchor in row-major
/// order. Indices are assigned contiguously in shape order. Deterministic;
/// two calls over the same instance produce identical catalogs.
PlacementCatalog enumerate_placements(const PuzzleInstance& instance);

/// Number of ways to pick the required copies per shape ignoring overlap:
/// the product over shapes of C(P_j, c_j). Zero when some shape has fewer
/// placements than required copies.
bigint combination_count(const PlacementCatalog& catalog);

/// One line per placement: "index shape cell,cell,..." with 0-based cells.
std::string export_catalog(const PlacementCatalog& catalog);

/// 64-bit FNV-1a over the canonical catalog dump, as fixed-width hex.
/// Identifies the instance in exported model metadata.
std::string catalog_hash(const PlacementCatalog& catalog);

}  // namespace tilequbo
