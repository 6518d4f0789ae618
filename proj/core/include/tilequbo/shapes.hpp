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

#include <string>
#include <vector>

namespace tilequbo {

/// A unit square of a polyomino, as (row, col) offsets from the shape's
/// top-left bounding corner.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A free polyomino: a named, edge-connected set of cells, normalized so
/// that min row = min col = 0. Cells are kept sorted.
struct Shape {
    std::string name;
    std::vector<Cell> cells;

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// One distinct rotation/reflection of a shape, normalized and sorted.
struct Orientation {
    std::vector<Cell> cells;

    int height() const;
    int width() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;
    friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Translates cells so that min row = min col = 0 and sorts them.
std::vector<Cell> normalize_cells(std::vector<Cell> cells);

/// True when the cells form one edge-connected component.
bool cells_connected(const std::vector<Cell>& cells);

/// Validates name/cells and returns a normalized shape. Throws
/// std::invalid_argument on empty, duplicate, or disconnected cell sets.
Shape make_shape(std::string name, std::vector<Cell> cells);

/// The five built-in tetrominoes I, O, L, T, S, in that order.
const std::vector<Shape>& base_shapes();

/// Looks a built-in tetromino up by name; returns nullptr when absent.
const Shape* find_base_shape(const std::string& name);

/// All distinct orientations of a shape under the 8 symmetry transforms
/// (4 rotations x optional reflection), deduplicated and returned in
/// lexicographic cell-list order. The result size is always 1, 2, 4 or 8.
std::vector<Orientation> orientations(const Shape& shape);

}  // namespace tilequbo
