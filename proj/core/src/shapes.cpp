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

#include "tilequbo/shapes.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tilequbo {

int Orientation::height() const {
    int h = 0;
    for (const auto& c : cells) h = std::max(h, c.row + 1);
    return h;
}

int Orientation::width() const {
    int w = 0;
    for (const auto& c : cells) w = std::max(w, c.col + 1);
    return w;
}

std::vector<Cell> normalize_cells(std::vector<Cell> cells) {
    if (cells.empty()) return cells;
    int min_row = cells.front().row;
    int min_col = cells.front().col;
    for (const auto& c : cells) {
        min_row = std::min(min_row, c.row);
        min_col = std::min(min_col, c.col);
    }
    for (auto& c : cells) {
        c.row -= min_row;
        c.col -= min_col;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool cells_connected(const std::vector<Cell>& cells) {
    if (cells.empty()) return false;
    std::vector<char> seen(cells.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    auto adjacent = [](const Cell& a, const Cell& b) {
        return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
    };
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (!seen[j] && adjacent(cells[i], cells[j])) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == cells.size();
}

Shape make_shape(std::string name, std::vector<Cell> cells) {
    if (name.empty()) throw std::invalid_argument("shape name must not be empty");
    if (cells.empty()) throw std::invalid_argument("shape '" + name + "' has no cells");
    cells = normalize_cells(std::move(cells));
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
        throw std::invalid_argument("shape '" + name + "' has duplicate cells");
    }
    if (!cells_connected(cells)) {
        throw std::invalid_argument("shape '" + name + "' is not edge-connected");
    }
    return Shape{std::move(name), std::move(cells)};
}

const std::vector<Shape>& base_shapes() {
    static const std::vector<Shape> shapes = {
        make_shape("I", {{0, 0}, {0, 1}, {0, 2}, {0, 3}}),
        make_shape("O", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
        make_shape("L", {{0, 0}, {1, 0}, {2, 0}, {2, 1}}),
        make_shape("T", {{0, 0}, {0, 1}, {0, 2}, {1, 1}}),
        make_shape("S", {{0, 1}, {0, 2}, {1, 0}, {1, 1}}),
    };
    return shapes;
}

const Shape* find_base_shape(const std::string& name) {
    for (const auto& s : base_shapes()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

namespace {

std::vector<Cell> rotate90(const std::vector<Cell>& cells) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back({c.col, -c.row});
    return out;
}

std::vector<Cell> reflect(const std::vector<Cell>& cells) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back({c.row, -c.col});
    return out;
}

}  // namespace

std::vector<Orientation> orientations(const Shape& shape) {
    std::vector<Orientation> out;
    std::vector<Cell> current = shape.cells;
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        current = mirrored ? reflect(shape.cells) : shape.cells;
        for (int turn = 0; turn < 4; ++turn) {
            Orientation o{normalize_cells(current)};
            if (std::find(out.begin(), out.end(), o) == out.end()) {
                out.push_back(std::move(o));
            }
            current = rotate90(current);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tilequbo
