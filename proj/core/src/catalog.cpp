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

#include "tilequbo/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace tilequbo {

PlacementCatalog enumerate_placements(const PuzzleInstance& instance) {
    PlacementCatalog catalog;
    catalog.board = instance.board;
    catalog.cell_incidence.resize(instance.board.area());

    int next_index = 0;
    for (const auto& piece : instance.pieces) {
        catalog.shapes.push_back(piece.shape);
        catalog.counts.push_back(piece.count);
        IndexRange range{next_index, next_index};
        for (const auto& orientation : orientations(piece.shape)) {
            int h = orientation.height();
            int w = orientation.width();
            for (int anchor_row = 0; anchor_row + h <= instance.board.height; ++anchor_row) {
                for (int anchor_col = 0; anchor_col + w <= instance.board.width; ++anchor_col) {
                    Placement p;
                    p.index = next_index;
                    p.shape = static_cast<int>(catalog.shapes.size()) - 1;
                    p.letter = piece.shape.name.empty() ? '?' : piece.shape.name[0];
                    for (const auto& cell : orientation.cells) {
                        p.cells.push_back(instance.board.cell_index(anchor_row + cell.row,
                                                                    anchor_col + cell.col));
                    }
                    std::sort(p.cells.begin(), p.cells.end());
                    for (int c : p.cells) catalog.cell_incidence[c].push_back(next_index);
                    catalog.placements.push_back(std::move(p));
                    ++next_index;
                }
            }
        }
        range.end = next_index;
        catalog.shape_ranges.push_back(range);
    }
    return catalog;
}

namespace {

bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    bigint result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace

bigint combination_count(const PlacementCatalog& catalog) {
    bigint product = 1;
    for (int j = 0; j < catalog.num_shapes(); ++j) {
        product *= binomial(catalog.shape_ranges[j].size(), catalog.counts[j]);
    }
    return product;
}

std::string export_catalog(const PlacementCatalog& catalog) {
    std::ostringstream out;
    for (const auto& p : catalog.placements) {
        out << p.index << " " << catalog.shapes[p.shape].name << " ";
        for (std::size_t i = 0; i < p.cells.size(); ++i) {
            if (i) out << ",";
            out << p.cells[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string catalog_hash(const PlacementCatalog& catalog) {
    std::ostringstream key;
    key << catalog.board.width << "x" << catalog.board.height << "\n";
    for (int j = 0; j < catalog.num_shapes(); ++j) {
        key << catalog.shapes[j].name << " " << catalog.counts[j] << "\n";
    }
    key << export_catalog(catalog);

    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : key.str()) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << hash;
    return out.str();
}

}  // namespace tilequbo
