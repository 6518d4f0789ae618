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

#include "tilequbo/tiling.hpp"

#include <sstream>
#include <stdexcept>

namespace tilequbo {

Tiling decode(const Assignment& x, const PlacementCatalog& catalog) {
    if (static_cast<int>(x.size()) != catalog.num_placements()) {
        throw std::invalid_argument("decode: assignment length mismatch");
    }
    Tiling t;
    for (const Placement& pl : catalog.placements) {
        if (x[pl.index]) t.chosen.push_back(pl);
    }
    return t;
}

Assignment encode(const Tiling& tiling, int num_variables) {
    Assignment x(num_variables, 0);
    for (const Placement& pl : tiling.chosen) {
        if (pl.index < 0 || pl.index >= num_variables) {
            throw std::invalid_argument("encode: placement index out of range");
        }
        x[pl.index] = 1;
    }
    return x;
}

ValidationReport validate(const Tiling& tiling,
                          const PuzzleInstance& instance) {
    ValidationReport report;
    report.shape_counts.assign(instance.pieces.size(), 0);

    std::vector<int> coverage(instance.board.area(), 0);
    for (const Placement& pl : tiling.chosen) {
        if (pl.shape < 0 ||
            pl.shape >= static_cast<int>(instance.pieces.size())) {
            throw std::invalid_argument("validate: shape index out of range");
        }
        ++report.shape_counts[pl.shape];
        for (int cell : pl.cells) {
            if (cell < 0 || cell >= instance.board.area()) {
                throw std::invalid_argument("validate: cell out of range");
            }
            ++coverage[cell];
        }
    }

    for (int cell = 0; cell < instance.board.area(); ++cell) {
        if (coverage[cell] == 0) {
            report.gap_cells.push_back(cell);
        } else if (coverage[cell] >= 2) {
            report.overlap_cells.push_back({cell, coverage[cell]});
        }
    }

    bool counts_match = true;
    for (std::size_t j = 0; j < instance.pieces.size(); ++j) {
        counts_match &= report.shape_counts[j] == instance.pieces[j].count;
    }
    report.is_valid = counts_match && report.overlap_cells.empty() &&
                      report.gap_cells.empty();
    return report;
}

std::string render(const Tiling& tiling, const Board& board) {
    std::vector<int> coverage(board.area(), 0);
    std::vector<char> glyph(board.area(), '.');
    for (const Placement& pl : tiling.chosen) {
        for (int cell : pl.cells) {
            if (cell < 0 || cell >= board.area()) {
                throw std::invalid_argument("render: cell out of range");
            }
            ++coverage[cell];
        }
    }
    for (const Placement& pl : tiling.chosen) {
        for (int cell : pl.cells) {
            glyph[cell] = coverage[cell] >= 2 ? '#' : pl.letter;
        }
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(board.area()) + board.height);
    for (int r = 0; r < board.height; ++r) {
        for (int c = 0; c < board.width; ++c) {
            out.push_back(glyph[board.cell_index(r, c)]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string format_report(const ValidationReport& report,
                          const PuzzleInstance& instance) {
    std::ostringstream out;
    out << "valid " << (report.is_valid ? "true" : "false") << '\n';
    for (std::size_t j = 0; j < instance.pieces.size(); ++j) {
        out << "shape " << instance.pieces[j].shape.name << ' '
            << report.shape_counts[j] << " of " << instance.pieces[j].count
            << '\n';
    }
    out << "overlap_cells " << report.overlap_cells.size();
    for (const CellCoverage& oc : report.overlap_cells) {
        out << ' ' << instance.board.row_of(oc.cell) << ','
            << instance.board.col_of(oc.cell) << ":x" << oc.count;
    }
    out << '\n';
    out << "gap_cells " << report.gap_cells.size();
    for (int cell : report.gap_cells) {
        out << ' ' << instance.board.row_of(cell) << ','
            << instance.board.col_of(cell);
    }
    out << '\n';
    out << "defect_cells " << report.defect_cells() << '\n';
    return out.str();
}

}  // namespace tilequbo
