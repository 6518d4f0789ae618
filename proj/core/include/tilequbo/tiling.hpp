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

#include <cstddef>
#include <string>
#include <vector>

#include "tilequbo/catalog.hpp"
#include "tilequbo/instance.hpp"
#include "tilequbo/qubo.hpp"

namespace tilequbo {

/// The placements selected by an assignment, sorted by placement index.
struct Tiling {
    std::vector<Placement> chosen;
};

/// Coverage of one board cell touched by two or more placements.
struct CellCoverage {
    int cell = 0;
    int count = 0;

    friend bool operator==(const CellCoverage&, const CellCoverage&) = default;
};

/// Outcome of checking a tiling against its instance. Valid means every
/// shape is used exactly the required number of times and every board cell
/// is covered exactly once.
struct ValidationReport {
    std::vector<int> shape_counts;            // catalog order
    std::vector<CellCoverage> overlap_cells;  // coverage >= 2, ascending
    std::vector<int> gap_cells;               // coverage == 0, ascending
    bool is_valid = false;

    /// Cells that are either overlapped or uncovered; the per-solution
    /// defect measure aggregated by experiment summaries.
    int defect_cells() const {
        return static_cast<int>(overlap_cells.size() + gap_cells.size());
    }
};

/// Selects the placements whose bit is 1. Throws std::invalid_argument on
/// length mismatch.
Tiling decode(const Assignment& x, const PlacementCatalog& catalog);

/// Inverse of decode: the assignment with ones at the chosen placements.
Assignment encode(const Tiling& tiling, int num_variables);

/// Recomputes per-cell coverage and shape usage from scratch; depends only
/// on the placements' cell lists, not on how the tiling was produced.
ValidationReport validate(const Tiling& tiling, const PuzzleInstance& instance);

/// Text grid, one line per board row: a covered cell prints the first
/// letter of its shape's name, an uncovered cell '.', a multiply covered
/// cell '#'.
std::string render(const Tiling& tiling, const Board& board);

/// Line-oriented "key value..." serialization of a report: valid flag,
/// per-shape counts with requirements, overlap and gap cells, defect total.
std::string format_report(const ValidationReport& report,
                          const PuzzleInstance& instance);

}  // namespace tilequbo
