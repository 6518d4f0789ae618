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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilequbo/catalog.hpp"
#include "tilequbo/qubo.hpp"

namespace tilequbo {

/// Generalized exact-cover formulation of a tiling instance. Columns are
/// the board cells (required multiplicity 1) followed by the shapes
/// (required multiplicity = copies of that shape); rows are the placements,
/// each linking its covered cells plus its shape column.
struct CoverProblem {
    int num_cell_columns = 0;
    int num_shape_columns = 0;
    std::vector<int> multiplicity;           // per column
    std::vector<std::vector<int>> rows;      // column indices, ascending
    std::vector<std::vector<int>> column_rows;  // row indices, ascending

    int num_columns() const { return num_cell_columns + num_shape_columns; }
};

/// One tiling as an unordered placement set; swapping identical copies of a
/// shape does not produce a new solution, whole-board symmetries do.
struct TilingSolution {
    std::vector<int> placements;  // ascending

    friend auto operator<=>(const TilingSolution&,
                            const TilingSolution&) = default;
};

/// Which column wins when several are equally constrained; flipping this
/// must not change the solution set.
enum class ColumnTieBreak { lowest, highest };

CoverProblem build_cover_problem(const PlacementCatalog& catalog);

/// Depth-first search branching on the most-constrained unsatisfied column.
/// A cell column branches over its available placements; a shape column
/// fills all of its remaining multiplicity slots at once, in ascending
/// placement-index order, so identical copies are never counted twice.
/// Returns every solution sorted lexicographically, or the first `limit`
/// found when a limit is given.
std::vector<TilingSolution> enumerate_exact(
    const CoverProblem& p,
    std::optional<std::int64_t> limit = std::nullopt,
    ColumnTieBreak tie_break = ColumnTieBreak::lowest);

/// One line per solution: placement indices ascending, space separated.
std::string dump_solutions(const std::vector<TilingSolution>& solutions);

/// The 0/1 vector with ones exactly at the solution's placements.
Assignment assignment_from_solution(const TilingSolution& solution,
                                    int num_variables);

/// Breakdown of a solution list under the symmetry group of the board
/// rectangle (4 transforms, 8 when square). orbit_sizes maps orbit size to
/// the number of equivalence classes of that size.
struct SymmetrySummary {
    std::int64_t num_classes = 0;
    std::map<int, std::int64_t> orbit_sizes;
};

/// Classifies solutions into whole-board symmetry classes. Intended for
/// reporting how a raw count relates to published figures that count
/// modulo symmetry. Throws std::invalid_argument if some transformed
/// placement is missing from the catalog (cannot happen for catalogs built
/// by enumerate_placements, whose orientation sets are closed under the
/// board's symmetries).
SymmetrySummary classify_by_board_symmetry(
    const std::vector<TilingSolution>& solutions,
    const PlacementCatalog& catalog);

}  // namespace tilequbo
