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

#include "tilequbo/exact_cover.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tilequbo {

CoverProblem build_cover_problem(const PlacementCatalog& catalog) {
    CoverProblem p;
    p.num_cell_columns = catalog.board.area();
    p.num_shape_columns = catalog.num_shapes();
    p.multiplicity.assign(p.num_cell_columns, 1);
    for (int count : catalog.counts) p.multiplicity.push_back(count);

    p.rows.reserve(catalog.placements.size());
    p.column_rows.assign(p.num_columns(), {});
    for (const Placement& pl : catalog.placements) {
        std::vector<int> cols = pl.cells;  // already sorted ascending
        cols.push_back(p.num_cell_columns + pl.shape);
        for (int c : cols) p.column_rows[c].push_back(pl.index);
        p.rows.push_back(std::move(cols));
    }
    return p;
}

namespace {

/// Shared search state. `remaining` counts how many more rows each column
/// still needs; a row is available while every column it links still needs
/// one, tracked by the per-row blocked counter.
struct CoverSearch {
    const CoverProblem& p;
    ColumnTieBreak tie_break;
    std::optional<std::int64_t> limit;
    std::vector<int> remaining;
    std::vector<int> blocked;
    std::vector<int> chosen;
    std::vector<TilingSolution> solutions;
    bool stopped = false;

    CoverSearch(const CoverProblem& problem, ColumnTieBreak tie,
                std::optional<std::int64_t> lim)
        : p(problem), tie_break(tie), limit(lim),
          remaining(problem.multiplicity),
          blocked(problem.rows.size(), 0) {
        for (int col = 0; col < p.num_columns(); ++col) {
            if (remaining[col] == 0) {
                for (int r : p.column_rows[col]) ++blocked[r];
            }
        }
    }

    void choose(int row) {
        chosen.push_back(row);
        for (int col : p.rows[row]) {
            if (--remaining[col] == 0) {
                for (int r : p.column_rows[col]) ++blocked[r];
            }
        }
    }

    void unchoose(int row) {
        chosen.pop_back();
        for (int col : p.rows[row]) {
            if (remaining[col]++ == 0) {
                for (int r : p.column_rows[col]) --blocked[r];
            }
        }
    }

    void record() {
        TilingSolution s{chosen};
        std::sort(s.placements.begin(), s.placements.end());
        solutions.push_back(std::move(s));
        if (limit && static_cast<std::int64_t>(solutions.size()) >= *limit) {
            stopped = true;
        }
    }

    /// Fills `need` slots of one shape column from `candidates`, always in
    /// ascending placement order so each set of identical copies is visited
    /// exactly once.
    void fill_slots(const std::vector<int>& candidates, std::size_t from,
                    int need) {
        if (stopped) return;
        if (need == 0) {
            search();
            return;
        }
        for (std::size_t i = from;
             i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
            const int row = candidates[i];
            if (blocked[row] > 0) continue;  // clashes with an earlier slot
            choose(row);
            fill_slots(candidates, i + 1, need - 1);
            unchoose(row);
            if (stopped) return;
        }
    }

    void search() {
        if (stopped) return;
        int best_col = -1;
        int best_count = std::numeric_limits<int>::max();
        for (int col = 0; col < p.num_columns(); ++col) {
            if (remaining[col] == 0) continue;
            int count = 0;
            for (int r : p.column_rows[col]) count += blocked[r] == 0;
            if (count < remaining[col]) return;  // dead branch
            const bool better = tie_break == ColumnTieBreak::lowest
                                    ? count < best_count
                                    : count <= best_count;
            if (better) {
                best_col = col;
                best_count = count;
            }
        }
        if (best_col < 0) {
            record();
            return;
        }

        std::vector<int> candidates;
        candidates.reserve(best_count);
        for (int r : p.column_rows[best_col]) {
            if (blocked[r] == 0) candidates.push_back(r);
        }
        if (remaining[best_col] == 1 && best_col < p.num_cell_columns) {
            for (int row : candidates) {
                choose(row);
                search();
                unchoose(row);
                if (stopped) return;
            }
        } else {
            fill_slots(candidates, 0, remaining[best_col]);
        }
    }
};

}  // namespace

std::vector<TilingSolution> enumerate_exact(const CoverProblem& p,
                                            std::optional<std::int64_t> limit,
                                            ColumnTieBreak tie_break) {
    if (limit && *limit <= 0) return {};
    CoverSearch search(p, tie_break, limit);
    search.search();
    std::sort(search.solutions.begin(), search.solutions.end());
    return std::move(search.solutions);
}

std::string dump_solutions(const std::vector<TilingSolution>& solutions) {
    std::ostringstream out;
    for (const TilingSolution& s : solutions) {
        for (std::size_t i = 0; i < s.placements.size(); ++i) {
            if (i) out << ' ';
            out << s.placements[i];
        }
        out << '\n';
    }
    return out.str();
}

Assignment assignment_from_solution(const TilingSolution& solution,
                                    int num_variables) {
    Assignment x(num_variables, 0);
    for (int i : solution.placements) {
        if (i < 0 || i >= num_variables) {
            throw std::invalid_argument(
                "assignment_from_solution: placement index out of range");
        }
        x[i] = 1;
    }
    return x;
}

namespace {

/// Cell permutations of the board rectangle: identity, the two mirror
/// flips, the half turn, and for square boards the quarter turns and
/// diagonal flips. Duplicates (degenerate boards) are removed.
std::vector<std::vector<int>> board_symmetries(const Board& board) {
    const int w = board.width;
    const int h = board.height;
    using Map = std::pair<int, int> (*)(int, int, int, int);
    std::vector<Map> maps = {
        [](int r, int c, int, int) { return std::pair{r, c}; },
        [](int r, int c, int w2, int) { return std::pair{r, w2 - 1 - c}; },
        [](int r, int c, int, int h2) { return std::pair{h2 - 1 - r, c}; },
        [](int r, int c, int w2, int h2) {
            return std::pair{h2 - 1 - r, w2 - 1 - c};
        },
    };
    if (w == h) {
        maps.push_back([](int r, int c, int, int h2) {
            return std::pair{c, h2 - 1 - r};
        });
        maps.push_back([](int r, int c, int w2, int) {
            return std::pair{w2 - 1 - c, r};
        });
        maps.push_back([](int r, int c, int, int) { return std::pair{c, r}; });
        maps.push_back([](int r, int c, int w2, int h2) {
            return std::pair{h2 - 1 - c, w2 - 1 - r};
        });
    }

    std::set<std::vector<int>> distinct;
    for (Map m : maps) {
        std::vector<int> perm(board.area());
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                auto [r2, c2] = m(r, c, w, h);
                perm[board.cell_index(r, c)] = board.cell_index(r2, c2);
            }
        }
        distinct.insert(std::move(perm));
    }
    return {distinct.begin(), distinct.end()};
}

}  // namespace

SymmetrySummary classify_by_board_symmetry(
    const std::vector<TilingSolution>& solutions,
    const PlacementCatalog& catalog) {
    const auto perms = board_symmetries(catalog.board);

    std::map<std::pair<int, std::vector<int>>, int> placement_by_cells;
    for (const Placement& pl : catalog.placements) {
        placement_by_cells[{pl.shape, pl.cells}] = pl.index;
    }

    std::map<std::vector<int>, int> orbit_size_by_representative;
    for (const TilingSolution& s : solutions) {
        std::set<std::vector<int>> orbit;
        for (const auto& perm : perms) {
            std::vector<int> image;
            image.reserve(s.placements.size());
            for (int idx : s.placements) {
                const Placement& pl = catalog.placements[idx];
                std::vector<int> cells;
                cells.reserve(pl.cells.size());
                for (int cell : pl.cells) cells.push_back(perm[cell]);
                std::sort(cells.begin(), cells.end());
                auto it = placement_by_cells.find({pl.shape, cells});
                if (it == placement_by_cells.end()) {
                    throw std::invalid_argument(
                        "classify_by_board_symmetry: transformed placement "
                        "missing from catalog");
                }
                image.push_back(it->second);
            }
            std::sort(image.begin(), image.end());
            orbit.insert(std::move(image));
        }
        orbit_size_by_representative[*orbit.begin()] =
            static_cast<int>(orbit.size());
    }

    SymmetrySummary summary;
    summary.num_classes =
        static_cast<std::int64_t>(orbit_size_by_representative.size());
    for (const auto& [rep, size] : orbit_size_by_representative) {
        ++summary.orbit_sizes[size];
    }
    return summary;
}

}  // namespace tilequbo
