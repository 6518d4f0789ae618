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

#include <stdexcept>
#include <string>
#include <vector>

#include "tilequbo/shapes.hpp"

namespace tilequbo {

/// Rectangular board. Cells are indexed 0-based row-major internally;
/// display numbering is 1-based row-major.
struct Board {
    int width = 0;
    int height = 0;

    int area() const { return width * height; }
    int cell_index(int row, int col) const { return row * width + col; }
    int row_of(int cell) const { return cell / width; }
    int col_of(int cell) const { return cell % width; }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }

    friend bool operator==(const Board&, const Board&) = default;
};

/// One shape together with how many copies of it must be placed.
struct PieceRequirement {
    Shape shape;
    int count = 0;
};

/// A puzzle: a board plus required piece counts. Requirements are kept in
/// catalog order: built-in tetrominoes first (I, O, L, T, S), then custom
/// shapes in declaration order.
struct PuzzleInstance {
    Board board;
    std::vector<PieceRequirement> pieces;

    /// Total number of cells the required pieces would cover.
    int piece_area() const;

    /// A valid tiling can only exist when piece area equals board area.
    /// Mismatching instances are accepted as inputs but flagged here.
    bool area_matches() const { return piece_area() == board.area(); }
};

/// Raised on malformed instance config text; carries a 1-based line number.
class config_error : public std::runtime_error {
  public:
    config_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Parses instance config text. The format is line oriented; '#' starts a
/// comment. Directives:
///
///   board WxH          board dimensions (width x height); also "board W H"
///   shape NAME r,c ... defines a custom polyomino by its cell offsets
///   piece NAME COUNT   requires COUNT copies of a built-in or custom shape
///
/// Built-in piece names are I, O, L, T and S. Custom shape names must be
/// unique and must not shadow a built-in.
PuzzleInstance parse_instance(const std::string& text);

/// Reads and parses an instance config file. Throws std::runtime_error when
/// the file cannot be read, config_error when it cannot be parsed.
PuzzleInstance load_instance(const std::string& path);

/// The 5x8 board tiled with two of each tetromino.
PuzzleInstance default_instance();

/// Builds an instance from "WxH" board text and a "NAME:COUNT,NAME:COUNT"
/// piece list restricted to built-in shapes. Used by command line flags.
PuzzleInstance make_instance(const std::string& board_spec,
                             const std::string& pieces_spec);

/// Canonical config text for an instance; parse_instance round-trips it.
std::string format_instance(const PuzzleInstance& instance);

}  // namespace tilequbo
