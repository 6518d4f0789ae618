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

#include "tilequbo/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tilequbo {

int PuzzleInstance::piece_area() const {
    int total = 0;
    for (const auto& p : pieces) total += p.count * static_cast<int>(p.shape.cells.size());
    return total;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& s, int& out) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) return false;
        out = v;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// "WxH" or "W H" already split into tokens after the directive word.
bool parse_board_tokens(const std::vector<std::string>& tokens, Board& out) {
    if (tokens.size() == 1) {
        auto x = tokens[0].find_first_of("xX");
        if (x == std::string::npos) return false;
        int w = 0, h = 0;
        if (!parse_int(tokens[0].substr(0, x), w)) return false;
        if (!parse_int(tokens[0].substr(x + 1), h)) return false;
        out = Board{w, h};
        return true;
    }
    if (tokens.size() == 2) {
        int w = 0, h = 0;
        if (!parse_int(tokens[0], w) || !parse_int(tokens[1], h)) return false;
        out = Board{w, h};
        return true;
    }
    return false;
}

bool parse_cell(const std::string& s, Cell& out) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return false;
    int r = 0, c = 0;
    if (!parse_int(s.substr(0, comma), r)) return false;
    if (!parse_int(s.substr(comma + 1), c)) return false;
    out = Cell{r, c};
    return true;
}

int base_shape_rank(const std::string& name) {
    const auto& bases = base_shapes();
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

PuzzleInstance parse_instance(const std::string& text) {
    Board board{0, 0};
    bool board_seen = false;
    std::vector<Shape> custom;
    // (name, count, line) in declaration order
    std::vector<std::tuple<std::string, int, int>> piece_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];
        std::vector<std::string> args(tokens.begin() + 1, tokens.end());

        if (directive == "board") {
            if (board_seen) throw config_error(lineno, "duplicate board directive");
            if (!parse_board_tokens(args, board) || board.width < 1 || board.height < 1) {
                throw config_error(lineno, "expected 'board WxH' with positive dimensions");
            }
            board_seen = true;
        } else if (directive == "shape") {
            if (args.size() < 2) throw config_error(lineno, "expected 'shape NAME r,c ...'");
            const std::string& name = args[0];
            if (base_shape_rank(name) >= 0) {
                throw config_error(lineno, "shape name '" + name + "' shadows a built-in");
            }
            if (std::any_of(custom.begin(), custom.end(),
                            [&](const Shape& s) { return s.name == name; })) {
                throw config_error(lineno, "duplicate shape name '" + name + "'");
            }
            std::vector<Cell> cells;
            for (std::size_t i = 1; i < args.size(); ++i) {
                Cell c;
                if (!parse_cell(args[i], c)) {
                    throw config_error(lineno, "bad cell '" + args[i] + "', expected r,c");
                }
                cells.push_back(c);
            }
            try {
                custom.push_back(make_shape(name, std::move(cells)));
            } catch (const std::invalid_argument& e) {
                throw config_error(lineno, e.what());
            }
        } else if (directive == "piece") {
            int count = 0;
            if (args.size() != 2 || !parse_int(args[1], count) || count < 1) {
                throw config_error(lineno, "expected 'piece NAME COUNT' with COUNT >= 1");
            }
            for (const auto& [name, cnt, ln] : piece_lines) {
                if (name == args[0]) {
                    throw config_error(lineno, "duplicate piece directive for '" + args[0] + "'");
                }
            }
            piece_lines.emplace_back(args[0], count, lineno);
        } else {
            throw config_error(lineno, "unknown directive '" + directive + "'");
        }
    }

    if (!board_seen) throw config_error(lineno, "missing board directive");
    if (piece_lines.empty()) throw config_error(lineno, "no piece directives");

    // Built-ins first in canonical I, O, L, T, S order, then customs in
    // declaration order.
    std::stable_sort(piece_lines.begin(), piece_lines.end(),
                     [](const auto& a, const auto& b) {
                         int ra = base_shape_rank(std::get<0>(a));
                         int rb = base_shape_rank(std::get<0>(b));
                         if ((ra >= 0) != (rb >= 0)) return ra >= 0;
                         if (ra >= 0) return ra < rb;
                         return false;  // customs keep declaration order
                     });

    PuzzleInstance instance;
    instance.board = board;
    for (const auto& [name, count, ln] : piece_lines) {
        const Shape* base = find_base_shape(name);
        if (base != nullptr) {
            instance.pieces.push_back({*base, count});
            continue;
        }
        auto it = std::find_if(custom.begin(), custom.end(),
                               [&](const Shape& s) { return s.name == name; });
        if (it == custom.end()) {
            throw config_error(ln, "piece references unknown shape '" + name + "'");
        }
        instance.pieces.push_back({*it, count});
    }
    return instance;
}

PuzzleInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

PuzzleInstance default_instance() {
    return make_instance("5x8", "I:2,O:2,L:2,T:2,S:2");
}

PuzzleInstance make_instance(const std::string& board_spec,
                             const std::string& pieces_spec) {
    std::ostringstream config;
    config << "board " << board_spec << "\n";
    std::istringstream in(pieces_spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("bad piece entry '" + item + "', expected NAME:COUNT");
        }
        config << "piece " << item.substr(0, colon) << " " << item.substr(colon + 1) << "\n";
    }
    return parse_instance(config.str());
}

std::string format_instance(const PuzzleInstance& instance) {
    std::ostringstream out;
    out << "board " << instance.board.width << "x" << instance.board.height << "\n";
    for (const auto& p : instance.pieces) {
        if (find_base_shape(p.shape.name) == nullptr) {
            out << "shape " << p.shape.name;
            for (const auto& c : p.shape.cells) out << " " << c.row << "," << c.col;
            out << "\n";
        }
    }
    for (const auto& p : instance.pieces) {
        out << "piece " << p.shape.name << " " << p.count << "\n";
    }
    return out.str();
}

}  // namespace tilequbo
