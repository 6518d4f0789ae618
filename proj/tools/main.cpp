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
//
// tilequbo: tiling puzzles as QUBO problems, end to end. Subcommands cover
// placement enumeration, model building and interchange, solving (annealing,
// tabu, decomposition, exact cover), validation, rendering, and the seeded
// success-rate experiment. All stdout is line oriented and stable for fixed
// inputs and seeds; timing goes to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tilequbo/catalog.hpp>
#include <tilequbo/decompose.hpp>
#include <tilequbo/exact_cover.hpp>
#include <tilequbo/instance.hpp>
#include <tilequbo/ising.hpp>
#include <tilequbo/qubo.hpp>
#include <tilequbo/qubo_io.hpp>
#include <tilequbo/solvers.hpp>
#include <tilequbo/tiling.hpp>

#include "harness.hpp"

namespace {

using namespace tilequbo;

constexpr int kExitValid = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct InstanceOpts {
    std::string config_path;
    std::string board;
    std::string pieces;
};

void add_instance_opts(CLI::App* cmd, InstanceOpts& opts) {
    cmd->add_option("--config", opts.config_path,
                    "Instance config file (see README for the format)");
    cmd->add_option("--board", opts.board, "Board as WxH, e.g. 5x8");
    cmd->add_option("--pieces", opts.pieces,
                    "Piece multiset as NAME:COUNT[,NAME:COUNT...]");
}

PuzzleInstance resolve_instance(const InstanceOpts& opts) {
    if (!opts.config_path.empty()) {
        if (!opts.board.empty() || !opts.pieces.empty()) {
            throw std::invalid_argument("--config excludes --board/--pieces");
        }
        return load_instance(opts.config_path);
    }
    if (opts.board.empty() && opts.pieces.empty()) return default_instance();
    std::string board = opts.board.empty() ? "5x8" : opts.board;
    std::string pieces =
        opts.pieces.empty() ? "I:2,O:2,L:2,T:2,S:2" : opts.pieces;
    return make_instance(board, pieces);
}

PenaltyWeights parse_weights(const std::string& text) {
    PenaltyWeights w;
    if (text.empty()) return w;
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            w.piece = w.cover = std::stod(text);
        } else {
            w.piece = std::stod(text.substr(0, comma));
            w.cover = std::stod(text.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --weights '" + text +
                                    "', expected A,B");
    }
    if (w.piece <= 0 || w.cover <= 0) {
        throw std::invalid_argument("--weights must be positive");
    }
    return w;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "'");
    out << text;
}

/// Accepts either "bits <01...>", "placements <i> <j> ...", a bare 0/1
/// string of length n, or a bare list of placement indices. Lines starting
/// with # are comments.
Assignment parse_assignment_text(const std::string& text, int n) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word) tokens.push_back(word);
    }
    if (tokens.empty()) throw parse_error(0, "empty assignment");

    auto bits_from = [&](const std::string& s) {
        if (static_cast<int>(s.size()) != n) {
            throw parse_error(0, "bit string length " +
                                     std::to_string(s.size()) + ", expected " +
                                     std::to_string(n));
        }
        Assignment x(s.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') {
                throw parse_error(0, "bit string must be 0s and 1s");
            }
            x[i] = s[i] == '1';
        }
        return x;
    };

    std::size_t from = 0;
    bool as_bits = false;
    if (tokens[0] == "bits" || tokens[0] == "placements") {
        as_bits = tokens[0] == "bits";
        from = 1;
        if (tokens.size() == 1 && !as_bits) return Assignment(n, 0);
        if (tokens.size() < 2) throw parse_error(0, "missing assignment data");
    } else if (tokens.size() == 1 &&
               tokens[0].find_first_not_of("01") == std::string::npos &&
               static_cast<int>(tokens[0].size()) == n) {
        as_bits = true;
    }
    if (as_bits) {
        if (tokens.size() - from != 1) {
            throw parse_error(0, "expected a single bit string");
        }
        return bits_from(tokens[from]);
    }
    Assignment x(n, 0);
    for (std::size_t t = from; t < tokens.size(); ++t) {
        int index = 0;
        try {
            index = std::stoi(tokens[t]);
        } catch (const std::exception&) {
            throw parse_error(0, "bad placement index '" + tokens[t] + "'");
        }
        if (index < 0 || index >= n) {
            throw parse_error(0, "placement index " + std::to_string(index) +
                                     " out of range [0, " + std::to_string(n) +
                                     ")");
        }
        x[index] = 1;
    }
    return x;
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    ~Timer() {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::fprintf(stderr, "time_ms %.1f\n", ms);
    }
};

struct SolverFlags {
    std::optional<int> sweeps;
    std::optional<double> temp_initial;
    std::optional<double> temp_final;
    std::optional<int> tenure;
    std::optional<std::int64_t> tabu_iters;
    std::optional<std::int64_t> stall_limit;
    std::optional<double> target;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--sweeps", sweeps, "Annealing sweeps");
        cmd->add_option("--temp-initial", temp_initial,
                        "Initial annealing temperature");
        cmd->add_option("--temp-final", temp_final,
                        "Final annealing temperature");
        cmd->add_option("--tenure", tenure, "Tabu tenure");
        cmd->add_option("--tabu-iters", tabu_iters, "Tabu iteration cap");
        cmd->add_option("--stall-limit", stall_limit,
                        "Non-improving iterations before a solver stops");
        cmd->add_option("--target", target, "Early-exit energy target");
    }

    SolverConfig build() const {
        SolverConfig sc;
        if (sweeps) sc.sa_sweeps = *sweeps;
        if (temp_initial) sc.sa_temp_initial = *temp_initial;
        if (temp_final) sc.sa_temp_final = *temp_final;
        if (tenure) sc.tabu_tenure = *tenure;
        if (tabu_iters) sc.tabu_max_iterations = *tabu_iters;
        if (stall_limit) sc.stall_limit = *stall_limit;
        if (target) sc.target_energy = *target;
        sc.validate();
        return sc;
    }
};

struct DecomposeFlags {
    int sub_size = 50;
    int max_rounds = 1000;
    int stall_rounds = 3;
    std::string subsolver = "tabu";
    bool random_start = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--sub-size", sub_size, "SubQUBO variable bound")
            ->capture_default_str();
        cmd->add_option("--max-rounds", max_rounds, "Round cap")
            ->capture_default_str();
        cmd->add_option("--stall-rounds", stall_rounds,
                        "Consecutive non-improving rounds before stopping")
            ->capture_default_str();
        cmd->add_option("--subsolver", subsolver,
                        "SubQUBO solver: tabu, sa, brute")
            ->check(CLI::IsMember({"tabu", "sa", "brute"}))
            ->capture_default_str();
        cmd->add_flag("--random-start", random_start,
                      "Start from a random assignment instead of all zeros");
    }

    DecomposeConfig build() const {
        DecomposeConfig dc;
        dc.sub_size = sub_size;
        dc.max_rounds = max_rounds;
        dc.stall_rounds = stall_rounds;
        if (subsolver == "sa") {
            dc.subsolver = Subsolver::simulated_annealing;
        } else if (subsolver == "brute") {
            dc.subsolver = Subsolver::brute_force;
        }
        dc.random_start = random_start;
        dc.validate();
        return dc;
    }
};

harness::Method parse_method(const std::string& name) {
    if (name == "sa") return harness::Method::sa;
    if (name == "tabu") return harness::Method::tabu;
    if (name == "decompose") return harness::Method::decompose;
    if (name == "exact") return harness::Method::exact;
    throw std::invalid_argument("unknown method '" + name + "'");
}

int cmd_placements(const InstanceOpts& iopts, bool full) {
    PuzzleInstance instance = resolve_instance(iopts);
    PlacementCatalog catalog = enumerate_placements(instance);
    std::ostringstream out;
    out << "board " << instance.board.width << "x" << instance.board.height
        << "\n";
    for (int s = 0; s < catalog.num_shapes(); ++s) {
        out << "shape " << catalog.shapes[s].name << " placements "
            << catalog.shape_ranges[s].size() << "\n";
    }
    out << "total " << catalog.num_placements() << "\n";
    bigint combos = combination_count(catalog);
    out << "combinations " << combos << "\n";
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.2e",
                  combos.convert_to<double>());
    out << "combinations_approx " << approx << "\n";
    if (full) out << export_catalog(catalog);
    std::cout << out.str();
    return kExitValid;
}

int cmd_build_qubo(const InstanceOpts& iopts, const std::string& weights_text,
                   const std::string& format, const std::string& out_path) {
    PuzzleInstance instance = resolve_instance(iopts);
    PenaltyWeights weights = parse_weights(weights_text);
    PlacementCatalog catalog = enumerate_placements(instance);
    Qubo q = build_qubo(catalog, weights);
    ModelMetadata meta{catalog_hash(catalog), weights};
    std::string text;
    if (format == "qubo") {
        text = export_qubo(q);
    } else if (format == "json") {
        text = qubo_to_json(q, meta);
    } else {
        text = ising_to_json(to_ising(q), meta);
    }
    write_output(out_path, text);
    std::fprintf(stderr, "variables %d quadratic_terms %zu offset %g\n",
                 q.num_variables(), q.quadratic().size(), q.offset());
    return kExitValid;
}

void print_solution(std::ostream& out, const Assignment& x,
                    const PlacementCatalog& catalog,
                    const PuzzleInstance& instance,
                    const ValidationReport& report) {
    Tiling tiling = decode(x, catalog);
    out << "placements";
    for (const auto& pl : tiling.chosen) out << " " << pl.index;
    out << "\n";
    out << render(tiling, catalog.board);
    out << format_report(report, instance);
}

int cmd_solve(const InstanceOpts& iopts, const std::string& weights_text,
              const std::string& method_name, std::uint64_t seed,
              const DecomposeFlags& dflags, const SolverFlags& sflags,
              bool with_trace) {
    Timer timer;
    PuzzleInstance instance = resolve_instance(iopts);
    if (!instance.area_matches()) {
        std::fprintf(stderr,
                     "warning: piece area %d differs from board area %d; no "
                     "valid tiling exists\n",
                     instance.piece_area(), instance.board.area());
    }
    PlacementCatalog catalog = enumerate_placements(instance);
    harness::Method method = parse_method(method_name);
    std::ostringstream out;
    out << "method " << method_name << "\n";

    if (method == harness::Method::exact) {
        CoverProblem cover = build_cover_problem(catalog);
        auto solutions = enumerate_exact(cover, 1);
        out << "solutions_found " << solutions.size() << "\n";
        if (solutions.empty()) {
            std::cout << out.str();
            return kExitNoSolution;
        }
        Qubo q = build_qubo(catalog, parse_weights(weights_text));
        Assignment x =
            assignment_from_solution(solutions.front(), q.num_variables());
        ValidationReport report = validate(decode(x, catalog), instance);
        out << "energy " << q.energy(x) << "\n";
        print_solution(out, x, catalog, instance, report);
        std::cout << out.str();
        return report.is_valid ? kExitValid : kExitNoSolution;
    }

    Qubo q = build_qubo(catalog, parse_weights(weights_text));
    DecomposeConfig dc = dflags.build();
    SolverConfig sc = sflags.build();
    std::vector<RoundTrace> trace;
    SolveResult result = harness::run_method(
        q, method, dc, sc, seed,
        with_trace && method == harness::Method::decompose ? &trace : nullptr);
    ValidationReport report =
        validate(decode(result.best_assignment, catalog), instance);

    out << "seed " << seed << "\n";
    for (const auto& row : trace) {
        out << "trace round " << row.round << " size " << row.subset_size
            << " before " << row.energy_before << " after " << row.energy_after
            << " accepted " << (row.accepted ? 1 : 0) << " solves "
            << row.subproblem_solves << "\n";
    }
    out << "energy " << result.best_energy << "\n";
    out << "iterations " << result.iterations << "\n";
    if (method == harness::Method::decompose) {
        out << "subproblem_solves " << result.subproblem_solves << "\n";
    }
    print_solution(out, result.best_assignment, catalog, instance, report);
    std::cout << out.str();
    return report.is_valid ? kExitValid : kExitNoSolution;
}

int cmd_exact_count(const InstanceOpts& iopts, std::int64_t limit,
                    const std::string& dump_path) {
    Timer timer;
    PuzzleInstance instance = resolve_instance(iopts);
    PlacementCatalog catalog = enumerate_placements(instance);
    CoverProblem cover = build_cover_problem(catalog);
    std::optional<std::int64_t> cap;
    if (limit > 0) cap = limit + 1;  // one extra detects truncation
    auto solutions = enumerate_exact(cover, cap);
    bool truncated = limit > 0 && std::ssize(solutions) > limit;
    if (truncated) solutions.resize(static_cast<std::size_t>(limit));

    std::ostringstream out;
    out << "solutions " << solutions.size() << "\n";
    out << "limit_reached " << (truncated ? "true" : "false") << "\n";
    if (!truncated) {
        SymmetrySummary summary =
            classify_by_board_symmetry(solutions, catalog);
        out << "symmetry_classes " << summary.num_classes << "\n";
        for (const auto& [size, classes] : summary.orbit_sizes) {
            out << "orbit_size " << size << " classes " << classes << "\n";
        }
    }
    std::cout << out.str();
    if (!dump_path.empty()) write_output(dump_path, dump_solutions(solutions));
    return truncated ? kExitNoSolution : kExitValid;
}

int cmd_experiment(const InstanceOpts& iopts, const std::string& weights_text,
                   const std::string& method_name, int runs,
                   std::uint64_t base_seed, int jobs,
                   const DecomposeFlags& dflags, const SolverFlags& sflags,
                   bool per_run) {
    Timer timer;
    PuzzleInstance instance = resolve_instance(iopts);
    PlacementCatalog catalog = enumerate_placements(instance);
    Qubo q = build_qubo(catalog, parse_weights(weights_text));
    harness::Method method = parse_method(method_name);
    if (method == harness::Method::exact) {
        throw std::invalid_argument("experiment methods: sa, tabu, decompose");
    }
    harness::ExperimentResult result =
        harness::run_experiment(q, catalog, instance, method, dflags.build(),
                                sflags.build(), base_seed, runs, jobs);
    std::ostringstream out;
    out << "method " << method_name << "\n";
    out << "base_seed " << base_seed << "\n";
    if (per_run) {
        for (std::size_t i = 0; i < result.records.size(); ++i) {
            const auto& rec = result.records[i];
            out << "run " << i << " seed " << rec.seed << " energy "
                << rec.energy << " valid " << (rec.valid ? 1 : 0)
                << " defects " << rec.defect_cells << " solves "
                << rec.subproblem_solves << "\n";
        }
    }
    out << harness::format_stats(result.stats);
    std::cout << out.str();
    return result.stats.valid_count > 0 ? kExitValid : kExitNoSolution;
}

int cmd_validate(const InstanceOpts& iopts, const std::string& weights_text,
                 const std::string& assignment_path, bool with_render) {
    PuzzleInstance instance = resolve_instance(iopts);
    PlacementCatalog catalog = enumerate_placements(instance);
    Qubo q = build_qubo(catalog, parse_weights(weights_text));
    Assignment x =
        parse_assignment_text(read_input(assignment_path), q.num_variables());
    ValidationReport report = validate(decode(x, catalog), instance);
    std::ostringstream out;
    out << "energy " << q.energy(x) << "\n";
    if (with_render) out << render(decode(x, catalog), catalog.board);
    out << format_report(report, instance);
    std::cout << out.str();
    return report.is_valid ? kExitValid : kExitNoSolution;
}

int cmd_render(const InstanceOpts& iopts, const std::string& assignment_path) {
    PuzzleInstance instance = resolve_instance(iopts);
    PlacementCatalog catalog = enumerate_placements(instance);
    Assignment x = parse_assignment_text(read_input(assignment_path),
                                         catalog.num_placements());
    std::cout << render(decode(x, catalog), catalog.board);
    return kExitValid;
}

int cmd_convert(const std::string& in_path, const std::string& to,
                const std::string& out_path) {
    std::string text = read_input(in_path);
    auto first = text.find_first_not_of(" \t\r\n");
    bool is_json = first != std::string::npos && text[first] == '{';

    Qubo q;
    if (is_json) {
        std::string kind = json_model_kind(text);
        if (kind == "ising") {
            q = from_ising(ising_from_json(text));
        } else {
            q = qubo_from_json(text);
        }
    } else {
        q = parse_qubo(text);
    }

    std::string converted;
    if (to == "qubo") {
        converted = export_qubo(q);
    } else if (to == "json") {
        converted = qubo_to_json(q);
    } else {
        converted = ising_to_json(to_ising(q));
    }
    write_output(out_path, converted);
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tiling puzzles as QUBO/Ising problems"};
    app.require_subcommand(1);

    InstanceOpts iopts;
    std::string weights_text;
    std::string method = "decompose";
    std::string format = "qubo";
    std::string out_path;
    std::string assignment_path;
    std::string dump_path;
    std::string convert_in;
    std::string convert_to = "qubo";
    std::uint64_t seed = 1;
    std::int64_t limit = 0;
    int runs = 100;
    int jobs = 1;
    bool full = false;
    bool with_trace = false;
    bool per_run = false;
    bool with_render = false;
    DecomposeFlags dflags;
    SolverFlags sflags;

    auto* placements =
        app.add_subcommand("placements", "Enumerate piece placements");
    add_instance_opts(placements, iopts);
    placements->add_flag("--full", full, "Dump the whole catalog");

    auto* build =
        app.add_subcommand("build-qubo", "Build and export the penalty model");
    add_instance_opts(build, iopts);
    build->add_option("--weights", weights_text, "Penalty weights A,B");
    build->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"qubo", "json", "ising-json"}))
        ->capture_default_str();
    build->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* solve = app.add_subcommand("solve", "Solve one instance");
    add_instance_opts(solve, iopts);
    solve->add_option("--weights", weights_text, "Penalty weights A,B");
    solve->add_option("--method", method, "sa, tabu, decompose, or exact")
        ->check(CLI::IsMember({"sa", "tabu", "decompose", "exact"}))
        ->capture_default_str();
    solve->add_option("--seed", seed, "Random seed")->capture_default_str();
    solve->add_flag("--trace", with_trace, "Print per-round trace lines");
    dflags.add_to(solve);
    sflags.add_to(solve);

    auto* count =
        app.add_subcommand("exact-count", "Count tilings by exact cover");
    add_instance_opts(count, iopts);
    count->add_option("--limit", limit,
                      "Stop after this many solutions (0 = exhaustive)");
    count->add_option("--dump", dump_path, "Write solution lines to a file");

    auto* experiment =
        app.add_subcommand("experiment", "Seeded success-rate experiment");
    add_instance_opts(experiment, iopts);
    experiment->add_option("--weights", weights_text, "Penalty weights A,B");
    experiment->add_option("--method", method, "sa, tabu, or decompose")
        ->check(CLI::IsMember({"sa", "tabu", "decompose"}))
        ->capture_default_str();
    experiment->add_option("--runs", runs, "Number of seeded runs")
        ->capture_default_str();
    experiment->add_option("--seed", seed, "Base seed; run r uses base + r")
        ->capture_default_str();
    experiment->add_option("--jobs", jobs, "Concurrent runs")
        ->capture_default_str();
    experiment->add_flag("--per-run", per_run, "Print one line per run");
    dflags.add_to(experiment);
    sflags.add_to(experiment);

    auto* validate_cmd =
        app.add_subcommand("validate", "Validate an assignment");
    add_instance_opts(validate_cmd, iopts);
    validate_cmd->add_option("--weights", weights_text, "Penalty weights A,B");
    validate_cmd
        ->add_option("--assignment", assignment_path,
                     "Assignment file, or - for stdin")
        ->required();
    validate_cmd->add_flag("--render", with_render, "Include the board");

    auto* render_cmd = app.add_subcommand("render", "Draw an assignment");
    add_instance_opts(render_cmd, iopts);
    render_cmd
        ->add_option("--assignment", assignment_path,
                     "Assignment file, or - for stdin")
        ->required();

    auto* convert = app.add_subcommand("convert", "Convert model formats");
    convert->add_option("--in", convert_in, "Input file, or - for stdin")
        ->required();
    convert->add_option("--to", convert_to, "Target format")
        ->check(CLI::IsMember({"qubo", "json", "ising-json"}))
        ->capture_default_str();
    convert->add_option("-o,--output", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*placements) return cmd_placements(iopts, full);
        if (*build) return cmd_build_qubo(iopts, weights_text, format, out_path);
        if (*solve) {
            return cmd_solve(iopts, weights_text, method, seed, dflags, sflags,
                             with_trace);
        }
        if (*count) return cmd_exact_count(iopts, limit, dump_path);
        if (*experiment) {
            return cmd_experiment(iopts, weights_text, method, runs, seed, jobs,
                                  dflags, sflags, per_run);
        }
        if (*validate_cmd) {
            return cmd_validate(iopts, weights_text, assignment_path,
                                with_render);
        }
        if (*render_cmd) return cmd_render(iopts, assignment_path);
        if (*convert) return cmd_convert(convert_in, convert_to, out_path);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
