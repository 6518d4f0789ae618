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
// End-to-end tests against the installed command line binary. The binary
// path is injected at build time; stdout must be byte-stable for fixed
// inputs and seeds, and exit codes must follow the documented scheme
// (0 valid, 1 no solution, 2 usage, 3 parse).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef TILEQUBO_CLI_PATH
#error "TILEQUBO_CLI_PATH must be defined by the build"
#endif

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CommandResult run_shell(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

CommandResult run_cli(const std::string& args) {
    return run_shell(std::string(TILEQUBO_CLI_PATH) + " " + args +
                     " 2>/dev/null");
}

CommandResult run_cli_stdin(const std::string& input, const std::string& args) {
    return run_shell("printf '%s' '" + input + "' | " +
                     std::string(TILEQUBO_CLI_PATH) + " " + args +
                     " 2>/dev/null");
}

}  // namespace

TEST_CASE("placements prints the golden summary") {
    auto r = run_cli("placements");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "board 5x8\n"
          "shape I placements 41\n"
          "shape O placements 28\n"
          "shape L placements 180\n"
          "shape T placements 90\n"
          "shape S placements 90\n"
          "total 429\n"
          "combinations 80095152660390000\n"
          "combinations_approx 8.01e+16\n");
}

TEST_CASE("fixed seeds give byte-identical output") {
    std::string args = "solve --board 4x4 --pieces O:4 --method sa --seed 7";
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    std::string experiment =
        "experiment --board 4x4 --pieces O:4 --method tabu --runs 4 --seed 2 "
        "--per-run";
    auto once = run_cli(experiment);
    auto twice = run_cli(experiment);
    CHECK(once.exit_code == 0);
    CHECK(once.output == twice.output);
    CHECK(once.output.find("valid 4\n") != std::string::npos);
    CHECK(once.output.find("distinct_valid_solutions 1\n") !=
          std::string::npos);
}

TEST_CASE("exact count on tiny boards") {
    auto one = run_cli("exact-count --board 2x2 --pieces O:1");
    CHECK(one.exit_code == 0);
    CHECK(one.output.find("solutions 1\n") != std::string::npos);

    auto none = run_cli("exact-count --board 4x2 --pieces O:1,S:1");
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("solutions 0\n") != std::string::npos);
}

TEST_CASE("solve exact exits zero with a valid render") {
    auto r = run_cli("solve --board 4x2 --pieces O:2 --method exact");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("energy 0\n") != std::string::npos);
    CHECK(r.output.find("OOOO\n") != std::string::npos);
    CHECK(r.output.find("valid true\n") != std::string::npos);

    auto miss = run_cli("solve --board 4x2 --pieces O:1,S:1 --method exact");
    CHECK(miss.exit_code == 1);
    CHECK(miss.output.find("solutions_found 0\n") != std::string::npos);
}

TEST_CASE("validate distinguishes good and bad assignments") {
    auto good = run_cli_stdin("placements 0 2",
                              "validate --board 4x2 --pieces O:2 --assignment -");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("valid true\n") != std::string::npos);

    auto bad = run_cli_stdin("bits 110",
                             "validate --board 4x2 --pieces O:2 --assignment -");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("valid false\n") != std::string::npos);

    auto garbage = run_cli_stdin(
        "bits 2", "validate --board 4x2 --pieces O:2 --assignment -");
    CHECK(garbage.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("solve --method warp").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("placements --board 0x4").exit_code == 2);
    CHECK(run_cli("experiment --method exact --runs 1").exit_code == 2);
}

TEST_CASE("convert round trips through every format") {
    std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                        : "/tmp");
    std::string base = dir + "/tilequbo_cli_test_model";
    auto built = run_cli("build-qubo --board 4x4 --pieces O:4 -o " + base +
                         ".qubo");
    REQUIRE(built.exit_code == 0);

    auto to_json = run_cli("convert --in " + base + ".qubo --to json -o " +
                           base + ".json");
    CHECK(to_json.exit_code == 0);
    auto to_ising = run_cli("convert --in " + base + ".json --to ising-json -o " +
                            base + ".ising.json");
    CHECK(to_ising.exit_code == 0);
    auto back = run_cli("convert --in " + base + ".ising.json --to qubo");
    CHECK(back.exit_code == 0);

    std::ifstream original(base + ".qubo");
    std::string expected((std::istreambuf_iterator<char>(original)),
                         std::istreambuf_iterator<char>());
    CHECK(back.output == expected);

    auto broken = run_cli_stdin("p qubo nonsense", "convert --in - --to qubo");
    CHECK(broken.exit_code == 3);
}

TEST_CASE("render draws a board from stdin") {
    auto r = run_cli_stdin("placements 0 2",
                           "render --board 4x2 --pieces O:2 --assignment -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "OOOO\nOOOO\n");
}
