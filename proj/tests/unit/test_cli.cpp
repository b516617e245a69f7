// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool against the fixture documents.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "spslab/document.hpp"
#include "spslab/sps.hpp"

using namespace spslab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SPSLAB_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(SPSLAB_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("check passes a valid document with exit 0") {
    const RunResult r = run_cli("check " + fixture("discrete2.sps"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: pass") != std::string::npos);
    CHECK(r.output.find("input-digest: fnv1a64:") != std::string::npos);
}

TEST_CASE("check rejects a family missing the full set with exit 2") {
    const RunResult r = run_cli("check " + fixture("missing-top.sps"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("top-actual-everywhere: fail") != std::string::npos);
}

TEST_CASE("check reports a parse error with exit 1") {
    const RunResult r = run_cli("check " + fixture("truncated.sps"));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("ParseError") != std::string::npos);
    CHECK(r.output.find("line 4") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::string args = "analyze " + fixture("mo2.sps") + " --classical --thm3";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("analysis of the four-atom antichain finds the bounds everywhere") {
    const RunResult r =
        run_cli("analyze " + fixture("mo2.sps") + " --classical --topological --thm3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classical-properties: [] [a astar b bstar]") != std::string::npos);
    CHECK(r.output.find("topological-properties: [] [a astar b bstar]") != std::string::npos);
    CHECK(r.output.find("three-way-equal: yes") != std::string::npos);
    CHECK(r.output.find("totally-nonclassical: yes") != std::string::npos);
}

TEST_CASE("ortho search on the projective fixture reports absence with exit 2") {
    const RunResult r = run_cli("analyze " + fixture("fano.sps") + " --ortho-search");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no orthocomplementation exists") != std::string::npos);
}

TEST_CASE("analysis of the additive two-point system") {
    const RunResult r = run_cli("analyze " + fixture("sierpinski.sps") + " --topological");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("t-classical: yes") != std::string::npos);
    CHECK(r.output.find("topological-state-count: 2") != std::string::npos);
}

TEST_CASE("classical analysis without complement pairs fails with exit 2") {
    const RunResult r = run_cli("analyze " + fixture("sierpinski.sps") + " --classical");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("InvalidOrtho") != std::string::npos);
}

TEST_CASE("decompose writes summand documents that pass check") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "spslab-cli-decompose";
    std::filesystem::create_directories(dir);
    const RunResult r =
        run_cli("decompose " + fixture("discrete2.sps") + " --out-dir " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("count: 2") != std::string::npos);
    for (int k = 0; k < 2; ++k) {
        const std::string part = (dir / ("discrete2.summand-" + std::to_string(k) + ".sps")).string();
        const RunResult check = run_cli("check " + part);
        CHECK(check.exit_code == 0);
    }
    const RunResult no_ortho = run_cli("decompose " + fixture("sierpinski.sps"));
    CHECK(no_ortho.exit_code == 2);
}

TEST_CASE("model build emits a document that passes check") {
    const std::filesystem::path out =
        std::filesystem::temp_directory_path() / "spslab-cli-ico.sps";
    const RunResult build =
        run_cli("model build --preset icosahedron --epsilon 1 --out " + out.string());
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("properties: 14") != std::string::npos);

    const RunResult check = run_cli("check " + out.string());
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("verdict: pass") != std::string::npos);

    // without --out the document itself goes to stdout
    const RunResult direct = run_cli("model build --preset icosahedron --epsilon 1");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.rfind("sps\n", 0) == 0);
    const ParsedDocument parsed = parse_document(direct.output);
    CHECK(sps_from_document(*parsed.sps).property_count() == 14);
}

TEST_CASE("seeded simulation matches the analytic value and echoes the seed") {
    const RunResult r =
        run_cli("model simulate --theta 60 --epsilon 1 --d 0 --n 100000 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed: 7") != std::string::npos);
    CHECK(r.output.find("analytic-probability") != std::string::npos);
    // frequency column: up-count close to 75000 (4-sigma window is ~548)
    const std::string row = r.output.substr(r.output.find("1 0 0 100000"));
    const long long ups = std::stoll(row.substr(13));
    CHECK(std::llabs(ups - 75000) < 600);

    const RunResult again =
        run_cli("model simulate --theta 60 --epsilon 1 --d 0 --n 100000 --seed 7");
    CHECK(again.output == r.output);
}

TEST_CASE("sweep table endpoints") {
    const RunResult r =
        run_cli("model sweep --preset icosahedron --eps 1,0.01 --d-resolution 41");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 14 2 66 no") != std::string::npos);
    CHECK(r.output.find("0.01 4096 4096 0 yes") != std::string::npos);
    CHECK(r.output.find("defect-decreased: yes") != std::string::npos);
}

TEST_CASE("counterexample search reports the witness and honors the size cap") {
    const RunResult r = run_cli("model counterexample --preset icosahedron");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("found: yes") != std::string::npos);
    CHECK(r.output.find("join-image-size: 12") != std::string::npos);
    CHECK(r.output.find("union-image-size: 7") != std::string::npos);
    CHECK(r.output.find("exceeds the size cap 64") != std::string::npos);
}

TEST_CASE("the size cap environment variable reaches the enumeration") {
    const std::string command = std::string("SPSLAB_SIZE_CAP=128 ") +
                                SPSLAB_CLI_PATH + " model counterexample --preset icosahedron";
    RunResult env_run;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        env_run.output.append(buffer.data(), n);
    env_run.exit_code = WEXITSTATUS(pclose(pipe));
    CHECK(env_run.exit_code == 0);
    CHECK(env_run.output.find("orthocomplementations: 1") != std::string::npos);
}

TEST_CASE("state identities and coverage run from the document battery") {
    const RunResult r =
        run_cli("analyze " + fixture("discrete2.sps") + " --prop2 --coverage");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("unconditional: pass") != std::string::npos);
    CHECK(r.output.find("operational-condition: holds") != std::string::npos);
    CHECK(r.output.find("state-join-identity: pass") != std::string::npos);
    CHECK(r.output.find("topological-partition: yes") != std::string::npos);
    CHECK(r.output.find("operational-partition: yes") != std::string::npos);
}

TEST_CASE("lattice documents validate through check") {
    const RunResult r = run_cli("check " + fixture("diamond.lat"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("boolean: yes") != std::string::npos);
    CHECK(r.output.find("verdict: pass") != std::string::npos);
}

TEST_CASE("model config files drive build and the result re-checks") {
    const std::filesystem::path out =
        std::filesystem::temp_directory_path() / "spslab-cli-cfg.sps";
    const RunResult build =
        run_cli("model build --config " + fixture("ico-model.cfg") + " --out " + out.string());
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("properties: 106") != std::string::npos);
    CHECK(build.output.find("tests: 12") != std::string::npos);
    const RunResult check = run_cli("check " + out.string());
    CHECK(check.exit_code == 0);
}

TEST_CASE("a covering cycle is rejected as not a partial order") {
    const RunResult r = run_cli("check " + fixture("cyclic.lat"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("NotAPartialOrder") != std::string::npos);
}

TEST_CASE("failing complement pairs turn check red") {
    const RunResult r = run_cli("check " + fixture("bad-ortho.sps"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("meet-complement: fail") != std::string::npos);
}

TEST_CASE("config-driven simulation emits one row per direction and grid point") {
    const RunResult r = run_cli("model simulate --config " + fixture("ico-model.cfg") +
                                " --n 1000 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed: 3") != std::string::npos);
    std::size_t rows = 0;
    for (std::size_t at = r.output.find("\n0 0 "); at != std::string::npos;
         at = r.output.find("\n0 0 ", at + 1))
        ++rows;
    CHECK(rows == 12);  // twelve directions, degenerate grid
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("check").exit_code == 1);
    CHECK(run_cli("frobnicate x").exit_code == 1);
    CHECK(run_cli("check /nonexistent/file.sps").exit_code == 1);
}
