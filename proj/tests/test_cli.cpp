#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// End-to-end runs of the command line binary, located via ANGULATOR_BIN.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout, or stdout+stderr when merged
};

const char* binary() {
    const char* bin = std::getenv("ANGULATOR_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ANGULATOR_BIN must point at the angulator binary");
    return bin;
}

RunResult run(const std::string& args, const std::string& stdin_text = "",
              bool merge_stderr = false, const std::string& env_prefix = "") {
    std::filesystem::path stdin_path;
    std::string command = env_prefix + "\"" + std::string(binary()) + "\" " + args;
    if (!stdin_text.empty()) {
        stdin_path = std::filesystem::temp_directory_path() /
                     ("angulator_cli_stdin." + std::to_string(::getpid()));
        std::ofstream(stdin_path) << stdin_text;
        command += " < " + stdin_path.string();
    }
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";

    RunResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!stdin_path.empty()) std::filesystem::remove(stdin_path);
    return result;
}

std::filesystem::path write_model_file(const char* stem, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() /
                (std::string(stem) + "." + std::to_string(::getpid()) + ".json");
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("objects lists the canonical order") {
    auto r = run("objects --n 2 --d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1-3-5\n1-3-6\n1-4-6\n2-4-6\n2-4-7\n2-5-7\n3-5-7\n");

    auto rj = run("objects --fixture example-3-10 --format json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output ==
          "{\n  \"model\": {\n    \"fixture\": \"example-3-10\"\n  },\n"
          "  \"objects\": [\n    \"13\",\n    \"15\",\n    \"35\"\n  ],\n  \"set\": []\n}\n");
}

TEST_CASE("nc prints the dual set") {
    auto r = run("nc --n 2 --d 2 --set 135");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1-3-5,1-3-6,1-4-6,2-5-7,3-5-7\n");

    auto rj = run("nc --n 2 --d 2 --set 1-3-5,2-4-6 --format json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("\"nc\": [\n    \"1-3-6\",\n    \"1-4-6\",\n    \"2-5-7\"\n  ]") !=
          std::string::npos);

    // the empty result is an empty line in text form
    auto re = run("nc --fixture example-3-10 --set 13");
    CHECK(re.exit_code == 0);
    CHECK(re.output == "\n");
}

TEST_CASE("stdin streaming emits one result per line") {
    auto r = run("nc --n 2 --d 2 --set -", "135\n136,146\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1-3-5,1-3-6,1-4-6,2-5-7,3-5-7\n1-3-5,1-3-6,1-4-6,2-4-6\n");

    auto rj = run("nc --n 2 --d 2 --set - --format json", "135\n");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output ==
          "{\"model\":{\"d\":2,\"n\":2},\"nc\":[\"1-3-5\",\"1-3-6\",\"1-4-6\",\"2-5-7\","
          "\"3-5-7\"],\"set\":[\"1-3-5\"]}\n");
}

TEST_CASE("pairs output and strategies") {
    auto text = run("pairs --fixture example-3-10");
    CHECK(text.exit_code == 0);
    CHECK(text.output ==
          "x={} y={13,15,35} core={} class=Mixed\n"
          "x={13,15,35} y={} core={} class=Mixed\n");

    auto brute = run("pairs --n 2 --d 2 --format json --strategy brute");
    auto lectic = run("pairs --n 2 --d 2 --format json --strategy next-closure");
    auto automatic = run("pairs --n 2 --d 2 --format json");
    CHECK(brute.exit_code == 0);
    CHECK(brute.output == lectic.output);
    CHECK(brute.output == automatic.output);

    auto bad = run("pairs --n 2 --d 2 --strategy sideways", "", true);
    CHECK(bad.exit_code == 1);
}

TEST_CASE("classify text output") {
    auto r = run("classify --n 2 --d 3 --set 1357,1468,2479");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "MaximalRigidOnly\n");
    auto rj = run("classify --n 1 --d 1 --set 1-3 --format json");
    CHECK(rj.output.find("\"class\": \"ClusterTilting\"") != std::string::npos);
}

TEST_CASE("mutate moves a set") {
    auto fwd = run("mutate --n 3 --d 1 --set 1-3,3-5 --D 1-3 --direction fwd");
    CHECK(fwd.exit_code == 0);
    CHECK(fwd.output == "1-3,1-4\n");
    auto bwd = run("mutate --n 3 --d 1 --set 1-3,3-5 --D 1-3 --direction bwd");
    CHECK(bwd.output == "1-3,4-6\n");
    auto zero = run("mutate --n 2 --d 2 --set 1-3-5 --direction fwd");
    CHECK(zero.output == "2-4-7\n");

    auto missing = run("mutate --n 3 --d 1 --set 1-3", "", true);
    CHECK(missing.exit_code == 1); // --direction is required

    auto unsupported = run("mutate --n 2 --d 2 --set 1-3-5 --D 1-3-5 --direction fwd", "", true);
    CHECK(unsupported.exit_code == 1);
    CHECK(unsupported.output.find("d = 1") != std::string::npos);
}

TEST_CASE("subfactor output") {
    auto r = run("subfactor --n 3 --d 1 --D 1-3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "dset: 1-3\n"
          "cell 0: 1 2 3\n"
          "cell 1: 1 3 4 5 6\n"
          "1-4 -> cell 1 as 1-3\n"
          "1-5 -> cell 1 as 1-4\n"
          "3-5 -> cell 1 as 2-4\n"
          "3-6 -> cell 1 as 2-5\n"
          "4-6 -> cell 1 as 3-5\n");
}

TEST_CASE("checks report pass lines and exit zero") {
    auto r = run("check thm-3-14 --fixture example-3-10");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "theorem 3.14: PASS (64 instances checked)\n");

    auto r13 = run("check thm-4-13 --n 2 --d 2");
    CHECK(r13.exit_code == 0);
    CHECK(r13.output == "theorem 4.13: PASS (102 instances checked)\n");

    auto r11 = run("check thm-4-11 --n 3 --d 1 --D 1-3");
    CHECK(r11.exit_code == 0);
    CHECK(r11.output == "theorem 4.11: PASS (51 instances checked)\n");

    auto r12 = run("check prop-4-12 --n 3 --d 1 --D 1-3 --format json");
    CHECK(r12.exit_code == 0);
    CHECK(r12.output ==
          "{\n  \"counterexample\": null,\n  \"instances_checked\": 32,\n"
          "  \"passed\": true,\n  \"theorem\": \"4.12\"\n}\n");
}

TEST_CASE("a failing check exits with code two") {
    // shift swaps the objects but the ext table is not invariant under that
    auto path = write_model_file(
        "angulator_cli_bad",
        R"({"d": 1, "objects": ["a", "b"], "ext": [[true, false], [false, false]], "shift": [1, 0]})");
    auto r = run("check thm-4-13 --model-file " + path.string(), "", true);
    std::filesystem::remove(path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("theorem 4.13: FAIL") != std::string::npos);
    CHECK(r.output.find("reason") != std::string::npos);
}

TEST_CASE("capacity overruns exit with code three") {
    auto r = run("pairs --n 6 --d 1 --strategy brute", "", true);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("next-closure") != std::string::npos);

    auto ok = run("pairs --n 6 --d 1 --strategy next-closure --format json");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("usage errors exit with code one") {
    CHECK(run("", "", true).exit_code == 1);                      // no subcommand
    CHECK(run("objects", "", true).exit_code == 1);               // no model selected
    CHECK(run("objects --n 2", "", true).exit_code == 1);         // --d missing
    CHECK(run("objects --n 2 --d 2 --fixture example-3-10", "", true).exit_code == 1);
    CHECK(run("objects --fixture no-such-fixture", "", true).exit_code == 1);
    CHECK(run("nc --n 2 --d 2 --set 1-2-5", "", true).exit_code == 1);  // gap violation
    CHECK(run("nc --n 2 --d 2 --set 1-3", "", true).exit_code == 1);    // wrong arity
    CHECK(run("nc --n 2 --d 2 --set 1-3-9", "", true).exit_code == 1);  // out of range
    CHECK(run("quiver --n 2 --d 2 --kind sideways", "", true).exit_code == 1);
    CHECK(run("check thm-9-99 --n 2 --d 2", "", true).exit_code == 1);

    auto gap = run("nc --n 2 --d 2 --set 1-2-5", "", true);
    CHECK(gap.output.find("gap") != std::string::npos);
}

TEST_CASE("worker override is validated and deterministic") {
    auto bad = run("pairs --n 2 --d 2 --strategy brute", "", true, "ANGULATOR_THREADS=abc ");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("ANGULATOR_THREADS") != std::string::npos);

    auto one = run("pairs --n 5 --d 1 --format json", "", false, "ANGULATOR_THREADS=1 ");
    auto many = run("pairs --n 5 --d 1 --format json");
    CHECK(one.exit_code == 0);
    CHECK(one.output == many.output);
}

TEST_CASE("quiver subcommand") {
    auto r = run("quiver --n 1 --d 1 --kind ext");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "digraph ext {\n  edge [dir=none];\n  \"1-3\";\n  \"2-4\";\n  \"1-3\" -> \"2-4\";\n}\n");
    auto hom = run("quiver --fixture example-3-10");
    CHECK(hom.exit_code == 0);
    CHECK(hom.output.find("\"13\" -> \"15\";") != std::string::npos);
}

TEST_CASE("model files round trip through the cli") {
    auto path = write_model_file(
        "angulator_cli_fixture",
        R"({"d": 2, "objects": ["13", "15", "35"],
            "ext": [[true, false, true], [true, true, false], [false, true, true]],
            "shift": [1, 2, 0]})");
    auto pairs_from_file = run("pairs --model-file " + path.string());
    auto pairs_from_fixture = run("pairs --fixture example-3-10");
    std::filesystem::remove(path);
    CHECK(pairs_from_file.exit_code == 0);
    CHECK(pairs_from_file.output == pairs_from_fixture.output);

    auto missing = run("pairs --model-file /nonexistent/model.json", "", true);
    CHECK(missing.exit_code == 1);
}
