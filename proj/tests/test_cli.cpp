#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZGU_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& stem) {
    return std::string(ZGU_DATA_DIR) + "/" + stem + ".json";
}

}  // namespace

TEST_CASE("validate: exit 0 and a sane summary") {
    RunResult r = run_cli("validate " + fixture("a5"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("valid") != std::string::npos);
    CHECK(r.output.find("order 60") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").exit_code == 1);                                // missing subcommand
    CHECK(run_cli("frobnicate " + fixture("a5")).exit_code == 1);     // unknown subcommand
    CHECK(run_cli("check-zc").exit_code == 1);                        // missing table
    CHECK(run_cli("check-zc " + fixture("a5") + " --format yaml").exit_code == 1);
    CHECK(run_cli("check-zc " + fixture("a5") + " --order nope").exit_code == 1);
    CHECK(run_cli("check-zc " + fixture("a5") + " --brauer seven").exit_code == 1);
    // PAP mode without the assumption or the acknowledgement
    CHECK(run_cli("check-zc " + fixture("a5") + " --pap --order 2").exit_code == 1);
}

TEST_CASE("bad table paths are usage errors, malformed tables are data errors") {
    CHECK(run_cli("validate /nonexistent/table.json").exit_code == 1);
    const std::string path = "/tmp/zgu_cli_malformed.json";
    std::ofstream(path) << "{ not json";
    CHECK(run_cli("validate " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("resource limits exit 3") {
    RunResult r = run_cli("check-zc " + fixture("g216_153") + " --order 6 --budget 3");
    CHECK(r.exit_code == 3);
}

TEST_CASE("check-zc on A5 prints proven verdicts") {
    RunResult r = run_cli("check-zc " + fixture("a5"));
    CHECK(r.exit_code == 0);
    for (const char* line : {"zc order 2: proven", "zc order 3: proven", "zc order 5: proven",
                             "zc order 6: proven", "zc order 30: proven"})
        CHECK(r.output.find(line) != std::string::npos);
}

TEST_CASE("check-sp and check-pq on A5") {
    CHECK(run_cli("check-sp " + fixture("a5")).output.find("spectrum: match") !=
          std::string::npos);
    CHECK(run_cli("check-pq " + fixture("a5")).output.find("prime graph: match") !=
          std::string::npos);
}

TEST_CASE("pap mode runs on pap_assumed tables and flags are honoured") {
    RunResult r = run_cli("check-zc " + fixture("d8") + " --pap");
    CHECK(r.exit_code == 0);
    // acknowledgement unlocks other tables
    RunResult r2 = run_cli("check-zc " + fixture("a5") +
                           " --pap --acknowledge-pap-assumption --order 2");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("machine format emits the documented document") {
    RunResult r = run_cli("check-zc " + fixture("c6") + " --format machine");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc.contains("table_name"));
    CHECK(doc.contains("options"));
    CHECK(doc.contains("per_order"));
    CHECK(doc.contains("group_summary"));
    for (const auto& ord : doc["per_order"]) {
        CHECK(ord.contains("n"));
        CHECK(ord.contains("solutions"));
        CHECK(ord.contains("verdicts"));
    }
    CHECK(doc["options"]["cl_congruences"] == true);
    // options echo the requested constraint families
    RunResult r2 = run_cli("check-zc " + fixture("c6") +
                           " --format machine --no-cl-congruences --brauer none");
    json doc2 = json::parse(r2.output);
    CHECK(doc2["options"]["cl_congruences"] == false);
    CHECK(doc2["options"]["brauer_primes"].is_array());
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/zgu_cli_out_test.json";
    std::remove(path.c_str());
    RunResult r = run_cli("check-zc " + fixture("c3") + " --format machine --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json doc = json::parse(in);
    CHECK(doc["table_name"] == "C3");
    std::remove(path.c_str());
}

TEST_CASE("machine output is byte-identical across runs") {
    RunResult a = run_cli("solve " + fixture("d8") + " --format machine");
    RunResult b = run_cli("solve " + fixture("d8") + " --format machine");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    REQUIRE(!a.output.empty());
}

TEST_CASE("solve text output lists solutions per order") {
    RunResult r = run_cli("solve " + fixture("c3") + " --order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order 3") != std::string::npos);
    CHECK(r.output.find("trivial") != std::string::npos);
}
