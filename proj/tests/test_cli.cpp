#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(TORUS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

json payload(const std::string& args) {
    auto r = run(args);
    REQUIRE(r.status == 0);
    return json::parse(r.out).at("payload");
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/torus_cli_test_" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("strata summary census") {
    auto p = payload("strata --n 5 --summary");
    CHECK(p["total"] == 171);
    CHECK(p["census"]["K9"] == 10);
    CHECK(p["census"]["PYRAMID5"] == 30);
    CHECK(p["census"]["VERTEX"] == 10);
    auto four = payload("strata --n 4");
    CHECK(four["strata"].size() == four["total"].get<size_t>());
}

TEST_CASE("fundamental table rows") {
    auto p = payload("fundamental --n 5");
    REQUIRE(p["rows"].size() == 13);
    for (auto& row : p["rows"]) {
        const int v = row["p"];
        CHECK(row["q_p"] == (v == 3 || v == 4 || v == 6 ? 2 : 1));
        CHECK(row.contains("m_p"));
    }
}

TEST_CASE("homology profiles") {
    auto g52 = payload("homology --space g52 --coeff z");
    REQUIRE(g52.size() == 9);
    CHECK(g52[5]["torsion"] == json::array({2}));
    CHECK(g52[5]["free_rank"] == 0);
    CHECK(g52[8]["free_rank"] == 1);
    auto g42 = payload("homology --space g42");
    REQUIRE(g42.size() == 6);
    CHECK(g42[5]["free_rank"] == 1);
    auto x = payload("homology --space X");
    CHECK(x[6]["free_rank"] == 1);
    auto v21 = payload("homology --space V21 --coeff z2");
    CHECK(v21[5]["free_rank"] == 6);
    CHECK(v21[6]["free_rank"] == 10);
}

TEST_CASE("params subcommands") {
    auto t = payload("params check-transitions --samples 10 --seed 3");
    CHECK(t["verdict"] == "pass");
    CHECK(t["samples"] == 10);
    auto v = payload("params virtual --sigma '[[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5]]' --chart 12");
    CHECK(v["type"] == "K9");
    CHECK(v["samples_embedded"] == true);
    auto path = write_temp("plane.json", R"([["1","0"],["0","1"],["1","1"],["1","2"],["1","3+i"]])");
    auto e = payload("params embed --matrix " + path);
    CHECK(e["equations_hold"] == true);
    CHECK(e["coordinates"].size() == 5);
}

TEST_CASE("moment samples are consistent") {
    auto m = payload("moment --samples 20 --seed 5");
    CHECK(m["samples"] == 20);
    CHECK(m["mismatches"] == 0);
}

TEST_CASE("deterministic output") {
    CHECK(run("moment --samples 15 --seed 9").out == run("moment --samples 15 --seed 9").out);
    CHECK(run("params check-transitions --seed 4").out == run("params check-transitions --seed 4").out);
    CHECK(run("moment --samples 15 --seed 9").out != run("moment --samples 15 --seed 10").out);
}

TEST_CASE("exit codes") {
    CHECK(run("").status == 2);
    CHECK(run("homology").status == 2);
    CHECK(run("homology --space V9").status == 2);
    CHECK(run("homology --space V1 --coeff q").status == 2);
    CHECK(run("strata --n 12").status == 2);
    CHECK(run("params virtual --sigma '[[1,2],[3,4]]'").status == 2);
    CHECK(run("params virtual --sigma 'not json'").status == 2);
    CHECK(run("params embed --matrix /nonexistent").status == 2);
    auto degenerate = write_temp("degenerate.json", R"([[1,0],[1,0],[1,0],[1,0],[1,0]])");
    CHECK(run("params embed --matrix " + degenerate).status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("tsv output") {
    auto r = run("homology --space V2 --tsv");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("degree\tfree_rank\ttorsion\n", 0) == 0);
    CHECK(r.out.find("5\t6\t2\n") != std::string::npos);
}

TEST_CASE("report-all passes") {
    auto r = run("report-all --n 5");
    CHECK(r.status == 0);
    auto p = json::parse(r.out)["payload"];
    REQUIRE(p.size() == 9);
    for (auto& c : p) CHECK(c["pass"] == true);
    CHECK(run("report-all --n 4").status == 2);
}
