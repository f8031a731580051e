#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef SFACTOR_CLI_PATH
#define SFACTOR_CLI_PATH "./sfactor"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SFACTOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli indices") {
    RunResult r = run_cli("indices --group cyclic:9 --subset 0,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "lower: 3"));
    CHECK(contains(r.out, "upper: 4"));
    CHECK(contains(r.out, "components: 1"));

    RunResult ut = run_cli("indices --group ut3_3 --subset paper");
    CHECK(ut.exit_code == 0);
    CHECK(contains(ut.out, "lower: 3"));
    CHECK(contains(ut.out, "upper: 6"));

    RunResult single = run_cli("indices --group cyclic:5 --subset 0");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.out, "lower: 5"));
    CHECK(contains(single.out, "upper: 5"));

    // text and structured output must carry the same numbers
    RunResult js = run_cli("indices --group cyclic:9 --subset 0,1 --output json");
    CHECK(js.exit_code == 0);
    auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed["lower"] == 3);
    CHECK(parsed["upper"] == 4);
    CHECK(parsed["components"] == 1);
    CHECK(parsed["stable"] == false);

    RunResult left = run_cli("indices --group cyclic:9 --subset 0,1 --side left");
    CHECK(left.exit_code == 0);
    CHECK(contains(left.out, "lower: 3"));
}

TEST_CASE("cli stable") {
    CHECK(run_cli("stable --group quaternion8").exit_code == 0);

    RunResult c6 = run_cli("stable --group cyclic:6");
    CHECK(c6.exit_code == 1);
    CHECK(contains(c6.out, "witness: 0,1"));

    CHECK(run_cli("stable --group dihedral:8").exit_code == 1);

    // order 27 without --exhaustive and without a designated witness that
    // fails: ut3_3's designated subset is unstable, so this still resolves
    RunResult ut = run_cli("stable --group ut3_3");
    CHECK(ut.exit_code == 1);

    // exhaustive scans past order 16 insist on an explicit budget
    CHECK(run_cli("stable --group ut3_3 --exhaustive").exit_code == 2);
    CHECK(run_cli("stable --group ut3_3 --exhaustive --budget-nodes 100000").exit_code == 1);

    // inconclusive: order 18 product with no designated subset
    RunResult inconclusive = run_cli("stable --group cyclic:3*cyclic:3*cyclic:2");
    CHECK(inconclusive.exit_code == 3);
    CHECK(contains(inconclusive.out, "inconclusive"));

    RunResult json_run = run_cli("stable --group cyclic:6 --output json");
    auto parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed["stable"] == false);
    CHECK(parsed["lower"] == 2);
    CHECK(parsed["upper"] == 3);
    CHECK(parsed["examined"] == 2);
}

TEST_CASE("cli classify") {
    RunResult run = run_cli("classify");
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "all-pass: yes"));

    RunResult tiny = run_cli("classify --budget-nodes 10");
    CHECK(tiny.exit_code == 3);

    RunResult js = run_cli("classify --output json");
    auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["catalog"].size() == 14);
}

TEST_CASE("cli classify determinism across workers") {
    RunResult a = run_cli("classify --workers 1");
    RunResult b = run_cli("classify --workers 8");
    RunResult c = run_cli("classify --workers 8");
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("cli export") {
    RunResult dot = run_cli("export --group cyclic:5 --subset 0,1");
    CHECK(dot.exit_code == 0);
    size_t edges = 0;
    for (size_t pos = dot.out.find(" -- "); pos != std::string::npos; pos = dot.out.find(" -- ", pos + 1))
        ++edges;
    CHECK(edges == 5);

    RunResult ico = run_cli("export --group alt4 --subset paper --highlight witness-small");
    CHECK(ico.exit_code == 0);
    size_t marks = 0;
    for (size_t pos = ico.out.find("fillcolor"); pos != std::string::npos;
         pos = ico.out.find("fillcolor", pos + 1))
        ++marks;
    CHECK(marks == 2);  // the minimum s-factor of the order-12 instance has size 2

    RunResult d6 = run_cli("export --group dihedral:6 --subset paper");
    size_t d6_edges = 0;
    for (size_t pos = d6.out.find(" -- "); pos != std::string::npos; pos = d6.out.find(" -- ", pos + 1))
        ++d6_edges;
    CHECK(d6_edges == 24);  // 12 vertices, 4-regular

    CHECK(run_cli("export --group cyclic:5 --subset 0,1") .out == dot.out);
}

TEST_CASE("cli oracle") {
    CHECK(run_cli("oracle --group cyclic:8 --subset 0,1").exit_code == 0);

    RunResult all = run_cli("oracle --group dihedral:3 --all-subsets");
    CHECK(all.exit_code == 0);
    CHECK(contains(all.out, "agreement on 32 subsets"));

    CHECK(run_cli("oracle --group cyclic:20 --subset 0,1").exit_code == 2);
}

TEST_CASE("cli witness") {
    RunResult w = run_cli("witness --group cyclic:12 --subgroup 4 --rep 3 --drop 4");
    CHECK(w.exit_code == 0);
    CHECK(contains(w.out, "subset: 0,3,8"));
    CHECK(contains(w.out, "quotient-order: 4"));

    CHECK(run_cli("witness --group cyclic:12 --subgroup 4 --rep 1").exit_code == 2);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("indices --group nosuchgroup:3 --subset 0").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:5 --subset z").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("indices").exit_code == 2);  // missing --group
    CHECK(run_cli("--help").exit_code == 0);

    // malformed subset strings fail cleanly
    CHECK(run_cli("indices --group cyclic:5 --subset ''").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:5 --subset 0,").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:5 --subset '(0,1'").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:0 --subset 0").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:999 --subset 0,1").exit_code == 2);
    CHECK(run_cli("indices --group cyclic:2*cyclic:4 --subset paper").exit_code == 2);
    CHECK(run_cli("stable --group ut3_3 --side left").exit_code == 2);  // unknown flag here
}

TEST_CASE("cli reads group table files") {
    std::string path = "cli_test_table.txt";
    {
        std::ofstream out(path);
        out << "group-table v1\norder 3\n0 1 2\n1 2 0\n2 0 1\nlabels e,g,g2\n";
    }
    RunResult r = run_cli("indices --group " + path + " --subset e,g");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "lower: 1"));
    CHECK(contains(r.out, "upper: 1"));
    std::remove(path.c_str());
}
