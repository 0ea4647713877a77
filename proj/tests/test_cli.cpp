#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zagreb/example_graphs.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_out.tmp";
    std::string cmd = std::string(ZB_CLI_PATH) + " " + args + " > " + out_path +
                      " 2> cli_err.tmp";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("compute reports the benchmark invariants") {
    write_file("g1.edges", zagreb::examples::kG1);
    RunResult r = run("compute --input g1.edges --alpha 2 --out json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    bool saw_m1 = false, saw_z2 = false;
    for (const auto& row : j) {
        if (row["quantity"] == "M1") {
            CHECK(row["value"] == "198");
            saw_m1 = true;
        }
        if (row["quantity"] == "Z_2") {
            CHECK(row["value"] == "198");
            saw_z2 = true;
        }
    }
    CHECK(saw_m1);
    CHECK(saw_z2);
}

TEST_CASE("compute on graph6 input") {
    write_file("k4.g6", "C~\n");
    RunResult r = run("compute --input k4.g6 --format graph6 --out json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    for (const auto& row : j) {
        if (row["quantity"] == "M1") CHECK(row["value"] == "36");
        if (row["quantity"] == "M2") CHECK(row["value"] == "54");
        if (row["quantity"] == "lambda1")
            CHECK(std::abs(std::stod(row["approx"].get<std::string>()) - 3.0) <
                  1e-6);
    }
}

TEST_CASE("exit codes for bad input") {
    write_file("loop.edges", "n 3\n1 1\n");
    CHECK(run("compute --input loop.edges").exit_code == 2);
    CHECK(run("compute --input no_such_file.edges").exit_code == 2);
    // isolated vertex: the inverse-degree indices are undefined
    write_file("iso.edges", "n 3\n1 2\n");
    CHECK(run("compute --input iso.edges").exit_code == 3);
    CHECK(run("verify --nmax 12").exit_code == 4);
}

TEST_CASE("bounds: named, all-pairs and best") {
    write_file("g3.edges", zagreb::examples::kG3);
    RunResult named = run(
        "bounds --input g3.edges --bounds cor_zte2,cor_z2te1,cor_z2te2 --out json");
    REQUIRE(named.exit_code == 0);
    auto j = nlohmann::json::parse(named.output);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["bound"] == "cor_zte2");
    CHECK(j[0]["value"] == "799/6");
    CHECK(std::abs(std::stod(j[0]["value_approx"].get<std::string>()) - 133.1667) <
          5e-5);

    write_file("c4.edges", "n 4\n1 2\n2 3\n3 4\n4 1\n");
    RunResult all = run("bounds --input c4.edges --bounds all-pairs --out json");
    REQUIRE(all.exit_code == 0);
    auto ja = nlohmann::json::parse(all.output);
    CHECK(ja.size() > 6);
    for (const auto& row : ja) {
        CHECK(row["equality"] == "true");
        CHECK(row["slack"] == "0");
    }

    write_file("g2.edges", zagreb::examples::kG2);
    RunResult best = run("bounds --input g2.edges --bounds best --out json");
    REQUIRE(best.exit_code == 0);
    auto jb = nlohmann::json::parse(best.output);
    REQUIRE(jb.size() == 1);
    CHECK(std::stod(jb[0]["value_approx"].get<std::string>()) >= 121.1667 - 5e-5);
}

TEST_CASE("verify subcommand exit status") {
    CHECK(run("verify --nmin 3 --nmax 4 --properties P1,P3,P4").exit_code == 0);
    RunResult r = run("verify --nmin 3 --nmax 5 --dedup --properties P2 --out json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j[0]["status"] == "pass");
}

TEST_CASE("table reproduction exits clean and notes the transposition") {
    RunResult r = run("table1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("transposed") != std::string::npos);
}

TEST_CASE("enumerate writes deterministic graph6 lines") {
    RunResult r = run("enumerate --nmin 4 --nmax 4 --dedup");
    REQUIRE(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output) lines += c == '\n';
    CHECK(lines == 6);

    RunResult one = run("enumerate --nmin 1 --nmax 1");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "@\n");

    RunResult labeled = run("enumerate --nmin 3 --nmax 3");
    int lab = 0;
    for (char c : labeled.output) lab += c == '\n';
    CHECK(lab == 4);

    CHECK(run("enumerate --nmin 3 --nmax 10").exit_code == 4);
}

TEST_CASE("byte-identical output across runs") {
    write_file("g1.edges", zagreb::examples::kG1);
    RunResult a = run("bounds --input g1.edges --bounds all-pairs --out json");
    RunResult b = run("bounds --input g1.edges --bounds all-pairs --out json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run("compute --input g1.edges --out csv");
    RunResult d = run("compute --input g1.edges --out csv");
    CHECK(c.output == d.output);
    CHECK(c.output.substr(0, c.output.find('\n')) == "quantity,value,approx");
}

TEST_CASE("output file writing") {
    write_file("g2.edges", zagreb::examples::kG2);
    RunResult r = run("compute --input g2.edges --output compute_out.json --out json");
    CHECK(r.exit_code == 0);
    std::ifstream in("compute_out.json");
    CHECK(in.good());
    CHECK(run("compute --input g2.edges --output /no/such/dir/x.json").exit_code ==
          2);
}
