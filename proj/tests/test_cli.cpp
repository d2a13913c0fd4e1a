#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <mpfr.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr merged
};

const char* cli_path() {
    const char* p = std::getenv("TRIGEXACT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "TRIGEXACT_CLI must point at the built binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), output};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Distance between two decimal strings, parsed at 200 bits.
double decimal_gap(const std::string& a, const std::string& b) {
    mpfr_t x, y;
    mpfr_init2(x, 200);
    mpfr_init2(y, 200);
    REQUIRE(mpfr_set_str(x, a.c_str(), 10, MPFR_RNDN) == 0);
    REQUIRE(mpfr_set_str(y, b.c_str(), 10, MPFR_RNDN) == 0);
    mpfr_sub(x, x, y, MPFR_RNDN);
    mpfr_abs(x, x, MPFR_RNDN);
    const double gap = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(y);
    return gap;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

} // namespace

TEST_CASE("eval formats") {
    auto dec = run("eval --fn cot --n 1 --x 1/2 --format decimal");
    CHECK(dec.exit_code == 0);
    CHECK(dec.output.rfind("-3.14159", 0) == 0);

    auto zero = run("eval --fn csc --n 1 --x 1/2 --format text");
    CHECK(zero.exit_code == 0);
    CHECK(strip(zero.output) == "0");

    auto text = run("eval --fn tan --n 1 --x 1/3");
    CHECK(text.exit_code == 0);
    CHECK(strip(text.output) == "pi^1 * (4*cos(0))");

    auto latex = run("eval --fn sec --n 1 --x 1/3 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(strip(latex.output) == "\\pi^{1} (4 \\sin(\\pi/3))");
    CHECK_FALSE(contains(latex.output, "\\left"));
    CHECK_FALSE(contains(latex.output, "\\frac"));

    auto json_out = run("eval --fn cot --n 2 --x 1/4 --format json");
    CHECK(json_out.exit_code == 0);
    const auto j = nlohmann::json::parse(json_out.output);
    CHECK(j["function"] == "cot");
    CHECK(j["n"] == 2);
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 4);
    CHECK(j["sign"] == 1);
    CHECK(j["pi_power"] == 2);
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["coeff"] == "4");
    CHECK(j["terms"][0]["kind"] == "cos");
    CHECK(j["terms"][0]["k"] == 0);
    CHECK(j["terms"][0]["d"] == 1);
    CHECK(j["decimal"].get<std::string>().rfind("3.947841", 0) == 0); // 4 pi^2
}

TEST_CASE("decimal output round-trips across digit counts") {
    const auto coarse = run("eval --fn tan --n 2 --x 1/5 --format decimal --digits 30");
    const auto fine = run("eval --fn tan --n 2 --x 1/5 --format decimal --digits 50");
    REQUIRE(coarse.exit_code == 0);
    REQUIRE(fine.exit_code == 0);
    const double v = std::abs(std::strtod(fine.output.c_str(), nullptr));
    CHECK(decimal_gap(strip(coarse.output), strip(fine.output)) < 1e-28 * v);
}

TEST_CASE("eval failure modes") {
    auto pole = run("eval --fn cot --n 1 --x 1/1");
    CHECK(pole.exit_code == 2);
    CHECK(contains(pole.output, "pole"));

    CHECK(run("eval --fn sec --n 2 --x 7/2").exit_code == 2);  // pole
    CHECK(run("eval --fn tan --n 1 --x 3/1").exit_code == 2);  // empty window
    CHECK(run("eval --fn cot --n 1 --x 1.5").exit_code == 1);  // bad rational
    CHECK(run("eval --fn coth --n 1 --x 1/3").exit_code == 1); // bad function
    CHECK(run("eval --fn cot --n 0 --x 1/3").exit_code == 1);  // bad order
    CHECK(run("eval --fn cot --n 1").exit_code == 1);          // missing --x
    CHECK(run("eval --fn cot --n 1 --x 1/3 --format yaml").exit_code == 1);
}

TEST_CASE("verify sweep") {
    auto ok = run("verify --max-n 2 --max-q 4");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "all 32 cases pass"));
    CHECK(contains(ok.output, "cot n=1 x=1/2 pass"));

    CHECK(run("verify --max-n 0").exit_code == 1);

    auto js = run("verify --max-n 1 --max-q 2 --format json");
    CHECK(js.exit_code == 0);
    const auto rows = nlohmann::json::parse(js.output);
    REQUIRE(rows.size() == 2); // tan/sec need q >= 3
    CHECK(rows[0]["fn"] == "cot");
    CHECK(rows[1]["fn"] == "csc");
    for (const auto& row : rows) CHECK(row["pass"] == true);
}

TEST_CASE("table") {
    auto t = run("table --fn cot --n-max 2 --x 1/4 --x 3/4 --x 3/4");
    CHECK(t.exit_code == 0);
    // rows in (n, x) order, duplicates removed: 2 orders x 2 points
    std::istringstream lines(t.output);
    std::string line;
    int count = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 4);
    CHECK(contains(t.output, "x=1/4"));
    CHECK(contains(t.output, "x=3/4"));

    auto empty = run("table --fn cot --n-max 1");
    CHECK(empty.exit_code == 0);
    CHECK(strip(empty.output).empty());

    auto latex = run("table --fn csc --n-max 1 --x 1/3 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(contains(latex.output, "% csc n=1 x=1/3"));

    CHECK(run("table --fn cot --n-min 3 --n-max 2 --x 1/3").exit_code == 1);
}

TEST_CASE("poly") {
    CHECK(strip(run("poly bernoulli 2").output) == "x^2 - x + 1/6");
    CHECK(strip(run("poly euler 1").output) == "x - 1/2");
    CHECK(strip(run("poly cyclotomic 12").output) == "x^4 - x^2 + 1");
    CHECK(run("poly cyclotomic 0").exit_code == 1);
    CHECK(run("poly chebyshev 2").exit_code == 1);
}

TEST_CASE("identities") {
    auto ok = run("identities --s 2 --max-q 2 --tol 1e-8");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "(ok)"));
    CHECK(contains(ok.output, "alt-chi-hurwitz"));
    CHECK(contains(ok.output, "prefactor (2q)^(-s)"));

    auto collapse = run("identities --s 2 --max-q 1 --tol 1e-8");
    CHECK(collapse.exit_code == 0);
    CHECK(contains(collapse.output, "q=1 p=1"));

    CHECK(run("identities --tol 0").exit_code == 1);
}

TEST_CASE("json golden files") {
    const char* dir = std::getenv("TRIGEXACT_GOLDEN_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "TRIGEXACT_GOLDEN_DIR must be set");
    const struct {
        const char* file;
        const char* args;
    } cases[] = {
        {"eval_cot_n3_x1_5.json", "eval --fn cot --n 3 --x 1/5 --format json --digits 30"},
        {"eval_sec_n2_x5_3.json", "eval --fn sec --n 2 --x 5/3 --format json --digits 30"},
        {"eval_csc_n4_x3_7.json", "eval --fn csc --n 4 --x 3/7 --format json --digits 30"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.file);
        std::ifstream in(std::string(dir) + "/" + c.file);
        REQUIRE_MESSAGE(in.good(), "missing golden file");
        const auto expected = nlohmann::json::parse(in);
        const auto result = run(c.args);
        CHECK(result.exit_code == 0);
        CHECK(nlohmann::json::parse(result.output) == expected);
    }
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("eval --help").exit_code == 0);
    CHECK(run("").exit_code == 1); // a subcommand is required
}
