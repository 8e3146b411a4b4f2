#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "uqaff/rmatrix.hpp"

using namespace uqaff;
using uqaff::cli::RunConfig;

namespace {

std::pair<int, std::string> run(const RunConfig& cfg) {
    std::ostringstream os;
    int rc = cli::run(cfg, os);
    return {rc, os.str()};
}

}  // namespace

TEST_CASE("report line format") {
    std::ostringstream os;
    cli::report_line(os, "EQ1", cli::join_params({0, 2}), true, "0");
    CHECK(os.str() == "EQ1 | (0,2) | PASS | 0\n");
}

TEST_CASE("relations command") {
    RunConfig c;
    c.command = "relations";
    c.height = 1;
    auto [rc, out] = run(c);
    CHECK(rc == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out == run(c).second);
    c.perturb = "2";
    auto [rc2, out2] = run(c);
    CHECK(rc2 == 1);
    CHECK(out2.find("FAIL") != std::string::npos);
}

TEST_CASE("rmatrix export") {
    RunConfig c;
    c.command = "rmatrix";
    c.N = 1;
    c.mode = "atoms";
    c.out = "test_cli_r1.json";
    auto [rc, out] = run(c);
    CHECK(rc == 0);
    CHECK(out == "RMAT-R1 | N=1 | PASS | 0 mismatches\n");
    std::ifstream f(c.out);
    auto j = nlohmann::json::parse(f);
    CHECK(j["rows"] == 4);
    CHECK(j["entries"].size() == r1_transcription().nnz());
    CHECK(j["entries"][0][2] == Scalar::var(S).inv().to_string());
}

TEST_CASE("usage errors") {
    RunConfig c;
    c.command = "ybe";
    c.mode = "numeric";
    c.q = "x";
    CHECK_THROWS_AS(run(c), cli::UsageError);
    c.q = "0.8";
    c.z = 0.9;
    CHECK_THROWS_AS(run(c), cli::UsageError);
    RunConfig r;
    r.command = "rep";
    r.a = "q";
    CHECK_THROWS_AS(run(r), cli::UsageError);
    r.command = "nothing";
    r.a.clear();
    CHECK_THROWS_AS(run(r), cli::UsageError);
}
