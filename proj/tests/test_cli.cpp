#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "heunfg/json_io.hpp"

using namespace heunfg;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with stderr routed away from the result stream.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HEUNFG_CLI_PATH) + " " + args + " 2>/tmp/heunfg_cli_err.txt";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("printed product polynomial") {
    auto r = run_cli("psi -m 1,1,0,0 --a symbolic");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Ψ = z*l + z^2 + a\n");
}

TEST_CASE("modulus collisions are rejected") {
    for (const char* a : {"1", "0"}) {
        auto r = run_cli(std::string("curve -m 1,0,0,0 --a ") + a);
        CHECK(r.exit_code == 2);
        CHECK(r.out.empty());  // nothing on the result stream on failure
    }
    auto r = run_cli("curve -m 1,0,0,0 --a 1");
    FILE* f = fopen("/tmp/heunfg_cli_err.txt", "r");
    REQUIRE(f != nullptr);
    std::string err;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) err.append(buf.data(), n);
    fclose(f);
    CHECK(contains(err, "a must not be 0 or 1"));
}

TEST_CASE("reference corpus verification") {
    auto r = run_cli("verify-appendix");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "15/15 exact matches"));
}

TEST_CASE("basic text outputs") {
    CHECK(run_cli("genus -m 2,1,0,0").out == "g = 2\n");
    {
        auto r = run_cli("curve -m 1,1,1,1 --a 3");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "g = 1"));
        CHECK(contains(r.out, "ν² = "));
        CHECK(contains(r.out, "branch point"));
    }
    {
        auto r = run_cli("nk -m 1,1,1,1");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "total = 3 = 2g+1"));
    }
    {
        auto r = run_cli("flows -m 1,1,0,0");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "order = 1"));
    }
}

TEST_CASE("invalid arguments exit 2 with a silent result stream") {
    CHECK(run_cli("psi -m 1,1,0").exit_code == 2);
    CHECK(run_cli("psi -m 1,1,0").out.empty());
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("psi --bogus-flag -m 1,0,0,0").exit_code == 2);
    CHECK(run_cli("heunpoly -m 1,-2,1,1 -d 1 --a 3").exit_code == 2);
    CHECK(run_cli("eval -m 1,0,0,0 --a symbolic --lambda 5 --z 0.4").exit_code == 2);
}

TEST_CASE("json outputs round-trip") {
    SUBCASE("product polynomial") {
        auto r = run_cli("psi -m 1,1,0,0 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(psi_from_json(j)) == j);
    }
    SUBCASE("curve with cached branch points") {
        auto r = run_cli("curve -m 1,1,1,1 --a 3 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(curve_from_json(j)) == j);
    }
    SUBCASE("sign classes") {
        auto r = run_cli("nk -m 2,1,0,0 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        for (const auto& e : j) CHECK(to_json(sign_class_from_json(e)) == e);
    }
    SUBCASE("branch record") {
        auto r = run_cli("branch -m 1,1,1,1 --a 3 --lambda 0 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(branch_record_from_json(j)) == j);
    }
    SUBCASE("eigen system") {
        auto r = run_cli("heunpoly -m 1,1,1,1 -d 2 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(eigen_system_from_json(j)) == j);
    }
    SUBCASE("dependence data") {
        auto r = run_cli("flows -m 1,1,0,0 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(novikov_from_json(j)) == j);
    }
    SUBCASE("solution values") {
        auto r = run_cli("eval -m 1,1,1,1 --a 3 --lambda 2 --z 0.4 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(solution_value_from_json(j)) == j);
    }
    SUBCASE("monodromy data") {
        auto r = run_cli("monodromy -m 0,0,0,0 --a 2 --lambda 3 --json");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(to_json(monodromy_from_json(j)) == j);
    }
}

TEST_CASE("numeric evaluation through the front end") {
    auto r = run_cli("eval -m 0,0,0,0 --a 2 --lambda 1 --z 0.5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Y1"));
    CHECK(contains(r.out, "Y2"));
}
