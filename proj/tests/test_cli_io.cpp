#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the CLI under test; stdout captured, stderr discarded.
RunResult run(const std::string& args) {
    const char* bin = std::getenv("LLS_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const std::string kGrid = "/tmp/lls_cli_grid.json";

void ensure_grid() {
    static bool done = false;
    if (done) return;
    const auto r = run("build --kind minkowski_patch --extent 1 --out " + kGrid);
    REQUIRE(r.exit_code == 0);
    done = true;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("check axioms /tmp/lls_missing_space.json").exit_code == 2);
    CHECK(run("tau " + kGrid).exit_code == 2);  // missing endpoints
}

TEST_CASE("build then check round-trips through the file format") {
    ensure_grid();
    const auto r = run("check axioms " + kGrid);
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["tool"] == "lorentzlen");
    CHECK(rep["command"] == "check axioms");
    CHECK(rep["version"].is_string());
    CHECK(rep["tolerances"]["abs"] == 1e-9);
    CHECK(rep["tolerances"]["rel"] == 1e-6);
}

TEST_CASE("reports are byte-identical across runs") {
    ensure_grid();
    for (const std::string sub :
         {std::string("check length-space "), std::string("tau --from '(-1,0)' --to '(1,0)' "),
          std::string("tc ")}) {
        CAPTURE(sub);
        const auto a = run(sub + kGrid);
        const auto b = run(sub + kGrid);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("tau accepts ids and coordinate tuples") {
    ensure_grid();
    const auto r = run("tau --from '(-1,0)' --to '(1,0)' " + kGrid);
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["tau"] == 2.0);
    const auto r2 = run("tau --from 0 --to 1 " + kGrid);
    CHECK(r2.exit_code == 0);
}

TEST_CASE("failing verdicts exit with 1") {
    const std::string punct = "/tmp/lls_cli_punct.json";
    REQUIRE(run("build --kind punctured_patch --out " + punct).exit_code == 0);
    const auto r = run("tc " + punct);
    CHECK(r.exit_code == 1);
    const json rep = json::parse(r.out);
    CHECK(rep["report"]["holds_within_budget"] == false);
    CHECK(rep["report"]["witness"]["points"].is_array());
}

TEST_CASE("tolerance overrides come from the environment") {
    ensure_grid();
    const char* bin = std::getenv("LLS_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = "LLS_ABS_TOL=1e-5 " + std::string(bin) +
                            " check axioms " + kGrid + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    pclose(p);
    const json rep = json::parse(out);
    CHECK(rep["tolerances"]["abs"] == 1e-5);
}

TEST_CASE("geodesic and length subcommands consume chains") {
    ensure_grid();
    const auto t = run("tau --from '(-1,0)' --to '(0,0)' " + kGrid);
    REQUIRE(t.exit_code == 0);
    // find ids of the endpoints from the tau report
    const json tr = json::parse(t.out);
    const int a = tr["from"], b = tr["to"];
    const auto g = run("geodesic --chain '" + std::to_string(a) + ";" + std::to_string(b) +
                       "' " + kGrid);
    CHECK(g.exit_code == 0);
    const auto l = run("length --chain '" + std::to_string(a) + ";" + std::to_string(b) +
                       "' " + kGrid);
    REQUIRE(l.exit_code == 0);
    CHECK(json::parse(l.out)["length"] == 1.0);
}

TEST_CASE("sprinkle produces a loadable, seeded space") {
    const std::string out1 = "/tmp/lls_cli_sp1.json", out2 = "/tmp/lls_cli_sp2.json";
    REQUIRE(run("sprinkle --density 40 --seed 3 --out " + out1).exit_code == 0);
    REQUIRE(run("sprinkle --density 40 --seed 3 --out " + out2).exit_code == 0);
    // deterministic files
    std::ifstream f1(out1), f2(out2);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {});
    const std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);
    CHECK(run("check axioms " + out1).exit_code == 0);
}
