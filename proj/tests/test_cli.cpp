#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "flatspin/json_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FLATSPIN_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp_file(const std::string& name) { return "/tmp/flatspin_test_" + name; }

} // namespace

TEST_CASE("build family and analyze") {
    std::string path = tmp_file("s71.json");
    RunResult b = run("build --family polar --genus 3 --k 1 --out " + path);
    CHECK(b.exit_code == 0);

    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto s = flatspin::surface_from_json(text);
    CHECK(s.polygons().size() == 7);

    RunResult a = run("analyze " + path);
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("H(4)") != std::string::npos);
    CHECK(a.output.find("genus: 3") != std::string::npos);
}

TEST_CASE("build unfoldings") {
    RunResult r = run("build --unfold 2 5 14");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"field_order\":28") != std::string::npos);
}

TEST_CASE("build emits canonical JSON on stdout") {
    RunResult r = run("build --spingon 8 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"field_order\":8") != std::string::npos);
    RunResult again = run("build --spingon 8 2");
    CHECK(again.output == r.output);
}

TEST_CASE("precondition violations exit 2") {
    CHECK(run("build --spingon 7 4").exit_code == 2);
    CHECK(run("build --regular 7").exit_code == 2);
    CHECK(run("build --double 2").exit_code == 2);
    CHECK(run("build --unfold 1 2 8").exit_code == 2);
    CHECK(run("build").exit_code == 2);
}

TEST_CASE("analyze distinguishes malformed JSON from invalid surfaces") {
    std::string garbled = tmp_file("garbled.json");
    std::ofstream(garbled) << "{ not json";
    CHECK(run("analyze " + garbled).exit_code == 2);

    std::string invalid = tmp_file("invalid.json");
    RunResult torus = run("build --regular 4");
    REQUIRE(torus.exit_code == 0);
    std::string text = torus.output;
    auto pos = text.find("[[[0,0],[0,2]],[[0,1],[0,3]]]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("[[[0,0],[0,2]],[[0,1],[0,3]]]").size(),
                 "[[[0,0],[0,1]],[[0,2],[0,3]]]");
    std::ofstream(invalid) << text;
    CHECK(run("analyze " + invalid).exit_code == 3);
}

TEST_CASE("equiv reports factors and inequivalence") {
    std::string d7 = tmp_file("d7.json"), s71 = tmp_file("s71b.json"), s72 = tmp_file("s72.json");
    REQUIRE(run("build --double 7 --out " + d7).exit_code == 0);
    REQUIRE(run("build --spingon 7 1 --out " + s71).exit_code == 0);
    REQUIRE(run("build --spingon 7 2 --out " + s72).exit_code == 0);

    RunResult same = run("equiv " + s71 + " " + d7 + " --mode similarity");
    CHECK(same.exit_code == 0);
    CHECK(same.output.find("factor") != std::string::npos);

    RunResult diff = run("equiv " + s71 + " " + s72 + " --mode similarity");
    CHECK(diff.exit_code == 1);
    CHECK(diff.output.find("inequivalent") != std::string::npos);

    std::string witness = tmp_file("witness.json");
    RunResult w = run("equiv " + s71 + " " + d7 + " --mode similarity --witness " + witness);
    CHECK(w.exit_code == 0);
    std::ifstream win(witness);
    std::string wtext((std::istreambuf_iterator<char>(win)), std::istreambuf_iterator<char>());
    CHECK(wtext.find("\"factor\"") != std::string::npos);
    CHECK(wtext.find("\"cell_map\"") != std::string::npos);
}

TEST_CASE("svg output is byte-stable") {
    std::string path = tmp_file("h61.json");
    REQUIRE(run("build --half-spingon 6 1 --out " + path).exit_code == 0);
    RunResult one = run("svg " + path);
    RunResult two = run("svg " + path);
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);
    CHECK(one.output.find("<svg") == 0);
}

TEST_CASE("triangulate and quotient commands") {
    std::string path = tmp_file("s51.json");
    REQUIRE(run("build --spingon 5 1 --out " + path).exit_code == 0);

    RunResult tri = run("triangulate " + path);
    CHECK(tri.exit_code == 0);
    CHECK(tri.output.find("\"vertices\"") != std::string::npos);

    RunResult quo = run("quotient " + path + " --by eta --compare-model 5");
    CHECK(quo.exit_code == 0);
    CHECK(quo.output.find("isomorphic to model sphere") != std::string::npos);

    RunResult wedge = run("quotient " + path + " --by eta,rot");
    CHECK(wedge.exit_code == 0);

    // not a rhombus surface
    std::string ngon = tmp_file("r12.json");
    REQUIRE(run("build --regular 12 --out " + ngon).exit_code == 0);
    CHECK(run("triangulate " + ngon).exit_code == 3);
}

TEST_CASE("symmetry command") {
    std::string path = tmp_file("s61.json");
    REQUIRE(run("build --spingon 6 1 --out " + path).exit_code == 0);
    RunResult sym = run("symmetry " + path + " --derivative 6 1");
    CHECK(sym.exit_code == 0);
    CHECK(sym.output.find("derivative") != std::string::npos);

    std::string torus = tmp_file("torus.json");
    REQUIRE(run("build --regular 4 --out " + torus).exit_code == 0);
    CHECK(run("symmetry " + torus + " --derivative 3 1").exit_code == 1);
}

TEST_CASE("verify command on the genus-2 gallery") {
    RunResult r = run("verify --family polar --genus-range 2..2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] polar g=2 k=1 stratum") != std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}
