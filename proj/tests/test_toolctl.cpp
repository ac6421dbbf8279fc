#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nefkit/cli.hpp"
#include "nefkit/generators.hpp"
#include "nefkit/serialize.hpp"

using namespace nefkit;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmpFile(const std::string& name, const std::string& content) {
    std::string path = "/tmp/nefkit_test_" + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("polytope file round trip is byte identical") {
    Json j = polytopeToJson(diamond2d());
    std::string text = dumpJson(j);
    LatticePolytope parsed = polytopeFromJson(parseJsonText(text, "test"));
    CHECK(parsed == diamond2d());
    CHECK(dumpJson(polytopeToJson(parsed)) == text);
}

TEST_CASE("partition file round trip") {
    auto parts = genPdParts({3, 3});
    std::string text = dumpJson(partitionToJson(parts));
    auto parsed = partitionFromJson(parseJsonText(text, "test"));
    REQUIRE(parsed.size() == 2);
    CHECK(dumpJson(partitionToJson(parsed)) == text);
}

TEST_CASE("malformed inputs are rejected with input errors") {
    CHECK_THROWS_AS(parseJsonText("{", "test"), InputError);
    CHECK_THROWS_AS(polytopeFromJson(parseJsonText("{\"dim\": 2}", "test")), InputError);
    // rational coordinate
    std::string bad =
        "{\"schemaVersion\":\"1\",\"dim\":2,\"vertices\":[[\"0.5\",\"1\"],[\"1\",\"0\"]]}";
    CHECK_THROWS_AS(polytopeFromJson(parseJsonText(bad, "test")), InputError);
    // wrong schema
    std::string schema =
        "{\"schemaVersion\":\"2\",\"dim\":2,\"vertices\":[[\"0\",\"1\"]]}";
    CHECK_THROWS_AS(polytopeFromJson(parseJsonText(schema, "test")), InputError);
    // coordinate count mismatch
    std::string ragged =
        "{\"schemaVersion\":\"1\",\"dim\":2,\"vertices\":[[\"0\",\"1\",\"2\"]]}";
    CHECK_THROWS_AS(polytopeFromJson(parseJsonText(ragged, "test")), InputError);
}

TEST_CASE("digest is stable") {
    CHECK(inputDigest("") == "cbf29ce484222325");
    CHECK(inputDigest("a") == inputDigest("a"));
    CHECK(inputDigest("a") != inputDigest("b"));
}

TEST_CASE("cli: gen + validate + hodge pipeline") {
    auto gen = run({"gen", "pd", "--degrees", "3,3"});
    REQUIRE(gen.code == 0);
    std::string partPath = tmpFile("p33.json", gen.out);

    auto val = run({"nef", "validate", partPath, "--format", "json"});
    CHECK(val.code == 0);
    Json rep = parseJsonText(val.out, "report");
    CHECK(rep["results"]["valid"] == true);
    CHECK(rep["results"]["r"] == 2);

    auto h1q = run({"hodge", "h1q", partPath, "--format", "json"});
    REQUIRE(h1q.code == 0);
    Json hrep = parseJsonText(h1q.out, "report");
    CHECK(hrep["results"]["hOneQ"][2] == "73");

    auto table = run({"hodge", "h1q", partPath});
    CHECK(table.code == 0);
    CHECK(table.out.find("73") != std::string::npos);
}

TEST_CASE("cli: dualize twice returns the original file byte-identical") {
    auto gen = run({"gen", "pd", "--degrees", "2,2,3"});
    REQUIRE(gen.code == 0);
    std::string p1 = tmpFile("p223.json", gen.out);
    auto dual = run({"nef", "dualize", p1});
    REQUIRE(dual.code == 0);
    std::string p2 = tmpFile("p223_dual.json", dual.out);
    auto back = run({"nef", "dualize", p2});
    REQUIRE(back.code == 0);
    CHECK(back.out == gen.out);
}

TEST_CASE("cli: exit codes") {
    CHECK(run({"poly", "info", "/nonexistent/file.json"}).code == 1);
    std::string badJson = tmpFile("bad.json", "{not json");
    CHECK(run({"poly", "info", badJson}).code == 1);

    // diamond split: precondition failure (NotNef)
    auto diamond = run({"gen", "diamond"});
    REQUIRE(diamond.code == 0);
    std::string dPath = tmpFile("diamond_split.json", diamond.out);
    auto val = run({"nef", "validate", dPath});
    CHECK(val.code == 2);
    CHECK(val.err.find("NotNef") != std::string::npos);

    // unknown subcommand
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("cli: verify all passes on generated corpora") {
    for (const std::string& degrees : {std::string("3,3"), std::string("2,4")}) {
        auto gen = run({"gen", "pd", "--degrees", degrees});
        REQUIRE(gen.code == 0);
        std::string path = tmpFile("verify_" + degrees + ".json", gen.out);
        auto verify = run({"verify", "all", path, "--format", "json"});
        CHECK(verify.code == 0);
        Json rep = parseJsonText(verify.out, "report");
        for (const auto& [k, v] : rep["results"].items()) CHECK(v == "PASS");
    }
    auto half = run({"gen", "halflattice"});
    REQUIRE(half.code == 0);
    std::string halfPath = tmpFile("half.json", half.out);
    CHECK(run({"verify", "all", halfPath}).code == 0);
}

TEST_CASE("cli: determinism across reruns and thread overrides") {
    auto gen = run({"gen", "pd", "--degrees", "2,4"});
    std::string path = tmpFile("det.json", gen.out);
    std::vector<std::string> cmd{"hodge", "chi", path, "--format", "json"};
    auto first = run(cmd);
    REQUIRE(first.code == 0);
    for (const char* threads : {"1", "4", "16"}) {
        setenv("NEFKIT_THREADS", threads, 1);
        auto again = run(cmd);
        CHECK(again.code == 0);
        CHECK(again.out == first.out);
    }
    unsetenv("NEFKIT_THREADS");
}

TEST_CASE("cli: decompose reports the half-lattice index") {
    auto half = run({"gen", "halflattice"});
    std::string path = tmpFile("half2.json", half.out);
    auto dec = run({"nef", "decompose", path, "--format", "json"});
    REQUIRE(dec.code == 0);
    Json rep = parseJsonText(dec.out, "report");
    CHECK(rep["results"]["sublatticeIndex"] == "2");
    CHECK(rep["results"]["splitsOverZ"] == false);
    CHECK(rep["results"]["components"].size() == 2);
}

TEST_CASE("cli: enumerate on the diamond is empty") {
    std::string path = tmpFile("diamond.json", dumpJson(polytopeToJson(diamond2d())));
    auto res = run({"nef", "enumerate", path, "--r", "2", "--format", "json"});
    REQUIRE(res.code == 0);
    Json rep = parseJsonText(res.out, "report");
    CHECK(rep["results"]["count"] == 0);
}

TEST_CASE("cli: --out writes the file instead of stdout") {
    std::string outPath = "/tmp/nefkit_test_outfile.json";
    std::remove(outPath.c_str());
    auto res = run({"gen", "pd", "--degrees", "3,3", "--out", outPath});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream f(outPath);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(!ss.str().empty());
    CHECK(parseJsonText(ss.str(), "file")["parts"].size() == 2);
}

TEST_CASE("cli binary exists and runs end to end") {
    const char* cli = std::getenv("NEFKIT_CLI");
    REQUIRE(cli != nullptr);
    std::string path = tmpFile("bin33.json", run({"gen", "pd", "--degrees", "3,3"}).out);
    std::string cmd = std::string(cli) + " hodge e " + path + " --format json > /tmp/nefkit_bin_out.json";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f("/tmp/nefkit_bin_out.json");
    std::ostringstream ss;
    ss << f.rdbuf();
    Json rep = parseJsonText(ss.str(), "binary output");
    CHECK(rep["results"]["coefficients"][0] == "1");
    CHECK(rep["results"]["coefficients"][3] == "1");
}
