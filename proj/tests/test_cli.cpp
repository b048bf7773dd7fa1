#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordpar/cli.hpp"

using namespace ordpar::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(ORDPAR_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string data_dir = ORDPAR_DATA_DIR;

}  // namespace

TEST_CASE("separate prints the certificate")
{
    auto r = invoke({"separate", "--shape", "1,1,1", "--parity", "even", "--point", "1;1;1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("violated F={1,2,3} lhs=0\n") != std::string::npos);
    CHECK(r.err.empty());
    r = invoke({"separate", "--shape", "2,2", "--parity", "even", "--point", "1,1;1,0"});
    CHECK(r.out == golden("separate.txt"));
    r = invoke({"separate", "--shape", "2", "--parity", "even", "--point", "1/2,1/2"});
    CHECK(r.out == "lambdas 0\nsatisfied F={1} lhs=1\n");
}

TEST_CASE("golden outputs")
{
    CHECK(invoke({"describe", "--shape", "2,2", "--parity", "even"}).out == golden("describe.txt"));
    CHECK(invoke({"describe", "--shape", "2,2"}).out == golden("describe.txt"));
    CHECK(invoke({"optimize", "--shape", "2,2", "--parity", "even", "--objective", "1,-1,0,2"}).out ==
          golden("optimize.txt"));
    CHECK(invoke({"network", "--shape", "2,2"}).out == golden("network.txt"));
    CHECK(invoke({"witness", "--n", "4", "--z", "2"}).out == golden("witness.txt"));
    CHECK(invoke({"multiwitness", "--shape", "2,2,2,2", "--z", "1,1,1,1", "--family", "1,2;2,3;3,4;1,4"}).out ==
          golden("multiwitness.txt"));
    CHECK(invoke({"gtsp", "solve", "--graph", data_dir + "/c5.txt", "--cuts",
                  "connectivity,blossom,blossom-strengthened", "--label", "c5"})
              .out == golden("gtsp_c5.txt"));
}

TEST_CASE("network --dot emits GraphViz")
{
    const auto r = invoke({"network", "--shape", "2,2", "--dot"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("multiwitness reports a failing condition")
{
    const auto r = invoke({"multiwitness", "--shape", "2,2", "--z", "2,2", "--family", "1,2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "set {1,2}: gamma sum 0 fails\ncondition fails\n");
}

TEST_CASE("gtsp solve on the Petersen graph")
{
    const auto report = std::filesystem::temp_directory_path() / "ordpar_petersen_report.txt";
    const auto r = invoke({"gtsp", "solve", "--graph", data_dir + "/petersen.txt", "--cuts",
                           "connectivity,blossom-strengthened", "--report", report.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    CHECK(r.out.find("\nbound 10\n") != std::string::npos);
    CHECK(r.out.find("(desk-scale instance)") != std::string::npos);
    std::ifstream in(report);
    std::stringstream saved;
    saved << in.rdbuf();
    CHECK(saved.str() == r.out);
    std::filesystem::remove(report);
}

TEST_CASE("exit codes")
{
    SUBCASE("usage errors exit 2")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {},
                 {"frobnicate"},
                 {"describe", "--shape", "zz"},
                 {"describe"},
                 {"describe", "--shape", "2", "--bogus", "1"},
                 {"separate", "--shape", "2", "--parity", "maybe", "--point", "1,0"},
                 {"separate", "--shape", "2", "--parity", "even", "--point", "1,a"},
                 {"witness", "--n", "-3", "--z", "1"},
                 {"witness", "--n", "3", "--z", "1.5"},
                 {"gtsp"},
                 {"gtsp", "solve", "--graph", "x", "--cuts", "gomory"},
                 {"gtsp", "solve", "--graph", "x", "--rounds", "many"},
             }) {
            const auto r = invoke(args);
            CHECK(r.code == kExitUsage);
            CHECK(r.out.empty());
            CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        }
    }
    SUBCASE("domain errors exit 1 with one line")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"separate", "--shape", "2", "--parity", "even", "--point", "1/2,1"},
                 {"separate", "--shape", "2,2", "--parity", "even", "--point", "1,0"},
                 {"optimize", "--shape", "2", "--parity", "odd", "--objective", "1"},
                 {"witness", "--n", "2", "--z", "3"},
                 {"multiwitness", "--shape", "2,2", "--z", "1,1", "--family", "1,3"},
                 {"gtsp", "solve", "--graph", data_dir + "/missing.txt"},
             }) {
            const auto r = invoke(args);
            CHECK(r.code == kExitDomainError);
            CHECK(r.out.empty());
            CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        }
    }
    SUBCASE("help exits 0 and lists the flags")
    {
        const auto r = invoke({"separate", "--help"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("--point") != std::string::npos);
        CHECK(r.err.empty());
        const auto g = invoke({"gtsp", "solve", "--help"});
        CHECK(g.code == kExitOk);
        CHECK(g.out.find("--cuts") != std::string::npos);
    }
}

TEST_CASE("parse and render round-trip every documented flag")
{
    const std::vector<Invocation> cases = {
        {{"separate"}, {{"shape", "2,2"}, {"parity", "even"}, {"point", "1,1/2;1,0"}}},
        {{"describe"}, {{"shape", "3,1"}, {"parity", "odd"}}},
        {{"describe"}, {{"shape", "3,1"}}},
        {{"optimize"}, {{"shape", "2"}, {"parity", "odd"}, {"objective", "1,-1/2"}}},
        {{"network"}, {{"shape", "2,2"}, {"parity", "odd"}, {"dot", "true"}}},
        {{"network"}, {{"shape", "1"}}},
        {{"witness"}, {{"n", "4"}, {"z", "5/2"}}},
        {{"multiwitness"}, {{"shape", "2,2"}, {"z", "1,1"}, {"family", "1,2"}}},
        {{"gtsp", "solve"},
         {{"graph", "g.txt"}, {"cuts", "connectivity,blossom"}, {"rounds", "7"}, {"report", "r.txt"}, {"label", "x y"}}},
    };
    for (const auto& inv : cases)
        CHECK(parse(render(inv)) == inv);
    CHECK_THROWS_AS(parse({"describe", "--shape", "2", "--nope", "1"}), UsageError);
}
