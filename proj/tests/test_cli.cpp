#include "cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = chordcut::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

const std::string k5 = std::string(CHORDCUT_DATA_DIR) + "/k5.txt";

}  // namespace

TEST_CASE("gen")
{
    const Run r = run({"gen", "--k", "5", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("ineq n=5 rhs=2\n", 0) == 0);
    CHECK(count_lines(r.out) == 11);

    CHECK(run({"gen", "--k", "13", "--q", "3"}).out.rfind("ineq n=13 rhs=8\n", 0) == 0);

    const Run lifted = run({"gen", "--k", "5", "--q", "2", "--lift", "6"});
    CHECK(lifted.code == 0);
    CHECK(lifted.out.rfind("ineq n=6 rhs=2\n", 0) == 0);
    CHECK(count_lines(lifted.out) == 11);

    CHECK(run({"gen", "--k", "5", "--q", "2", "--lift", "4"}).code == 1);
    const Run bad = run({"gen", "--k", "3", "--q", "2"});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("certificate")
{
    const Run r = run({"certificate", "--k", "5", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified=true\n") != std::string::npos);
    CHECK(count_lines(r.out) == 10 + 3);

    const Run big = run({"certificate", "--k", "13", "--q", "3"});
    CHECK(big.out.find("verified=true\n") != std::string::npos);
    CHECK(count_lines(big.out) == 39 + 3);

    CHECK(run({"certificate", "--k", "3", "--q", "2"}).code == 1);
}

TEST_CASE("verify-facet")
{
    const Run r = run({"verify-facet", "--k", "7", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("predicted_facet=true\n") != std::string::npos);
    CHECK(r.out.find("observed_facet=true\n") != std::string::npos);

    const Run nf = run({"verify-facet", "--k", "6", "--q", "2", "--method", "brute"});
    CHECK(nf.code == 0);
    CHECK(nf.out.find("witness=cycle_edge_sum\n") != std::string::npos);

    const Run json = run({"verify-facet", "--k", "5", "--q", "2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.rfind("{\"k\":5,\"q\":2,", 0) == 0);

    CHECK(run({"verify-facet", "--k", "13", "--q", "3", "--method", "brute"}).code == 3);
    CHECK(run({"verify-facet", "--k", "7", "--q", "2", "--method", "fast"}).code == 1);
}

TEST_CASE("verify-sweep")
{
    const Run r = run({"verify-sweep", "--kmax", "7"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 1 + 2 + 2);
    CHECK(run({"verify-sweep", "--kmax", "3"}).code == 1);
}

TEST_CASE("tight")
{
    const Run r = run({"tight", "--k", "5", "--q", "2", "--count"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
    CHECK(run({"tight", "--k", "5", "--q", "2", "--count", "--method", "brute"}).out == "10\n");
    const Run list = run({"tight", "--k", "5", "--q", "2"});
    CHECK(count_lines(list.out) == 10);
    CHECK(list.out.find("{0,1,2};{3,4}") != std::string::npos);
}

TEST_CASE("solve")
{
    const Run r = run({"solve", k5, "--cuts", "triangle,chorded", "--max-k", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("optimum 2\n", 0) == 0);
    CHECK(r.out.find("stat root_bound_final 2\n") != std::string::npos);

    const Run tri = run({"solve", k5, "--cuts", "triangle"});
    CHECK(tri.out.rfind("optimum 2\n", 0) == 0);
    CHECK(tri.out.find("stat root_bound_final 5/2\n") != std::string::npos);

    CHECK(run({"solve", k5, "--brute"}).out.rfind("optimum 2\n", 0) == 0);
    CHECK(run({"solve", k5, "--separation", "heuristic", "--seed", "3"}).out.rfind("optimum 2\n", 0) == 0);
    CHECK(run({"solve", k5, "--format", "json"}).out.rfind("{\"optimum\":\"2\",", 0) == 0);
    CHECK(run({"solve", k5, "--cuts", "none", "--node-limit", "1"}).code == 3);
    CHECK(run({"solve", "/nonexistent/instance.txt"}).code == 1);
    CHECK(run({"solve", k5, "--cuts", "wheel"}).code == 1);
}

TEST_CASE("output is byte-identical across runs")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", k5, "--separation", "heuristic", "--seed", "9"},
             {"verify-sweep", "--kmax", "8"},
             {"certificate", "--k", "9", "--q", "4"}})
        CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"gen", "--k", "5"}).code == 1);
    CHECK(run({"gen", "--k", "five", "--q", "2"}).code == 1);
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify-facet") != std::string::npos);
}
