#include "chordcut/errors.hpp"
#include "chordcut/solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace chordcut;

namespace {

Instance five_cycle()
{
    Instance inst(5);
    for (int i = 0; i < 5; ++i) {
        inst.weight(Edge::on_cycle(i, i + 1, 5)) = 1;
        inst.weight(Edge::on_cycle(i, i + 2, 5)) = -1;
    }
    return inst;
}

Instance random_instance(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> w(-5, 5);
    Instance inst(n);
    for (auto& v : inst.weights) v = w(rng);
    return inst;
}

oracle::Q oracle_optimum(const Instance& inst)
{
    std::vector<std::vector<oracle::Q>> w(inst.n, std::vector<oracle::Q>(inst.n));
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j) w[i][j] = inst.weight(Edge{i, j});
    return oracle::best_value(inst.n, w);
}

}  // namespace

TEST_CASE("brute force examples")
{
    Instance k3(3);
    k3.weights = {1, 1, -2};
    const SolveResult r = brute_force_solve(k3);
    CHECK(r.optimum == 1);
    CHECK(r.partition.to_string() == "{0,1};{2}");
    CHECK(r.stats.nodes == 5);

    Instance k4(4);
    for (auto& v : k4.weights) v = 1;
    CHECK(brute_force_solve(k4).optimum == 6);
    CHECK(brute_force_solve(k4).partition == Partition::whole(4));

    Instance neg(6);
    for (auto& v : neg.weights) v = Rational(-1, 3);
    CHECK(brute_force_solve(neg).optimum == 0);
    CHECK(brute_force_solve(neg).partition == Partition::singletons(6));

    CHECK_THROWS_AS(brute_force_solve(Instance(11)), BudgetExceeded);
}

TEST_CASE("brute force breaks ties by enumeration order")
{
    // Zero weights: every partition is optimal, the first one is the whole set.
    CHECK(brute_force_solve(Instance(4)).partition == Partition::whole(4));
    Instance tie(3);
    tie.weights = {1, 1, -1};  // {0,1},{2} and {0,2},{1} and the whole set all give 1
    CHECK(brute_force_solve(tie).partition == Partition::whole(3));
}

TEST_CASE("instance text format")
{
    const Instance inst = parse_instance("5 3\n0 1 2\n1 4 -1/2\n\n2 3 3\n");
    CHECK(inst.n == 5);
    CHECK(inst.weight({0, 1}) == 2);
    CHECK(inst.weight({1, 4}) == Rational(-1, 2));
    CHECK(inst.weight({0, 4}) == 0);
    CHECK(format_instance(inst) == "5 3\n0 1 2\n1 4 -1/2\n2 3 3\n");
    CHECK(format_instance(parse_instance(format_instance(inst))) == format_instance(inst));
    CHECK(parse_instance("3 0").n == 3);

    for (const char* bad : {"", "3\n", "3 1\n", "3 1\n0 1 1.5\n", "3 1\n1 0 1\n", "3 1\n0 3 1\n",
                            "3 2\n0 1 1\n0 1 2\n", "3 1\n0 1\n", "3 1\n0 1 1 1\n", "x 0\n", "3 1\n-1 2 1\n",
                            "0 0\n", "3 0\n0 1 1\n"})
        CHECK_THROWS_AS(parse_instance(bad), std::invalid_argument);
}

TEST_CASE("value of a partition")
{
    const Instance inst = five_cycle();
    CHECK(inst.value(Partition(5, {{0, 1}, {2, 3}, {4}})) == 2);
    CHECK(inst.value(Partition::whole(5)) == 0);
    CHECK_THROWS_AS(inst.value(Partition::whole(4)), std::invalid_argument);
}

TEST_CASE("branch and cut on the five-cycle instance")
{
    const Instance inst = five_cycle();
    const SolveResult with = branch_and_cut(inst);
    CHECK(with.optimum == 2);
    CHECK(inst.value(with.partition) == 2);
    REQUIRE(with.root_bounds.size() >= 2);
    CHECK(with.root_bounds.end()[-2] == Rational(5, 2));
    CHECK(with.root_bounds.back() == 2);
    CHECK(with.stats.chorded_cuts >= 1);
    CHECK(with.stats.nodes == 1);

    BranchAndCutConfig triangles_only;
    triangles_only.chorded_cuts = false;
    const SolveResult without = branch_and_cut(inst, triangles_only);
    CHECK(without.optimum == 2);
    CHECK(without.root_bounds.back() == Rational(5, 2));
    CHECK(without.stats.chorded_cuts == 0);
    CHECK(without.stats.nodes > 1);
}

TEST_CASE("all-negative weights need no branching")
{
    Instance inst(6);
    for (auto& v : inst.weights) v = -2;
    const SolveResult r = branch_and_cut(inst);
    CHECK(r.optimum == 0);
    CHECK(r.partition == Partition::singletons(6));
    CHECK(r.stats.nodes == 1);
    CHECK(r.stats.max_depth == 0);
}

TEST_CASE("branch and cut equals brute force on random instances")
{
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 7; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            const Instance inst = random_instance(n, rng);
            const SolveResult bc = branch_and_cut(inst);
            const SolveResult bf = brute_force_solve(inst);
            REQUIRE(bc.optimum == bf.optimum);
            CHECK(bf.optimum == oracle_optimum(inst));
            CHECK(inst.value(bc.partition) == bc.optimum);
        }
}

TEST_CASE("configurations agree on the optimum")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const Instance inst = random_instance(6, rng);
        const Rational expected = brute_force_solve(inst).optimum;
        BranchAndCutConfig none;
        none.triangle_cuts = false;
        none.chorded_cuts = false;
        CHECK(branch_and_cut(inst, none).optimum == expected);
        BranchAndCutConfig heuristic;
        heuristic.chorded.mode = SeparationMode::heuristic;
        heuristic.chorded.max_k = 6;
        CHECK(branch_and_cut(inst, heuristic).optimum == expected);
        BranchAndCutConfig one_cut;
        one_cut.max_cuts_per_round = 1;
        CHECK(branch_and_cut(inst, one_cut).optimum == expected);
    }
}

TEST_CASE("every cut is valid and root bounds only decrease")
{
    std::mt19937_64 rng(8);
    std::mt19937_64 pick(9);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6 + trial % 3;
        const Instance inst = random_instance(n, rng);
        const SolveResult r = branch_and_cut(inst);
        for (std::size_t b = 1; b < r.root_bounds.size(); ++b) CHECK(r.root_bounds[b] <= r.root_bounds[b - 1]);
        CHECK(r.root_bounds.back() >= r.optimum);
        for (const auto& cut : r.cuts) {
            CHECK(is_valid_over_polytope(cut, n));
            std::uniform_int_distribution<int> label(0, n - 1);
            for (int s = 0; s < 1000; ++s) {
                std::vector<int> l(n);
                for (auto& v : l) v = label(pick);
                REQUIRE(cut.is_satisfied(characteristic_vector(n, l)));
            }
        }
    }
}

TEST_CASE("node observer sees consistent bounds")
{
    std::mt19937_64 rng(31);
    const Instance inst = random_instance(7, rng);
    BranchAndCutConfig config;
    config.chorded_cuts = false;
    std::vector<NodeEvent> events;
    config.on_node = [&](const NodeEvent& e) { events.push_back(e); };
    const SolveResult r = branch_and_cut(inst, config);
    REQUIRE(events.size() == r.stats.nodes);
    CHECK(events.front().depth == 0);
    CHECK(events.front().bound >= r.optimum);
    for (const auto& e : events) {
        CHECK(e.fixings.size() == e.depth);
        if (e.depth && !e.fixings.empty()) CHECK((e.fixings.back().second == 0 || e.fixings.back().second == 1));
    }
    // The 1-branch is explored first.
    if (events.size() > 1) CHECK(events[1].fixings.back().second == 1);
}

TEST_CASE("branch and cut is deterministic")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const Instance inst = random_instance(7, rng);
        CHECK(format_result(branch_and_cut(inst)) == format_result(branch_and_cut(inst)));
    }
}

TEST_CASE("heuristic separation handles n = 10")
{
    std::mt19937_64 rng(4);
    const Instance inst = random_instance(10, rng);
    BranchAndCutConfig config;
    config.chorded.mode = SeparationMode::heuristic;
    config.chorded.max_k = 7;
    CHECK(branch_and_cut(inst, config).optimum == brute_force_solve(inst).optimum);
}

TEST_CASE("branch and cut errors")
{
    CHECK_THROWS_AS(branch_and_cut(Instance(1)), std::invalid_argument);
    CHECK_THROWS_AS(branch_and_cut(Instance(10)), std::invalid_argument);  // exhaustive separation
    BranchAndCutConfig tiny;
    tiny.chorded_cuts = false;
    tiny.node_limit = 1;
    CHECK_THROWS_AS(branch_and_cut(five_cycle(), tiny), BudgetExceeded);
    BranchAndCutConfig zero;
    zero.max_cuts_per_round = 0;
    CHECK_THROWS_AS(branch_and_cut(five_cycle(), zero), std::invalid_argument);
}

TEST_CASE("result text")
{
    const std::string text = format_result(branch_and_cut(five_cycle()));
    CHECK(text.rfind("optimum 2\n", 0) == 0);
    CHECK(text.find("stat nodes 1\n") != std::string::npos);
    CHECK(text.find("stat root_bound_final 2\n") != std::string::npos);
}
