#pragma once

// Exact clique partitioning: maximize the total weight of edges inside
// blocks. Brute force for small n, and an exact branch-and-cut over the
// rational LP with triangle and chorded-cycle cuts.

#include "chordcut/graph.hpp"
#include "chordcut/inequality.hpp"
#include "chordcut/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chordcut {

struct Instance {
    int n = 0;
    /// Dense weights indexed by edge_index; unlisted edges weigh 0.
    std::vector<Rational> weights;

    explicit Instance(int nodes = 0);
    Rational& weight(Edge e) { return weights.at(edge_index(n, e)); }
    const Rational& weight(Edge e) const { return weights.at(edge_index(n, e)); }
    Rational value(const Partition& p) const;
};

/// Line 1 `n m`, then m lines `i j w` with i < j and an exact rational w.
/// Duplicate edges, floats and out-of-range nodes are rejected with
/// std::invalid_argument.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

struct SolveStats {
    std::size_t nodes = 0;
    std::size_t lp_iterations = 0;
    std::size_t triangle_cuts = 0;
    std::size_t chorded_cuts = 0;
    std::size_t separation_rounds = 0;
    std::size_t max_depth = 0;
};

struct SolveResult {
    Rational optimum;
    Partition partition;
    SolveStats stats;
    /// LP value of the root after the initial solve and after each cut round.
    std::vector<Rational> root_bounds;
    /// Every cut added to the pool, in insertion order.
    std::vector<Inequality> cuts;
};

/// `optimum <r>`, the canonical partition, then `stat <key> <value>` lines.
std::string format_result(const SolveResult& result);

constexpr int kMaxBruteSolveNodes = 10;

/// Exhausts all partitions (n <= 10); ties keep the first partition in
/// enumeration order. Throws BudgetExceeded above that.
SolveResult brute_force_solve(const Instance& inst);

// ---------------------------------------------------------------- separation

enum class SeparationMode { exhaustive, heuristic };

/// All violated triangle inequalities, by violation descending, then in
/// triangle_inequalities order.
std::vector<Inequality> separate_triangles(const EdgeVector& x);

struct ChordedSeparationOptions {
    int max_k = 5;
    SeparationMode mode = SeparationMode::exhaustive;
    std::uint64_t seed = 1;
    /// Random restarts of the greedy growth in heuristic mode.
    int restarts = 16;
};

/// Largest n on which exhaustive chorded separation is allowed.
constexpr int kMaxExhaustiveSeparationNodes = 9;

/// Chorded-cycle inequalities on node sequences of K_n violated by x, each
/// checked by exact evaluation, sorted by violation descending then
/// discovery order, without duplicates. Exhaustive mode covers every cyclic
/// sequence of length 4..max_k (up to rotation and reflection) and every
/// 2 <= q <= k/2; heuristic mode grows cycles greedily from high-valued
/// edges plus seeded random restarts and may miss violated inequalities.
std::vector<Inequality> separate_chorded_cycles(const EdgeVector& x, const ChordedSeparationOptions& options);

// ------------------------------------------------------------ branch and cut

struct NodeEvent {
    std::size_t depth = 0;
    /// (edge index, fixed value) along the path from the root.
    std::vector<std::pair<std::size_t, int>> fixings;
    bool feasible = false;
    Rational bound;  // LP value after the node's last cut round, when feasible
};

struct BranchAndCutConfig {
    bool triangle_cuts = true;
    bool chorded_cuts = true;
    ChordedSeparationOptions chorded;
    std::size_t max_cuts_per_round = 64;
    std::size_t node_limit = 100000;
    /// Observer called once per processed node.
    std::function<void(const NodeEvent&)> on_node;
};

/// Exact optimum by LP-based branch-and-cut: cut rounds (triangles first,
/// chorded cycles when no triangle is violated), then branching on the most
/// fractional variable, value 1 before 0. Throws BudgetExceeded when
/// node_limit is reached.
SolveResult branch_and_cut(const Instance& inst, const BranchAndCutConfig& config = {});

}  // namespace chordcut
