#include "chordcut/solver.hpp"

#include "chordcut/errors.hpp"
#include "chordcut/lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chordcut {

Instance::Instance(int nodes) : n(nodes), weights(edge_count(nodes)) {}

Rational Instance::value(const Partition& p) const
{
    if (p.node_count() != n) throw std::invalid_argument("partition is not over the instance nodes");
    Rational total = 0;
    std::size_t idx = 0;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j, ++idx)
            if (p.same_block(i, j)) total += weights[idx];
    return total;
}

namespace {

std::vector<std::string> tokens(std::string_view line)
{
    std::istringstream is{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

long parse_count(const std::string& text, const char* what)
{
    const Rational r = parse_rational(text);
    if (!is_integral(r) || r < 0 || !r.get_num().fits_slong_p())
        throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
    return r.get_num().get_si();
}

Partition partition_from_integral(const EdgeVector& x)
{
    const int n = x.node_count();
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::size_t idx = 0;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j, ++idx)
            if (x[idx] == 1) label[j] = std::min(label[j], label[i]);
    return Partition::from_labels(label);
}

bool is_integral_vector(const EdgeVector& x)
{
    return std::all_of(x.entries().begin(), x.entries().end(), [](const Rational& r) { return is_integral(r); });
}

// Closest to 1/2, ties by lowest edge index.
std::size_t most_fractional(const EdgeVector& x)
{
    const Rational half(1, 2);
    std::size_t best = x.size();
    Rational best_gap;
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (is_integral(x[idx])) continue;
        Rational gap = abs(x[idx] - half);
        if (best == x.size() || gap < best_gap) {
            best = idx;
            best_gap = std::move(gap);
        }
    }
    return best;
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        if (!tokens(line).empty()) lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw std::invalid_argument("empty instance");
    const auto header = tokens(lines.front());
    if (header.size() != 2) throw std::invalid_argument("instance header must be 'n m'");
    const long n = parse_count(header[0], "node count");
    const long m = parse_count(header[1], "edge count");
    if (n < 1) throw std::invalid_argument("instance needs at least one node");
    if (static_cast<long>(lines.size()) - 1 != m)
        throw std::invalid_argument("instance declares " + std::to_string(m) + " edges but lists " +
                                    std::to_string(lines.size() - 1));

    Instance inst(static_cast<int>(n));
    std::set<std::size_t> seen;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto fields = tokens(lines[l]);
        if (fields.size() != 3)
            throw std::invalid_argument("edge line must be 'i j w': '" + std::string(lines[l]) + "'");
        const long i = parse_count(fields[0], "node id");
        const long j = parse_count(fields[1], "node id");
        if (!(i < j) || j >= n)
            throw std::invalid_argument("edge line needs 0 <= i < j < n: '" + std::string(lines[l]) + "'");
        const Edge e{static_cast<Node>(i), static_cast<Node>(j)};
        if (!seen.insert(edge_index(inst.n, e)).second)
            throw std::invalid_argument("duplicate edge " + fields[0] + " " + fields[1]);
        inst.weight(e) = parse_rational(fields[2]);
    }
    return inst;
}

std::string format_instance(const Instance& inst)
{
    std::ostringstream body;
    std::size_t m = 0;
    for (std::size_t idx = 0; idx < inst.weights.size(); ++idx) {
        if (inst.weights[idx] == 0) continue;
        const Edge e = edge_at(inst.n, idx);
        body << e.i << ' ' << e.j << ' ' << to_string(inst.weights[idx]) << '\n';
        ++m;
    }
    return std::to_string(inst.n) + " " + std::to_string(m) + "\n" + body.str();
}

std::string format_result(const SolveResult& result)
{
    std::ostringstream os;
    os << "optimum " << to_string(result.optimum) << '\n';
    os << result.partition.to_string() << '\n';
    os << "stat nodes " << result.stats.nodes << '\n';
    os << "stat lp_iterations " << result.stats.lp_iterations << '\n';
    os << "stat triangle_cuts " << result.stats.triangle_cuts << '\n';
    os << "stat chorded_cuts " << result.stats.chorded_cuts << '\n';
    os << "stat separation_rounds " << result.stats.separation_rounds << '\n';
    os << "stat max_depth " << result.stats.max_depth << '\n';
    if (!result.root_bounds.empty()) {
        os << "stat root_bound_initial " << to_string(result.root_bounds.front()) << '\n';
        os << "stat root_bound_final " << to_string(result.root_bounds.back()) << '\n';
    }
    return os.str();
}

SolveResult brute_force_solve(const Instance& inst)
{
    if (inst.n > kMaxBruteSolveNodes)
        throw BudgetExceeded("brute-force solve limited to n <= " + std::to_string(kMaxBruteSolveNodes));
    if (inst.n < 1) throw std::invalid_argument("instance needs at least one node");
    SolveResult best;
    bool have = false;
    std::vector<int> best_labels;
    for_each_partition(inst.n, [&](const std::vector<int>& labels) {
        Rational value = 0;
        std::size_t idx = 0;
        for (Node i = 0; i < inst.n; ++i)
            for (Node j = i + 1; j < inst.n; ++j, ++idx)
                if (labels[i] == labels[j]) value += inst.weights[idx];
        ++best.stats.nodes;
        if (!have || value > best.optimum) {
            have = true;
            best.optimum = value;
            best_labels = labels;
        }
    });
    best.partition = Partition::from_labels(best_labels);
    return best;
}

SolveResult branch_and_cut(const Instance& inst, const BranchAndCutConfig& config)
{
    const int n = inst.n;
    if (n < 2) throw std::invalid_argument("branch and cut needs n >= 2");
    if (config.chorded_cuts && config.chorded.mode == SeparationMode::exhaustive &&
        n > kMaxExhaustiveSeparationNodes)
        throw std::invalid_argument("exhaustive chorded separation limited to n <= " +
                                    std::to_string(kMaxExhaustiveSeparationNodes));
    if (config.max_cuts_per_round == 0) throw std::invalid_argument("max_cuts_per_round must be positive");

    SolveResult result;
    result.optimum = 0;
    result.partition = Partition::singletons(n);

    struct Node_ {
        std::vector<std::pair<std::size_t, int>> fixings;
    };
    std::vector<Node_> stack{Node_{}};
    std::vector<Inequality> pool;

    while (!stack.empty()) {
        Node_ node = std::move(stack.back());
        stack.pop_back();
        if (result.stats.nodes >= config.node_limit)
            throw BudgetExceeded("branch and cut reached the node limit of " + std::to_string(config.node_limit));
        ++result.stats.nodes;
        const bool root = node.fixings.empty();
        result.stats.max_depth = std::max(result.stats.max_depth, node.fixings.size());

        DualSimplex lp(n, inst.weights);
        for (const auto& [var, value] : node.fixings) lp.fix(var, value);
        for (const auto& cut : pool) lp.add_row(cut);

        NodeEvent event;
        event.depth = node.fixings.size();
        event.fixings = node.fixings;

        bool feasible = true;
        EdgeVector x;
        Rational bound;
        for (;;) {
            if (lp.solve() == LpStatus::infeasible) {
                feasible = false;
                break;
            }
            bound = lp.objective_value();
            if (root) result.root_bounds.push_back(bound);
            x = lp.solution();
            if (bound <= result.optimum) break;

            // Integral points always get triangle separation, so an accepted
            // integral x is a clique partition vector even with triangle cuts off.
            const bool integral = is_integral_vector(x);
            std::vector<Inequality> cuts;
            if (config.triangle_cuts || integral) cuts = separate_triangles(x);
            std::size_t triangles = std::min(cuts.size(), config.max_cuts_per_round);
            cuts.resize(triangles);
            if (cuts.empty() && config.chorded_cuts && !integral) {
                cuts = separate_chorded_cycles(x, config.chorded);
                cuts.resize(std::min(cuts.size(), config.max_cuts_per_round));
            }
            if (cuts.empty()) break;

            ++result.stats.separation_rounds;
            result.stats.triangle_cuts += triangles;
            result.stats.chorded_cuts += cuts.size() - triangles;
            for (auto& cut : cuts) {
                lp.add_row(cut);
                pool.push_back(cut);
                result.cuts.push_back(std::move(cut));
            }
        }
        result.stats.lp_iterations += lp.iterations();

        event.feasible = feasible;
        if (feasible) event.bound = bound;
        if (config.on_node) config.on_node(event);
        if (!feasible || bound <= result.optimum) continue;

        if (is_integral_vector(x)) {
            // No violated triangle remains, so x is a clique partition vector.
            result.optimum = bound;
            result.partition = partition_from_integral(x);
            continue;
        }

        const std::size_t var = most_fractional(x);
        Node_ zero{node.fixings};
        zero.fixings.emplace_back(var, 0);
        Node_ one{std::move(node.fixings)};
        one.fixings.emplace_back(var, 1);
        stack.push_back(std::move(zero));
        stack.push_back(std::move(one));
    }
    return result;
}

}  // namespace chordcut
