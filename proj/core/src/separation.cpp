#include "chordcut/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace chordcut {
namespace {

struct Candidate {
    Rational violation;
    Inequality ineq;
};

std::vector<Inequality> by_violation(std::vector<Candidate> found)
{
    std::stable_sort(found.begin(), found.end(),
                     [](const Candidate& a, const Candidate& b) { return a.violation > b.violation; });
    std::vector<Inequality> out;
    out.reserve(found.size());
    for (auto& c : found) out.push_back(std::move(c.ineq));
    return out;
}

// Chorded inequalities of one node sequence, keeping the violated ones that
// have not been seen before.
class ChordedCollector {
public:
    ChordedCollector(const EdgeVector& x) : x_(x), n_(x.node_count()) {}

    void consider(const std::vector<Node>& cycle)
    {
        const int k = static_cast<int>(cycle.size());
        Rational ring = 0;
        for (int t = 0; t < k; ++t) ring += x_.at(Edge::make(cycle[t], cycle[(t + 1) % k]));
        for (int q = 2; 2 * q <= k; ++q) {
            Rational lhs = ring;
            for (int t = 0; t < k; ++t) lhs -= x_.at(Edge::make(cycle[t], cycle[(t + q) % k]));
            const Rational rhs = k - ((k + q - 1) / q);
            if (lhs <= rhs) continue;
            Inequality ineq = chorded_cycle_inequality(n_, cycle, q);
            // Certify on the assembled inequality, not the shortcut sum.
            Rational violation = ineq.violation(x_);
            if (violation <= 0) continue;
            if (!seen_.insert(ineq.coefficients()).second) continue;
            found_.push_back({std::move(violation), std::move(ineq)});
        }
    }

    std::vector<Inequality> take() { return by_violation(std::move(found_)); }

private:
    const EdgeVector& x_;
    int n_;
    std::set<std::map<std::size_t, Rational>> seen_;
    std::vector<Candidate> found_;
};

void exhaustive_cycles(int n, int max_k, ChordedCollector& collector)
{
    for (int k = 4; k <= std::min(max_k, n); ++k) {
        // Subsets of size k in lexicographic order.
        std::vector<int> subset(k);
        std::iota(subset.begin(), subset.end(), 0);
        for (;;) {
            // Fix the smallest node first; reflection is removed by requiring
            // the second node to be smaller than the last.
            std::vector<Node> rest(subset.begin() + 1, subset.end());
            do {
                if (rest.front() > rest.back()) continue;
                std::vector<Node> cycle{subset.front()};
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                collector.consider(cycle);
            } while (std::next_permutation(rest.begin(), rest.end()));

            int pos = k - 1;
            while (pos >= 0 && subset[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int t = pos + 1; t < k; ++t) subset[t] = subset[t - 1] + 1;
        }
    }
}

void grow_cycles(const EdgeVector& x, Node first, Node second, int max_k, std::mt19937_64* rng, ChordedCollector& collector)
{
    const int n = x.node_count();
    std::vector<Node> path{first, second};
    std::vector<bool> used(n, false);
    used[first] = used[second] = true;
    while (static_cast<int>(path.size()) < std::min(max_k, n)) {
        const Node last = path.back();
        std::vector<Node> order;
        for (Node w = 0; w < n; ++w)
            if (!used[w]) order.push_back(w);
        // Highest x(last, w) first; ties by node id.
        std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) {
            return x.at(Edge::make(last, a)) > x.at(Edge::make(last, b));
        });
        std::size_t pick = 0;
        if (rng) {
            std::uniform_int_distribution<std::size_t> dist(0, std::min<std::size_t>(order.size(), 3) - 1);
            pick = dist(*rng);
        }
        const Node next = order[pick];
        path.push_back(next);
        used[next] = true;
        if (path.size() >= 4) collector.consider(path);
    }
}

}  // namespace

std::vector<Inequality> separate_triangles(const EdgeVector& x)
{
    const int n = x.node_count();
    std::vector<Candidate> found;
    if (n < 3) return {};
    auto check = [&](Node center, Node u, Node w) {
        const Rational lhs = x.at(Edge::make(center, u)) + x.at(Edge::make(center, w)) - x.at(Edge::make(u, w));
        if (lhs > 1) found.push_back({lhs - 1, triangle_inequality(n, center, u, w)});
    };
    for (Node a = 0; a < n; ++a)
        for (Node b = a + 1; b < n; ++b)
            for (Node c = b + 1; c < n; ++c) {
                check(a, b, c);
                check(b, a, c);
                check(c, a, b);
            }
    return by_violation(std::move(found));
}

std::vector<Inequality> separate_chorded_cycles(const EdgeVector& x, const ChordedSeparationOptions& options)
{
    const int n = x.node_count();
    ChordedCollector collector(x);
    if (n < 4 || options.max_k < 4) return {};

    if (options.mode == SeparationMode::exhaustive) {
        if (n > kMaxExhaustiveSeparationNodes)
            throw std::invalid_argument("exhaustive chorded separation limited to n <= " +
                                        std::to_string(kMaxExhaustiveSeparationNodes));
        exhaustive_cycles(n, options.max_k, collector);
        return collector.take();
    }

    std::vector<std::size_t> edges(edge_count(n));
    std::iota(edges.begin(), edges.end(), 0);
    std::stable_sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
    const std::size_t greedy_starts = std::min<std::size_t>(edges.size(), static_cast<std::size_t>(options.restarts));
    for (std::size_t s = 0; s < greedy_starts; ++s) {
        const Edge e = edge_at(n, edges[s]);
        grow_cycles(x, e.i, e.j, options.max_k, nullptr, collector);
        grow_cycles(x, e.j, e.i, options.max_k, nullptr, collector);
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
    for (int r = 0; r < options.restarts; ++r) {
        const Edge e = edge_at(n, pick_edge(rng));
        if (r % 2) grow_cycles(x, e.j, e.i, options.max_k, &rng, collector);
        else grow_cycles(x, e.i, e.j, options.max_k, &rng, collector);
    }
    return collector.take();
}

}  // namespace chordcut
