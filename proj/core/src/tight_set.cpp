#include "chordcut/tight_set.hpp"

#include "chordcut/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chordcut {
namespace {

int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

// Smallest cyclic distance between a node of `a` and a node of `b`.
int run_distance(const std::vector<Node>& a, const std::vector<Node>& b, int k)
{
    int best = k;
    for (Node u : a)
        for (Node v : b) best = std::min(best, cyclic_distance(u, v, k));
    return best;
}

// sum_i x_{i,i+1} - x_{i,i+q} evaluated on block labels.
int chorded_lhs(const std::vector<int>& labels, int k, int q)
{
    // For q = k/2 each diagonal is counted twice, matching the accumulated
    // coefficient -2.
    int lhs = 0;
    for (int i = 0; i < k; ++i) {
        if (labels[i] == labels[mod(i + 1, k)]) ++lhs;
        if (labels[i] == labels[mod(i + q, k)]) --lhs;
    }
    return lhs;
}

std::vector<char> bit_key(const std::vector<int>& labels)
{
    const int n = static_cast<int>(labels.size());
    std::vector<char> key;
    key.reserve(edge_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) key.push_back(labels[i] == labels[j] ? 1 : 0);
    return key;
}

EdgeVector from_key(int n, const std::vector<char>& key)
{
    EdgeVector x(n);
    for (std::size_t idx = 0; idx < key.size(); ++idx)
        if (key[idx]) x[idx] = 1;
    return x;
}

// Run start positions for block sizes laid out from node i.
std::vector<Node> run_starts(int k, Node i, const std::vector<int>& sizes)
{
    std::vector<Node> starts;
    long long pos = i;
    for (int s : sizes) {
        starts.push_back(mod(pos, k));
        pos += s;
    }
    std::sort(starts.begin(), starts.end());
    return starts;
}

// Calls fn(group_of_run) for every assignment of runs to groups in which
// each group only holds pairwise compatible runs. Groups are numbered in
// first-use order, so each set partition of the runs is visited once.
void for_each_grouping(std::size_t runs, const std::function<bool(std::size_t, std::size_t)>& compatible,
                       const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> group(runs, -1);
    std::function<void(std::size_t, int)> assign = [&](std::size_t r, int used) {
        if (r == runs) {
            fn(group);
            return;
        }
        for (int g = 0; g <= used; ++g) {
            bool ok = true;
            for (std::size_t s = 0; s < r && ok; ++s)
                if (group[s] == g && !compatible(s, r)) ok = false;
            if (!ok) continue;
            group[r] = g;
            assign(r + 1, g == used ? used + 1 : used);
        }
        group[r] = -1;
    };
    assign(0, 0);
}

// Compositions of `total` into `parts` entries within [lo, hi].
void for_each_composition(int total, int parts, int lo, int hi,
                          const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> entries(parts);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            if (remaining >= lo && remaining <= hi) {
                entries[pos] = remaining;
                fn(entries);
            }
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            const int rest = remaining - v;
            const int left = parts - pos - 1;
            if (rest < left * lo || rest > left * hi) continue;
            entries[pos] = v;
            rec(pos + 1, rest);
        }
    };
    if (parts > 0) rec(0, total);
}

constexpr std::size_t kMaxStructuredCandidates = 4'000'000;

}  // namespace

int cyclic_distance(Node a, Node b, int k)
{
    const int d = mod(static_cast<long long>(a) - b, k);
    return std::min(d, k - d);
}

// ------------------------------------------------------------------ KqTuple

KqTuple::KqTuple(int k, int q, std::vector<int> entries, std::optional<std::pair<int, int>> merges)
    : k_(k), q_(q), entries_(std::move(entries)), merges_(merges)
{
    require_chord_parameters(k, q);
    if (!is_feasible(k, q, entries_))
        throw std::invalid_argument("tuple is not kq-feasible for k=" + std::to_string(k) +
                                    ", q=" + std::to_string(q));
    if (merges_) {
        auto [a, b] = *merges_;
        const int len = static_cast<int>(entries_.size());
        if (a == b || a < 0 || b < 0 || a >= len || b >= len)
            throw std::invalid_argument("merge positions must be distinct tuple positions");
        if (a > b) merges_ = std::pair{b, a};
    }
}

bool KqTuple::is_feasible(int k, int q, const std::vector<int>& entries)
{
    if (q < 1 || static_cast<int>(entries.size()) != ceil_div_int(k, q)) return false;
    for (int e : entries)
        if (e < 1 || e > q) return false;
    return std::accumulate(entries.begin(), entries.end(), 0) == k;
}

// --------------------------------------------------------------- conditions

bool condition_a(int k, int q, const Partition& p)
{
    const CyclePartition cyc = induced_cycle_partition(k, p);
    if (static_cast<int>(cyc.size()) != ceil_div_int(k, q)) return false;
    for (const auto& run : cyc.blocks())
        if (static_cast<int>(run.size()) > q) return false;
    const auto& runs = cyc.blocks();
    for (std::size_t a = 0; a < runs.size(); ++a)
        for (std::size_t b = a + 1; b < runs.size(); ++b)
            if (p.same_block(runs[a].front(), runs[b].front()) && run_distance(runs[a], runs[b], k) <= q)
                return false;
    return true;
}

bool condition_b(int k, int q, const Partition& p)
{
    const CyclePartition cyc = induced_cycle_partition(k, p);
    if (static_cast<int>(cyc.size()) != ceil_div_int(k, q) - 1) return false;
    int long_runs = 0;
    for (const auto& run : cyc.blocks()) {
        const int size = static_cast<int>(run.size());
        if (size == q + 1) ++long_runs;
        else if (size != q) return false;
    }
    return long_runs == 1;
}

bool is_tight_by_lemma(int k, int q, const Partition& p)
{
    require_chord_parameters(k, q);
    if (p.node_count() != k) throw std::invalid_argument("partition is not over Z_k");
    return condition_a(k, q, p) || condition_b(k, q, p);
}

// -------------------------------------------------------------- enumeration

TightSet enumerate_tight(int k, int q, TightMethod method)
{
    require_chord_parameters(k, q);
    const int rhs = k - ceil_div_int(k, q);
    std::vector<std::vector<char>> keys;

    if (method == TightMethod::brute) {
        if (k > kMaxBruteTightK)
            throw BudgetExceeded("brute-force tight enumeration limited to k <= " +
                                 std::to_string(kMaxBruteTightK));
        for_each_partition(k, [&](const std::vector<int>& labels) {
            if (chorded_lhs(labels, k, q) == rhs) keys.push_back(bit_key(labels));
        });
    } else {
        if (k > kMaxStructuredTightK)
            throw BudgetExceeded("structured tight enumeration limited to k <= " +
                                 std::to_string(kMaxStructuredTightK));
        const int runs_a = ceil_div_int(k, q);
        std::size_t candidates = 0;

        auto emit_family = [&](const std::vector<std::vector<Node>>& cycle_partitions,
                               const std::function<bool(const std::vector<Node>&, const std::vector<Node>&)>& joinable) {
            for (const auto& starts : cycle_partitions) {
                const CyclePartition cyc(k, starts);
                const auto& runs = cyc.blocks();
                std::vector<int> labels(k);
                for_each_grouping(
                    runs.size(),
                    [&](std::size_t a, std::size_t b) { return joinable(runs[a], runs[b]); },
                    [&](const std::vector<int>& group) {
                        if (++candidates > kMaxStructuredCandidates)
                            throw BudgetExceeded("structured tight enumeration exceeded " +
                                                 std::to_string(kMaxStructuredCandidates) +
                                                 " candidate partitions");
                        for (std::size_t r = 0; r < runs.size(); ++r)
                            for (Node v : runs[r]) labels[v] = group[r];
                        if (chorded_lhs(labels, k, q) == rhs) keys.push_back(bit_key(labels));
                    });
            }
        };

        auto rotations = [&](const std::vector<int>& sizes, std::vector<std::vector<Node>>& out) {
            for (Node i = 0; i < k; ++i) out.push_back(run_starts(k, i, sizes));
        };

        // (a)-family: ceil(k/q) runs of at most q nodes; joined runs keep all
        // cross pairs at cyclic distance > q.
        std::vector<std::vector<Node>> family_a;
        for_each_composition(k, runs_a, 1, q, [&](const std::vector<int>& sizes) { rotations(sizes, family_a); });
        std::sort(family_a.begin(), family_a.end());
        family_a.erase(std::unique(family_a.begin(), family_a.end()), family_a.end());
        emit_family(family_a, [&](const auto& a, const auto& b) { return run_distance(a, b, k) > q; });

        // (b)-family: one run of q+1 nodes, the rest of q nodes. Any two
        // non-adjacent runs may be joined; joining adjacent runs would change
        // the induced cycle partition.
        if (k % q == 1) {
            std::vector<int> sizes(runs_a - 1, q);
            sizes.front() = q + 1;
            std::vector<std::vector<Node>> family_b;
            rotations(sizes, family_b);
            std::sort(family_b.begin(), family_b.end());
            family_b.erase(std::unique(family_b.begin(), family_b.end()), family_b.end());
            emit_family(family_b, [&](const auto& a, const auto& b) { return run_distance(a, b, k) > 1; });
        }
    }

    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    TightSet out{k, q, {}, method};
    out.vertices.reserve(keys.size());
    for (const auto& key : keys) out.vertices.push_back(from_key(k, key));
    return out;
}

// ------------------------------------------------------------------ phi/psi

Partition phi_partition(Node i, const KqTuple& a)
{
    const int k = a.k();
    if (i < 0 || i >= k) throw std::invalid_argument("phi start node outside Z_k");
    const auto& sizes = a.entries();
    std::vector<std::vector<Node>> blocks;
    long long pos = i;
    for (int s : sizes) {
        std::vector<Node> block;
        for (int t = 0; t < s; ++t) block.push_back(mod(pos + t, k));
        pos += s;
        blocks.push_back(std::move(block));
    }
    if (const auto& m = a.merges()) {
        const auto [first, second] = *m;
        if (run_distance(blocks[first], blocks[second], k) <= a.q())
            throw std::invalid_argument("joined blocks " + std::to_string(first) + " and " +
                                        std::to_string(second) + " are within distance q");
        blocks[first].insert(blocks[first].end(), blocks[second].begin(), blocks[second].end());
        blocks.erase(blocks.begin() + second);
    }
    return Partition(k, std::move(blocks));
}

EdgeVector phi(Node i, const KqTuple& a)
{
    return characteristic_vector(a.k(), phi_partition(i, a));
}

EdgeVector psi(Node i, const KqTuple& a)
{
    if (!a.merges()) throw std::invalid_argument("psi needs a tuple with two joined blocks");
    return phi(i, a) - phi(i, a.without_merges());
}

}  // namespace chordcut
