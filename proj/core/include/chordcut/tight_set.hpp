#pragma once

// Vertices of the clique partitioning polytope that satisfy a q-chorded
// k-cycle inequality with equality: the two-family characterization, brute
// force and structured enumeration, and the phi/psi tuple constructions.

#include "chordcut/graph.hpp"
#include "chordcut/inequality.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace chordcut {

/// Cyclic distance min(|a-b|, k-|a-b|) in Z_k.
int cyclic_distance(Node a, Node b, int k);

/// A kq-feasible tuple: ceil(k/q) block sizes in {1,...,q} summing to k,
/// optionally with two positions marked as joined in the inducing partition.
class KqTuple {
public:
    /// Throws std::invalid_argument unless the tuple is kq-feasible and the
    /// merge positions are distinct and in range.
    KqTuple(int k, int q, std::vector<int> entries,
            std::optional<std::pair<int, int>> merges = std::nullopt);

    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& entries() const { return entries_; }
    const std::optional<std::pair<int, int>>& merges() const { return merges_; }
    KqTuple without_merges() const { return KqTuple(k_, q_, entries_); }

    /// Whether a tuple is kq-feasible, without throwing.
    static bool is_feasible(int k, int q, const std::vector<int>& entries);

private:
    int k_;
    int q_;
    std::vector<int> entries_;
    std::optional<std::pair<int, int>> merges_;
};

/// (a1) |Π^cyc| = ceil(k/q), (a2) every run has at most q nodes, (a3) runs
/// joined in Π are at cyclic distance > q from each other node-wise.
bool condition_a(int k, int q, const Partition& p);
/// (b1) |Π^cyc| = ceil(k/q) - 1, (b2) one run of size q+1, all others size q.
bool condition_b(int k, int q, const Partition& p);
bool is_tight_by_lemma(int k, int q, const Partition& p);

enum class TightMethod { brute, structured };

struct TightSet {
    int k = 0;
    int q = 0;
    /// Sorted, deduplicated characteristic vectors.
    std::vector<EdgeVector> vertices;
    TightMethod provenance = TightMethod::brute;
};

/// Largest k accepted by the brute-force method.
constexpr int kMaxBruteTightK = 12;
/// Largest k accepted by the structured method.
constexpr int kMaxStructuredTightK = 24;

/// brute: filters every partition of Z_k by equality in the chorded
/// inequality (k <= 12). structured: generates the (a)- and (b)-families
/// directly and keeps the members that are tight. Throws BudgetExceeded
/// outside the supported range.
TightSet enumerate_tight(int k, int q, TightMethod method);

/// Partition of the cycle that starts block 0 at node i with the tuple's
/// block sizes; marked blocks are joined. Throws std::invalid_argument when
/// joined blocks have nodes at cyclic distance <= q.
Partition phi_partition(Node i, const KqTuple& a);
EdgeVector phi(Node i, const KqTuple& a);
/// phi(i, a) - phi(i, a without merges). Throws std::invalid_argument when
/// the tuple carries no merges.
EdgeVector psi(Node i, const KqTuple& a);

}  // namespace chordcut
