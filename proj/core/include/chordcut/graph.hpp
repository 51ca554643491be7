#pragma once

// Complete-graph data model: nodes of K_n (read as Z_k on cycles), edge
// indexing, set partitions, induced cycle partitions and edge vectors.

#include "chordcut/rational.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace chordcut {

using Node = int;

/// Number of edges of K_n.
constexpr std::size_t edge_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

/// Non-negative residue of a modulo k.
constexpr Node mod(long long a, int k) { return static_cast<Node>(((a % k) + k) % k); }

/// Undirected edge, stored with i < j.
struct Edge {
    Node i = 0;
    Node j = 1;

    /// Normalizes the endpoint order. Throws std::invalid_argument on a loop.
    static Edge make(Node a, Node b);
    /// Edge {a mod k, b mod k} of the cycle Z_k.
    static Edge on_cycle(long long a, long long b, int k);

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Lexicographic index of e in E_n: i(2n-i-1)/2 + (j-i-1).
/// Throws std::out_of_range unless 0 <= e.i < e.j < n.
std::size_t edge_index(int n, Edge e);
/// Inverse of edge_index.
Edge edge_at(int n, std::size_t index);

/// Set partition of {0,...,n-1} in canonical form: blocks ordered by their
/// minimum element, elements ascending within each block.
class Partition {
public:
    Partition() = default;
    /// Validates and canonicalizes. Throws std::invalid_argument if the blocks
    /// are empty, overlap or do not cover {0,...,n-1}.
    Partition(int n, std::vector<std::vector<Node>> blocks);

    /// Builds the partition whose blocks are the label classes.
    static Partition from_labels(std::vector<int> const& labels);
    static Partition singletons(int n);
    static Partition whole(int n);

    int node_count() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<std::vector<Node>>& blocks() const { return blocks_; }
    /// labels()[v] is the index of the block containing v.
    const std::vector<int>& labels() const { return labels_; }
    bool same_block(Node a, Node b) const { return labels_.at(a) == labels_.at(b); }

    /// `{a,b,...};{...}` in canonical order.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<Node>> blocks_;
    std::vector<int> labels_;
};

/// Partition of Z_k into maximal runs of cyclically consecutive nodes.
/// Each block is listed in cyclic order from its start node; blocks are
/// ordered by start node. A single run covering Z_k starts at 0.
class CyclePartition {
public:
    CyclePartition() = default;
    /// starts: sorted, distinct nodes of Z_k where a run begins (empty for one run).
    CyclePartition(int k, std::vector<Node> starts);

    int node_count() const { return k_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<std::vector<Node>>& blocks() const { return blocks_; }
    std::vector<int> block_sizes() const;
    Partition to_partition() const;

    friend bool operator==(const CyclePartition&, const CyclePartition&) = default;

private:
    int k_ = 0;
    std::vector<std::vector<Node>> blocks_;
};

/// Exact rational vector over E_n, indexed by edge_index.
class EdgeVector {
public:
    EdgeVector() = default;
    explicit EdgeVector(int n);
    EdgeVector(int n, std::vector<Rational> entries);

    static EdgeVector unit(int n, Edge e);

    int node_count() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t index) const { return entries_[index]; }
    Rational& operator[](std::size_t index) { return entries_[index]; }
    const Rational& at(Edge e) const { return entries_[edge_index(n_, e)]; }
    Rational& at(Edge e) { return entries_[edge_index(n_, e)]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_binary() const;
    bool is_zero() const;
    /// Edges carrying a nonzero entry, in index order.
    std::vector<Edge> support() const;

    EdgeVector& operator+=(const EdgeVector& other);
    EdgeVector& operator-=(const EdgeVector& other);
    friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
    friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }

    friend bool operator==(const EdgeVector& a, const EdgeVector& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const EdgeVector& a, const EdgeVector& b);

    /// Entries separated by spaces; 0/1 vectors print as a bit string.
    std::string to_string() const;

private:
    void check_compatible(const EdgeVector& other) const;

    int n_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);
std::ostream& operator<<(std::ostream& os, const EdgeVector& v);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// x^Π: entry 1 exactly when both endpoints share a block.
EdgeVector characteristic_vector(int n, const Partition& p);
/// Same, from a block label per node.
EdgeVector characteristic_vector(int n, const std::vector<int>& labels);

/// True iff every triangle inequality x_ij + x_jk - x_ik <= 1 holds over all
/// ordered distinct triples. Throws std::invalid_argument on non-binary input.
bool is_clique_partition_vector(int n, const EdgeVector& x);

/// Set partitions of Z_k in restricted-growth-string lexicographic order.
///
///     PartitionEnumerator e(5);
///     do { use(e.labels()); } while (e.next());
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int k);

    /// Restricted growth string of the current partition; doubles as block labels.
    const std::vector<int>& labels() const { return rgs_; }
    Partition partition() const { return Partition::from_labels(rgs_); }
    /// Advances; returns false after the last partition.
    bool next();

private:
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
};

/// Invokes fn on the labels of every partition of Z_k, in enumeration order.
void for_each_partition(int k, const std::function<void(const std::vector<int>&)>& fn);
std::vector<Partition> enumerate_partitions(int k);
/// Bell number B(k), exact for k <= 25.
unsigned long long bell_number(int k);

/// Connected components of the cycle edges {i,i+1} whose endpoints share a block of p.
CyclePartition induced_cycle_partition(int k, const Partition& p);
CyclePartition induced_cycle_partition(int k, const std::vector<int>& labels);

}  // namespace chordcut
