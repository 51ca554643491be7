#include "chordcut/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chordcut {

Edge Edge::make(Node a, Node b)
{
    if (a == b)
        throw std::invalid_argument("edge endpoints must differ (got " + std::to_string(a) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
}

Edge Edge::on_cycle(long long a, long long b, int k)
{
    return make(mod(a, k), mod(b, k));
}

std::size_t edge_index(int n, Edge e)
{
    if (e.i < 0 || e.j >= n || e.i >= e.j)
        throw std::out_of_range("edge {" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                "} is not an edge of K_" + std::to_string(n));
    const auto i = static_cast<std::size_t>(e.i);
    const auto j = static_cast<std::size_t>(e.j);
    return i * (2 * static_cast<std::size_t>(n) - i - 1) / 2 + (j - i - 1);
}

Edge edge_at(int n, std::size_t index)
{
    if (index >= edge_count(n))
        throw std::out_of_range("edge index " + std::to_string(index) + " out of range for K_" +
                                std::to_string(n));
    Node i = 0;
    std::size_t row = static_cast<std::size_t>(n) - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++i;
    }
    return Edge{i, i + 1 + static_cast<Node>(index)};
}

// ---------------------------------------------------------------- Partition

Partition::Partition(int n, std::vector<std::vector<Node>> blocks) : n_(n), labels_(n, -1)
{
    if (n < 1) throw std::invalid_argument("partition needs at least one node");
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition block is empty");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Node v : blocks[b]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("node " + std::to_string(v) + " outside 0.." +
                                            std::to_string(n - 1));
            if (labels_[v] != -1)
                throw std::invalid_argument("node " + std::to_string(v) + " in two blocks");
            labels_[v] = static_cast<int>(b);
        }
    }
    for (Node v = 0; v < n; ++v)
        if (labels_[v] == -1)
            throw std::invalid_argument("node " + std::to_string(v) + " not covered");
    blocks_ = std::move(blocks);
}

Partition Partition::from_labels(const std::vector<int>& labels)
{
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<Node>> blocks;
    std::vector<int> remap;
    for (Node v = 0; v < n; ++v) {
        const int label = labels[v];
        if (label < 0) throw std::invalid_argument("negative block label");
        if (static_cast<std::size_t>(label) >= remap.size()) remap.resize(label + 1, -1);
        if (remap[label] == -1) {
            remap[label] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[remap[label]].push_back(v);
    }
    return Partition(n, std::move(blocks));
}

Partition Partition::singletons(int n)
{
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return from_labels(labels);
}

Partition Partition::whole(int n)
{
    return from_labels(std::vector<int>(n, 0));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ';';
        out += '{';
        for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
            if (t) out += ',';
            out += std::to_string(blocks_[b][t]);
        }
        out += '}';
    }
    return out;
}

// ----------------------------------------------------------- CyclePartition

CyclePartition::CyclePartition(int k, std::vector<Node> starts) : k_(k)
{
    if (k < 1) throw std::invalid_argument("cycle partition needs at least one node");
    std::sort(starts.begin(), starts.end());
    if (std::adjacent_find(starts.begin(), starts.end()) != starts.end())
        throw std::invalid_argument("duplicate run start");
    for (Node s : starts)
        if (s < 0 || s >= k) throw std::invalid_argument("run start outside Z_k");
    if (starts.empty()) starts.push_back(0);

    for (std::size_t b = 0; b < starts.size(); ++b) {
        const Node begin = starts[b];
        const Node end = b + 1 < starts.size() ? starts[b + 1] : starts.front() + k;
        std::vector<Node> block;
        for (long long v = begin; v < end; ++v) block.push_back(mod(v, k));
        blocks_.push_back(std::move(block));
    }
}

std::vector<int> CyclePartition::block_sizes() const
{
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

Partition CyclePartition::to_partition() const
{
    return Partition(k_, blocks_);
}

CyclePartition induced_cycle_partition(int k, const std::vector<int>& labels)
{
    if (static_cast<int>(labels.size()) != k)
        throw std::invalid_argument("labels do not cover Z_k");
    std::vector<Node> starts;
    for (Node v = 0; v < k; ++v)
        if (labels[v] != labels[mod(v - 1, k)]) starts.push_back(v);
    return CyclePartition(k, std::move(starts));
}

CyclePartition induced_cycle_partition(int k, const Partition& p)
{
    if (p.node_count() != k) throw std::invalid_argument("partition is not over Z_k");
    return induced_cycle_partition(k, p.labels());
}

// --------------------------------------------------------------- EdgeVector

EdgeVector::EdgeVector(int n) : n_(n), entries_(edge_count(n)) {}

EdgeVector::EdgeVector(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries))
{
    if (entries_.size() != edge_count(n))
        throw std::invalid_argument("edge vector length " + std::to_string(entries_.size()) +
                                    " does not match binom(" + std::to_string(n) + ",2)");
}

EdgeVector EdgeVector::unit(int n, Edge e)
{
    EdgeVector v(n);
    v.at(e) = 1;
    return v;
}

bool EdgeVector::is_binary() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r == 0 || r == 1; });
}

bool EdgeVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
}

std::vector<Edge> EdgeVector::support() const
{
    std::vector<Edge> edges;
    for (std::size_t idx = 0; idx < entries_.size(); ++idx)
        if (entries_[idx] != 0) edges.push_back(edge_at(n_, idx));
    return edges;
}

void EdgeVector::check_compatible(const EdgeVector& other) const
{
    if (n_ != other.n_ || entries_.size() != other.entries_.size())
        throw std::invalid_argument("edge vector dimension mismatch");
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& other)
{
    check_compatible(other);
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) entries_[idx] += other.entries_[idx];
    return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& other)
{
    check_compatible(other);
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) entries_[idx] -= other.entries_[idx];
    return *this;
}

bool operator<(const EdgeVector& a, const EdgeVector& b)
{
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
}

std::string EdgeVector::to_string() const
{
    std::string out;
    if (is_binary()) {
        for (const auto& r : entries_) out += (r == 0 ? '0' : '1');
        return out;
    }
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
        if (idx) out += ' ';
        out += entries_[idx].get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Edge& e)
{
    return os << '{' << e.i << ',' << e.j << '}';
}

std::ostream& operator<<(std::ostream& os, const EdgeVector& v)
{
    return os << v.to_string();
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.to_string();
}

EdgeVector characteristic_vector(int n, const std::vector<int>& labels)
{
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("labels do not cover the node set");
    EdgeVector x(n);
    std::size_t idx = 0;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j, ++idx)
            if (labels[i] == labels[j]) x[idx] = 1;
    return x;
}

EdgeVector characteristic_vector(int n, const Partition& p)
{
    if (p.node_count() != n) throw std::invalid_argument("partition is not over K_n");
    return characteristic_vector(n, p.labels());
}

bool is_clique_partition_vector(int n, const EdgeVector& x)
{
    if (x.node_count() != n || x.size() != edge_count(n))
        throw std::invalid_argument("edge vector dimension mismatch");
    if (!x.is_binary()) throw std::invalid_argument("clique partition test needs a 0/1 vector");

    // Ordered triples: each unordered triple is visited once per choice of
    // the middle node j, which covers all three rotations.
    for (Node i = 0; i < n; ++i)
        for (Node j = 0; j < n; ++j)
            for (Node k = i + 1; k < n; ++k) {
                if (j == i || j == k) continue;
                if (x.at(Edge::make(i, j)) + x.at(Edge::make(j, k)) - x.at(Edge::make(i, k)) > 1)
                    return false;
            }
    return true;
}

// ------------------------------------------------------ PartitionEnumerator

PartitionEnumerator::PartitionEnumerator(int k) : rgs_(k, 0), prefix_max_(k, 0)
{
    if (k < 1) throw std::invalid_argument("partition enumeration needs k >= 1");
}

bool PartitionEnumerator::next()
{
    const int k = static_cast<int>(rgs_.size());
    for (int i = k - 1; i >= 1; --i) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
            for (int t = i + 1; t < k; ++t) {
                rgs_[t] = 0;
                prefix_max_[t] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

void for_each_partition(int k, const std::function<void(const std::vector<int>&)>& fn)
{
    PartitionEnumerator e(k);
    do {
        fn(e.labels());
    } while (e.next());
}

std::vector<Partition> enumerate_partitions(int k)
{
    std::vector<Partition> out;
    for_each_partition(k, [&](const std::vector<int>& labels) {
        out.push_back(Partition::from_labels(labels));
    });
    return out;
}

unsigned long long bell_number(int k)
{
    if (k < 0 || k > 25) throw std::out_of_range("bell_number supports 0 <= k <= 25");
    // Bell triangle.
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < k; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (auto v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace chordcut
