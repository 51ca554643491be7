#include "chordcut/identities.hpp"

#include <stdexcept>

namespace chordcut {
namespace {

std::vector<int> runs(std::initializer_list<int> head, int q_count, int q, std::initializer_list<int> tail = {})
{
    std::vector<int> out(head);
    out.insert(out.end(), q_count, q);
    out.insert(out.end(), tail);
    return out;
}

KqTuple tuple(int k, int q, std::vector<int> entries)
{
    return KqTuple(k, q, std::move(entries));
}

KqTuple joined(int k, int q, std::vector<int> entries, int a, int b)
{
    return KqTuple(k, q, std::move(entries), std::pair{a, b});
}

void require_range(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

int cycle_multiplicity(int k, int q)
{
    require_chord_parameters(k, q);
    if (k % q != 1)
        throw std::invalid_argument("construction needs k = 1 (mod q) (got k=" + std::to_string(k) +
                                    ", q=" + std::to_string(q) + ")");
    return (k - 1) / q;
}

EdgeVector short_chord_combination(int k, int q, Node i, int p)
{
    const int m = cycle_multiplicity(k, q);
    require_range(p >= 2 && p <= q - 1, "short chord construction needs 2 <= p <= q-1");
    const Node i1 = mod(i + 1, k);
    return phi(i, tuple(k, q, runs({p + 1, q - p + 1}, m - 2, q, {q - 1}))) -
           phi(i, tuple(k, q, runs({p, q - p + 2}, m - 2, q, {q - 1}))) -
           phi(i1, tuple(k, q, runs({p, q - p + 1}, m - 2, q, {q}))) +
           phi(i1, tuple(k, q, runs({p - 1, q - p + 2}, m - 2, q, {q})));
}

EdgeVector edge_shift_combination(int k, int q, Node i)
{
    const int m = cycle_multiplicity(k, q);
    return phi(i, tuple(k, q, runs({2, q - 1}, m - 1, q))) - phi(i, tuple(k, q, runs({1}, m, q)));
}

Partition long_run_partition(int k, int q, Node i)
{
    const int m = cycle_multiplicity(k, q);
    if (i < 0 || i >= k) throw std::invalid_argument("start node outside Z_k");
    std::vector<std::vector<Node>> blocks;
    long long pos = i;
    for (int b = 0; b < m; ++b) {
        const int size = b == 0 ? q + 1 : q;
        std::vector<Node> block;
        for (int t = 0; t < size; ++t) block.push_back(mod(pos + t, k));
        pos += size;
        blocks.push_back(std::move(block));
    }
    return Partition(k, std::move(blocks));
}

EdgeVector edge_chord_combination(int k, int q, Node i)
{
    const int m = cycle_multiplicity(k, q);
    return characteristic_vector(k, long_run_partition(k, q, i)) - phi(i, tuple(k, q, runs({1}, m, q)));
}

EdgeVector three_run_long_chord_combination(int k, int q, Node j, int p)
{
    const int m = cycle_multiplicity(k, q);
    require_range(m == 3, "three-run construction needs k = 3q+1");
    require_range(p >= q + 1 && p <= k / 2, "three-run construction needs q+1 <= p <= k/2");
    const int d = p - q;
    return psi(mod(j + d, k), joined(k, q, {1, q, q, q}, 0, 2)) +
           psi(j, joined(k, q, {d, q, q + 1 - d, q}, 0, 2)) -
           psi(j, joined(k, q, {d + 1, q, q - d, q}, 0, 2));
}

EdgeVector long_chord_combination(int k, int q, Node i, int s, int j)
{
    const int m = cycle_multiplicity(k, q);
    require_range(m > 3, "long chord construction needs k = mq+1 with m > 3");
    require_range(s >= 1 && s <= m - 3, "long chord construction needs 1 <= s <= m-3");
    require_range(j >= 2 && j <= q - 1, "long chord construction needs 2 <= j <= q-1");
    const Node t = mod(i - q + 1, k);
    const int tail = m - s - 2;
    auto row = [&](int first, int free_run, int joined_run) {
        auto r = runs({first}, s, q, {free_run, joined_run});
        r.insert(r.end(), tail, q);
        return joined(k, q, std::move(r), 0, s + 2);
    };
    return psi(t, row(q, j - 1, q - j + 2)) - psi(t, row(q - 1, j, q - j + 2)) -
           psi(t, row(q, j, q - j + 1)) + psi(t, row(q - 1, j + 1, q - j + 1));
}

EdgeVector long_chord_swapped_combination(int k, int q, Node i, int s)
{
    const int m = cycle_multiplicity(k, q);
    require_range(m > 3, "long chord construction needs k = mq+1 with m > 3");
    require_range(s >= 1 && s <= m - 3, "long chord construction needs 1 <= s <= m-3");
    require_range(q >= 3, "swapped long chord construction needs q >= 3");
    const Node t = mod(i - q + 1, k);
    const int tail = m - s - 2;
    const int far = s + 1;
    auto row = [&](int first, int joined_run, int free_run) {
        auto r = runs({first}, s, q, {joined_run, free_run});
        r.insert(r.end(), tail, q);
        return joined(k, q, std::move(r), 0, far);
    };
    return psi(t, row(q, q, 1)) - psi(t, row(q - 1, q, 2)) - psi(t, row(q, q - 1, 2)) +
           psi(t, row(q - 1, q - 1, 3));
}

EdgeVector telescoping_chord_combination(int k, int q, Node i, int s)
{
    const int m = cycle_multiplicity(k, q);
    require_range(m > 3, "telescoping construction needs k = mq+1 with m > 3");
    require_range(s >= 1 && s <= m - 3, "telescoping construction needs 1 <= s <= m-3");
    auto r = runs({1}, s, q, {q});
    r.insert(r.end(), m - s - 1, q);
    return psi(i, joined(k, q, std::move(r), 0, s + 1));
}

}  // namespace chordcut
