#pragma once

// Linear inequalities a^T x <= alpha over the edge space of K_n, and the
// families used on clique partitioning polytopes: box, triangle, cycle,
// relaxed cycle and q-chorded k-cycle.

#include "chordcut/graph.hpp"
#include "chordcut/rational.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordcut {

enum class InequalityKind {
    box_lower,      // -x_e <= 0
    box_upper,      //  x_e <= 1
    triangle,
    cycle,
    relaxed_cycle,
    chorded,
    paired,
    lifted,
    custom,
};

struct InequalityLabel {
    InequalityKind kind = InequalityKind::custom;
    int k = 0;  // cycle length, where meaningful
    int q = 0;  // chord length, where meaningful

    std::string to_string() const;
    friend bool operator==(const InequalityLabel&, const InequalityLabel&) = default;
};

class Inequality {
public:
    Inequality() = default;
    Inequality(int n, Rational rhs, InequalityLabel label = {});

    int node_count() const { return n_; }
    const Rational& rhs() const { return rhs_; }
    void set_rhs(Rational rhs) { rhs_ = std::move(rhs); }
    const InequalityLabel& label() const { return label_; }
    void set_label(InequalityLabel label) { label_ = label; }

    /// Nonzero coefficients keyed by edge_index.
    const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(Edge e) const;
    std::size_t nonzeros() const { return coeffs_.size(); }

    /// Accumulates into the coefficient of e; entries that cancel are erased.
    void add(Edge e, const Rational& value);

    /// Exact a^T x.
    Rational evaluate(const EdgeVector& x) const;
    Rational violation(const EdgeVector& x) const { return evaluate(x) - rhs_; }
    bool is_tight(const EdgeVector& x) const { return evaluate(x) == rhs_; }
    bool is_satisfied(const EdgeVector& x) const { return evaluate(x) <= rhs_; }

    /// Same coefficient vector and right-hand side; the label is ignored.
    bool same_as(const Inequality& other) const
    {
        return n_ == other.n_ && rhs_ == other.rhs_ && coeffs_ == other.coeffs_;
    }

private:
    void check_dimension(const EdgeVector& x) const;

    int n_ = 0;
    Rational rhs_;
    InequalityLabel label_;
    std::map<std::size_t, Rational> coeffs_;
};

/// Throws std::invalid_argument unless 2 <= q <= k/2.
void require_chord_parameters(int k, int q);

/// Per edge in index order: -x_e <= 0, then x_e <= 1.
std::vector<Inequality> box_inequalities(int n);
/// x_{center,u} + x_{center,w} - x_{u,w} <= 1.
Inequality triangle_inequality(int n, Node center, Node u, Node w);
/// For each triple a < b < c, the rotations with center a, b, c in that order.
std::vector<Inequality> triangle_inequalities(int n);

/// sum_i (x_{i,i+1} - x_{i,i+q}) <= k - ceil(k/q) over Z_k. Chords hit twice
/// when q = k/2 accumulate coefficient -2.
Inequality chorded_cycle_inequality(int k, int q);
/// The same inequality on the cycle visiting `cycle` in order inside K_n.
Inequality chorded_cycle_inequality(int n, std::span<const Node> cycle, int q);

/// sum_{j<q} x_{i+j,i+j+1} - x_{i,i+q} <= q - 1.
Inequality cycle_inequality(int k, Node i, int q);
/// Cycle inequality plus (q-1) copies of -x_{i,i+q} <= 0.
Inequality relaxed_cycle_inequality(int k, Node i, int q);

/// Lower side of the chorded pair for k = 1 (mod q), written as
/// -sum_i (x_{i,i+1} - x_{i,i+q}) <= k - q - 1. This is the ((k-1)/q)-chorded
/// k-cycle inequality on the cycle of q-chords.
Inequality paired_inequality(int k, int q);

/// Reinterprets the coefficients over E_m (new edges get 0). Throws when m < n.
Inequality zero_lift(const Inequality& ineq, int m);

/// Exhaustive check of a^T x^Π <= rhs over every partition of the inequality's
/// node set. Throws std::out_of_range when n > 12.
bool is_valid_over_polytope(const Inequality& ineq, int k);

constexpr int kMaxExhaustiveNodes = 12;

/// Text form: header `ineq n=<n> rhs=<r>`, then `<i> <j> <coeff>` per nonzero
/// in edge_index order; newline-terminated lines.
std::string format_inequality(const Inequality& ineq);
/// Inverse of format_inequality; rejects out-of-order, duplicate or zero
/// entries so that formatting the result reproduces the input byte for byte.
Inequality parse_inequality(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Inequality& ineq);

}  // namespace chordcut
