#pragma once

// Exact rational LP over the edge space: maximize c^T x subject to
// 0 <= x <= 1 and a pool of inequalities a^T x <= b.
//
// Bounded-variable dual simplex on a dense tableau. The box constraints are
// variable bounds; the start basis (all slacks basic, each structural
// variable at the bound favoured by its objective sign) is dual feasible, so
// cuts and variable fixings can be added between solves without a phase 1.
// Bland-type selection (smallest infeasible basic index leaves, ties in the
// ratio test go to the smallest index) prevents cycling.

#include "chordcut/graph.hpp"
#include "chordcut/inequality.hpp"
#include "chordcut/rational.hpp"

#include <cstddef>
#include <vector>

namespace chordcut {

enum class LpStatus { optimal, infeasible };

class DualSimplex {
public:
    /// One structural variable per edge of K_n, bounded to [0, 1].
    DualSimplex(int n, std::vector<Rational> objective);

    /// Appends a^T x <= rhs. Returns the row index.
    std::size_t add_row(const Inequality& row);
    /// Restricts a structural variable to a single value in [0, 1].
    void fix(std::size_t var, const Rational& value);

    /// Runs dual simplex pivots from the current basis.
    LpStatus solve();

    int node_count() const { return n_; }
    std::size_t rows() const { return basis_.size(); }
    std::size_t structural_count() const { return ns_; }
    /// Structural part of the current basic solution.
    EdgeVector solution() const;
    Rational objective_value() const;
    std::size_t iterations() const { return iterations_; }

private:
    std::size_t width() const { return ns_ + basis_.size(); }
    bool is_fixed(std::size_t v) const { return has_upper_[v] && lower_[v] == upper_[v]; }
    void refresh_basic_values();
    void pivot(std::size_t row, std::size_t col);

    int n_;
    std::size_t ns_;
    std::vector<Rational> cost_;    // per variable, slacks 0
    std::vector<Rational> lower_;
    std::vector<Rational> upper_;
    std::vector<bool> has_upper_;
    std::vector<bool> at_upper_;    // nonbasic position
    std::vector<Rational> value_;
    std::vector<long> row_of_;      // -1 when nonbasic

    std::vector<std::vector<Rational>> tableau_;  // B^{-1} [A I]
    std::vector<Rational> rhs_;                    // B^{-1} b
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;               // c - c_B B^{-1} [A I]
    std::size_t iterations_ = 0;
};

struct LpState {
    LpStatus status = LpStatus::optimal;
    EdgeVector x;
    Rational objective;
    std::size_t iterations = 0;
    std::vector<Inequality> pool;
};

/// Solves max c^T x over the box and the pool from a fresh basis.
LpState lp_solve(int n, const std::vector<Rational>& objective, const std::vector<Inequality>& pool);

}  // namespace chordcut
