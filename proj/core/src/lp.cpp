#include "chordcut/lp.hpp"

#include <stdexcept>

namespace chordcut {

DualSimplex::DualSimplex(int n, std::vector<Rational> objective)
    : n_(n), ns_(edge_count(n)), cost_(std::move(objective))
{
    if (cost_.size() != ns_)
        throw std::invalid_argument("objective length does not match binom(n,2)");
    lower_.assign(ns_, Rational(0));
    upper_.assign(ns_, Rational(1));
    has_upper_.assign(ns_, true);
    at_upper_.resize(ns_);
    value_.resize(ns_);
    row_of_.assign(ns_, -1);
    reduced_ = cost_;
    for (std::size_t v = 0; v < ns_; ++v) {
        at_upper_[v] = cost_[v] > 0;
        value_[v] = at_upper_[v] ? upper_[v] : lower_[v];
    }
}

std::size_t DualSimplex::add_row(const Inequality& row)
{
    if (row.node_count() != n_) throw std::invalid_argument("LP row over a different node set");
    const std::size_t slack = width();
    for (auto& r : tableau_) r.emplace_back(0);

    std::vector<Rational> fresh(slack + 1);
    for (const auto& [idx, coeff] : row.coefficients()) fresh[idx] = coeff;
    fresh[slack] = 1;
    Rational rhs = row.rhs();
    // Express the row in the current nonbasic variables.
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const std::size_t b = basis_[r];
        if (fresh[b] == 0) continue;
        const Rational factor = fresh[b];
        for (std::size_t c = 0; c < slack + 1; ++c)
            if (tableau_[r][c] != 0) fresh[c] -= factor * tableau_[r][c];
        rhs -= factor * rhs_[r];
    }

    tableau_.push_back(std::move(fresh));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(slack);
    cost_.emplace_back(0);
    lower_.emplace_back(0);
    upper_.emplace_back(0);
    has_upper_.push_back(false);
    at_upper_.push_back(false);
    value_.emplace_back(0);
    row_of_.push_back(static_cast<long>(basis_.size() - 1));
    reduced_.emplace_back(0);
    refresh_basic_values();
    return basis_.size() - 1;
}

void DualSimplex::fix(std::size_t var, const Rational& value)
{
    if (var >= ns_) throw std::out_of_range("only structural variables can be fixed");
    if (value < 0 || value > 1) throw std::invalid_argument("fixed value outside [0, 1]");
    lower_[var] = value;
    upper_[var] = value;
    if (row_of_[var] < 0) value_[var] = value;
    refresh_basic_values();
}

void DualSimplex::refresh_basic_values()
{
    const std::size_t w = width();
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Rational v = rhs_[r];
        const auto& row = tableau_[r];
        for (std::size_t c = 0; c < w; ++c)
            if (row_of_[c] < 0 && row[c] != 0 && value_[c] != 0) v -= row[c] * value_[c];
        value_[basis_[r]] = std::move(v);
    }
}

void DualSimplex::pivot(std::size_t row, std::size_t col)
{
    const std::size_t w = width();
    auto& prow = tableau_[row];
    const Rational inv = 1 / prow[col];
    for (std::size_t c = 0; c < w; ++c)
        if (prow[c] != 0) prow[c] *= inv;
    rhs_[row] *= inv;

    for (std::size_t r = 0; r < tableau_.size(); ++r) {
        if (r == row) continue;
        auto& target = tableau_[r];
        if (target[col] == 0) continue;
        const Rational factor = target[col];
        for (std::size_t c = 0; c < w; ++c)
            if (prow[c] != 0) target[c] -= factor * prow[c];
        rhs_[r] -= factor * rhs_[row];
    }
    if (reduced_[col] != 0) {
        const Rational factor = reduced_[col];
        for (std::size_t c = 0; c < w; ++c)
            if (prow[c] != 0) reduced_[c] -= factor * prow[c];
    }

    const std::size_t leaving = basis_[row];
    row_of_[leaving] = -1;
    row_of_[col] = static_cast<long>(row);
    basis_[row] = col;
}

LpStatus DualSimplex::solve()
{
    for (;;) {
        // Leaving: smallest-index basic variable outside its bounds.
        long leave_row = -1;
        std::size_t leave_var = 0;
        bool too_low = false;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const std::size_t b = basis_[r];
            const bool low = value_[b] < lower_[b];
            const bool high = has_upper_[b] && value_[b] > upper_[b];
            if ((low || high) && (leave_row < 0 || b < leave_var)) {
                leave_row = static_cast<long>(r);
                leave_var = b;
                too_low = low;
            }
        }
        if (leave_row < 0) return LpStatus::optimal;

        // Entering: ratio test |d_j / alpha_j| over nonbasic columns that move
        // the leaving variable towards its violated bound.
        const auto& row = tableau_[leave_row];
        long enter = -1;
        Rational best_ratio;
        for (std::size_t c = 0; c < width(); ++c) {
            if (row_of_[c] >= 0 || row[c] == 0 || is_fixed(c)) continue;
            const bool increase_ok = !at_upper_[c];
            const bool decrease_ok = at_upper_[c];
            // x_B changes by -alpha * delta_c.
            const bool eligible = too_low ? ((increase_ok && row[c] < 0) || (decrease_ok && row[c] > 0))
                                          : ((increase_ok && row[c] > 0) || (decrease_ok && row[c] < 0));
            if (!eligible) continue;
            Rational ratio = abs(reduced_[c] / row[c]);
            if (enter < 0 || ratio < best_ratio) {
                enter = static_cast<long>(c);
                best_ratio = std::move(ratio);
            }
        }
        if (enter < 0) return LpStatus::infeasible;

        pivot(static_cast<std::size_t>(leave_row), static_cast<std::size_t>(enter));
        at_upper_[leave_var] = !too_low;
        value_[leave_var] = too_low ? lower_[leave_var] : upper_[leave_var];
        ++iterations_;
        refresh_basic_values();
    }
}

EdgeVector DualSimplex::solution() const
{
    return EdgeVector(n_, std::vector<Rational>(value_.begin(), value_.begin() + ns_));
}

Rational DualSimplex::objective_value() const
{
    Rational z = 0;
    for (std::size_t v = 0; v < ns_; ++v)
        if (cost_[v] != 0 && value_[v] != 0) z += cost_[v] * value_[v];
    return z;
}

LpState lp_solve(int n, const std::vector<Rational>& objective, const std::vector<Inequality>& pool)
{
    DualSimplex lp(n, objective);
    for (const auto& row : pool) lp.add_row(row);
    LpState state;
    state.status = lp.solve();
    state.x = lp.solution();
    state.objective = lp.objective_value();
    state.iterations = lp.iterations();
    state.pool = pool;
    return state;
}

}  // namespace chordcut
