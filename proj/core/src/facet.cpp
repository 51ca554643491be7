#include "chordcut/facet.hpp"

#include "chordcut/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chordcut {

std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    const std::size_t height = rows.size();
    Integer previous = 1;
    std::size_t rank = 0;

    for (std::size_t col = 0; col < cols && rank < height; ++col) {
        std::size_t pivot = rank;
        while (pivot < height && rows[pivot][col] == 0) ++pivot;
        if (pivot == height) continue;
        std::swap(rows[rank], rows[pivot]);

        const Integer& p = rows[rank][col];
        for (std::size_t r = rank + 1; r < height; ++r) {
            auto& row = rows[r];
            const Integer factor = row[col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                // row[c] = (p * row[c] - factor * pivot_row[c]) / previous, exact.
                row[c] *= p;
                row[c] -= factor * rows[rank][c];
                mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), previous.get_mpz_t());
            }
            row[col] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t affine_rank(std::span<const EdgeVector> points)
{
    if (points.empty()) throw std::invalid_argument("affine rank of an empty point set");
    const EdgeVector& base = points.front();
    std::vector<std::vector<Integer>> rows;
    rows.reserve(points.size() - 1);
    for (std::size_t p = 1; p < points.size(); ++p) {
        if (points[p].node_count() != base.node_count() || points[p].size() != base.size())
            throw std::invalid_argument("affine rank of points with different dimensions");
        const EdgeVector diff = points[p] - base;
        if (diff.is_zero()) continue;
        Integer scale = 1;
        for (const auto& entry : diff.entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), entry.get_den_mpz_t());
        std::vector<Integer> row;
        row.reserve(diff.size());
        for (const auto& entry : diff.entries()) row.emplace_back(entry.get_num() * (scale / entry.get_den()));
        rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
}

bool theorem_predicate(int k, int q)
{
    require_chord_parameters(k, q);
    if (k % q != 1) return false;
    if (k == 3 * q + 1) return q == 3 || q % 2 == 0;
    return true;
}

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::none: return "none";
    case WitnessKind::cycle_edge_sum: return "cycle_edge_sum";
    case WitnessKind::alternating_q_plus_2: return "alternating_q_plus_2";
    }
    return "none";
}

std::string to_string(TightMethod method)
{
    return method == TightMethod::brute ? "brute" : "structured";
}

WitnessResult witness_check(int k, int q, const TightSet& tight)
{
    if (theorem_predicate(k, q))
        throw std::invalid_argument("witness requested for a facet-inducing pair (k=" +
                                    std::to_string(k) + ", q=" + std::to_string(q) + ")");
    if (tight.vertices.empty()) throw std::invalid_argument("witness check on an empty tight set");

    WitnessResult result;
    if (k % q != 1) {
        result.kind = WitnessKind::cycle_edge_sum;
        result.holds = true;
        for (std::size_t v = 0; v < tight.vertices.size(); ++v) {
            Rational sum = 0;
            for (int i = 0; i < k; ++i) sum += tight.vertices[v].at(Edge::on_cycle(i, i + 1, k));
            if (v == 0) result.value = sum;
            else if (sum != result.value) result.holds = false;
        }
        return result;
    }

    result.kind = WitnessKind::alternating_q_plus_2;
    result.holds = true;
    result.value = 0;
    for (const auto& x : tight.vertices) {
        Rational sum = 0;
        for (int i = 0; i < k; ++i) {
            const auto& entry = x.at(Edge::on_cycle(i, i + q + 2, k));
            if (i % 2 == 0) sum += entry;
            else sum -= entry;
        }
        if (sum != 0) {
            result.holds = false;
            result.value = sum;
            break;
        }
    }
    return result;
}

FaceReport verify_theorem(int k, int q, TightMethod method)
{
    require_chord_parameters(k, q);
    FaceReport report;
    report.k = k;
    report.q = q;
    report.method = method;
    report.ambient_dimension = edge_count(k);
    report.predicted_facet = theorem_predicate(k, q);

    TightSet tight = enumerate_tight(k, q, method);
    if (method == TightMethod::structured && k <= kCrossCheckMaxK) {
        const TightSet brute = enumerate_tight(k, q, TightMethod::brute);
        if (brute.vertices != tight.vertices)
            throw std::logic_error("structured and brute-force tight sets differ for k=" +
                                   std::to_string(k) + ", q=" + std::to_string(q));
        report.cross_checked = true;
    }

    report.tight_count = tight.vertices.size();
    report.face_dimension = affine_rank(tight.vertices);
    report.observed_facet = report.face_dimension + 1 == report.ambient_dimension;
    if (report.face_dimension + 1 > report.ambient_dimension)
        throw std::logic_error("face dimension exceeds that of a proper face");
    if (!report.predicted_facet) report.witness = witness_check(k, q, tight);
    return report;
}

std::optional<std::size_t> face_dimension_exhaustive(const Inequality& ineq)
{
    const int n = ineq.node_count();
    if (n > kMaxExhaustiveNodes)
        throw BudgetExceeded("exhaustive face enumeration limited to n <= " +
                             std::to_string(kMaxExhaustiveNodes));
    std::vector<std::pair<Edge, Rational>> terms;
    for (const auto& [idx, coeff] : ineq.coefficients()) terms.emplace_back(edge_at(n, idx), coeff);
    std::vector<EdgeVector> tight;
    for_each_partition(n, [&](const std::vector<int>& labels) {
        Rational lhs = 0;
        for (const auto& [edge, coeff] : terms)
            if (labels[edge.i] == labels[edge.j]) lhs += coeff;
        if (lhs == ineq.rhs()) tight.push_back(characteristic_vector(n, labels));
    });
    if (tight.empty()) return std::nullopt;
    return affine_rank(tight);
}

namespace {

std::vector<std::pair<std::string, std::string>> report_fields(const FaceReport& r)
{
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    std::vector<std::pair<std::string, std::string>> fields{
        {"k", std::to_string(r.k)},
        {"q", std::to_string(r.q)},
        {"method", to_string(r.method)},
        {"tight_count", std::to_string(r.tight_count)},
        {"face_dimension", std::to_string(r.face_dimension)},
        {"ambient_dimension", std::to_string(r.ambient_dimension)},
        {"predicted_facet", flag(r.predicted_facet)},
        {"observed_facet", flag(r.observed_facet)},
        {"cross_checked", flag(r.cross_checked)},
        {"witness", r.witness ? to_string(r.witness->kind) : "none"},
        {"witness_holds", r.witness ? flag(r.witness->holds) : "na"},
        {"witness_value", r.witness ? to_string(r.witness->value) : "na"},
    };
    return fields;
}

}  // namespace

std::string format_face_report(const FaceReport& report)
{
    std::ostringstream os;
    for (const auto& [key, value] : report_fields(report)) os << key << '=' << value << '\n';
    return os.str();
}

std::string format_face_report_line(const FaceReport& report)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : report_fields(report)) {
        if (!first) os << ' ';
        first = false;
        os << key << '=' << value;
    }
    return os.str();
}

}  // namespace chordcut
