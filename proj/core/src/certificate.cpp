#include "chordcut/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chordcut {
namespace {

bool is_box_or_triangle(const Inequality& ineq)
{
    const auto& coeffs = ineq.coefficients();
    switch (ineq.label().kind) {
    case InequalityKind::box_lower:
        return coeffs.size() == 1 && coeffs.begin()->second == -1 && ineq.rhs() == 0;
    case InequalityKind::box_upper:
        return coeffs.size() == 1 && coeffs.begin()->second == 1 && ineq.rhs() == 1;
    case InequalityKind::triangle: {
        if (coeffs.size() != 3 || ineq.rhs() != 1) return false;
        int plus = 0, minus = 0;
        std::vector<Edge> edges;
        for (const auto& [idx, c] : coeffs) {
            edges.push_back(edge_at(ineq.node_count(), idx));
            if (c == 1) ++plus;
            else if (c == -1) ++minus;
        }
        if (plus != 2 || minus != 1) return false;
        // Three edges must span exactly three nodes.
        std::vector<Node> nodes;
        for (const auto& e : edges) {
            nodes.push_back(e.i);
            nodes.push_back(e.j);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        return nodes.size() == 3;
    }
    default:
        return false;
    }
}

}  // namespace

Inequality combine_terms(int n, const std::vector<CgTerm>& terms)
{
    Inequality combined(n, 0, {InequalityKind::custom});
    Rational rhs = 0;
    for (const auto& term : terms) {
        if (term.inequality.node_count() != n)
            throw std::invalid_argument("certificate term over a different node set");
        for (const auto& [idx, coeff] : term.inequality.coefficients())
            combined.add(edge_at(n, idx), term.multiplier * coeff);
        rhs += term.multiplier * term.inequality.rhs();
    }
    combined.set_rhs(rhs);
    return combined;
}

CgCertificate cg_certificate(int k, int q)
{
    require_chord_parameters(k, q);
    CgCertificate cert;
    cert.n = k;
    const Rational triangle_weight(1, q);
    const Rational box_weight(q - 1, q);
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j < q; ++j) {
            // Center i+j: x_{i,i+j} + x_{i+j,i+j+1} - x_{i,i+j+1} <= 1.
            cert.terms.push_back(
                {triangle_inequality(k, mod(i + j, k), mod(i, k), mod(i + j + 1, k)), triangle_weight});
        }
        Inequality box(k, 0, {InequalityKind::box_lower});
        box.add(Edge::on_cycle(i, i + q, k), -1);
        cert.terms.push_back({std::move(box), box_weight});
    }
    cert.combined = combine_terms(k, cert.terms);
    cert.combined.set_label({InequalityKind::chorded, k, q});
    cert.floored_rhs = floor(cert.combined.rhs());
    return cert;
}

bool verify_certificate(const CgCertificate& certificate, const Inequality& target)
{
    if (certificate.n != target.node_count())
        throw std::invalid_argument("certificate over K_" + std::to_string(certificate.n) +
                                    " checked against an inequality over K_" +
                                    std::to_string(target.node_count()));
    for (const auto& term : certificate.terms) {
        if (term.inequality.node_count() != certificate.n)
            throw std::invalid_argument("certificate term over a different node set");
        if (term.multiplier < 0 || !is_box_or_triangle(term.inequality)) return false;
    }
    const Inequality recomputed = combine_terms(certificate.n, certificate.terms);
    if (recomputed.coefficients() != target.coefficients()) return false;
    const Integer floored = floor(recomputed.rhs());
    return floored == certificate.floored_rhs && Rational(floored) == target.rhs();
}

std::string format_certificate(const CgCertificate& certificate)
{
    std::ostringstream os;
    const int n = certificate.n;
    for (const auto& term : certificate.terms) {
        os << to_string(term.multiplier) << ' ' << term.inequality.label().to_string();
        const auto& coeffs = term.inequality.coefficients();
        if (term.inequality.label().kind == InequalityKind::triangle) {
            // Print as center then the two neighbours.
            std::vector<Edge> plus;
            for (const auto& [idx, c] : coeffs)
                if (c > 0) plus.push_back(edge_at(n, idx));
            const Node center = (plus[0].i == plus[1].i || plus[0].i == plus[1].j) ? plus[0].i : plus[0].j;
            const Node u = plus[0].i == center ? plus[0].j : plus[0].i;
            const Node w = plus[1].i == center ? plus[1].j : plus[1].i;
            os << ' ' << center << ' ' << u << ' ' << w;
        } else {
            for (const auto& [idx, c] : coeffs) {
                const Edge e = edge_at(n, idx);
                os << ' ' << e.i << ' ' << e.j;
            }
        }
        os << '\n';
    }
    os << "combined_rhs=" << to_string(certificate.combined.rhs()) << '\n';
    os << "floored_rhs=" << to_string(certificate.floored_rhs) << '\n';
    return os.str();
}

}  // namespace chordcut
