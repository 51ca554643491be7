#include "chordcut/inequality.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chordcut {

std::string InequalityLabel::to_string() const
{
    switch (kind) {
    case InequalityKind::box_lower: return "box_lower";
    case InequalityKind::box_upper: return "box_upper";
    case InequalityKind::triangle: return "triangle";
    case InequalityKind::cycle: return "cycle(" + std::to_string(k) + "," + std::to_string(q) + ")";
    case InequalityKind::relaxed_cycle:
        return "relaxed_cycle(" + std::to_string(k) + "," + std::to_string(q) + ")";
    case InequalityKind::chorded:
        return "chorded(" + std::to_string(k) + "," + std::to_string(q) + ")";
    case InequalityKind::paired: return "paired(" + std::to_string(k) + "," + std::to_string(q) + ")";
    case InequalityKind::lifted: return "lifted";
    case InequalityKind::custom: return "custom";
    }
    return "custom";
}

Inequality::Inequality(int n, Rational rhs, InequalityLabel label)
    : n_(n), rhs_(std::move(rhs)), label_(label)
{
    if (n < 2) throw std::invalid_argument("inequality needs at least two nodes");
}

Rational Inequality::coefficient(Edge e) const
{
    const auto it = coeffs_.find(edge_index(n_, e));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Inequality::add(Edge e, const Rational& value)
{
    const auto idx = edge_index(n_, e);
    auto& slot = coeffs_[idx];
    slot += value;
    if (slot == 0) coeffs_.erase(idx);
}

void Inequality::check_dimension(const EdgeVector& x) const
{
    if (x.node_count() != n_ || x.size() != edge_count(n_))
        throw std::invalid_argument("inequality over K_" + std::to_string(n_) +
                                    " evaluated on a vector over K_" +
                                    std::to_string(x.node_count()));
}

Rational Inequality::evaluate(const EdgeVector& x) const
{
    check_dimension(x);
    Rational sum = 0;
    for (const auto& [idx, coeff] : coeffs_)
        if (x[idx] != 0) sum += coeff * x[idx];
    return sum;
}

void require_chord_parameters(int k, int q)
{
    if (q < 2 || 2 * q > k)
        throw std::invalid_argument("chord parameters need 2 <= q <= k/2 (got k=" +
                                    std::to_string(k) + ", q=" + std::to_string(q) + ")");
}

std::vector<Inequality> box_inequalities(int n)
{
    if (n < 2) throw std::invalid_argument("box inequalities need n >= 2");
    std::vector<Inequality> out;
    out.reserve(2 * edge_count(n));
    for (std::size_t idx = 0; idx < edge_count(n); ++idx) {
        const Edge e = edge_at(n, idx);
        Inequality lower(n, 0, {InequalityKind::box_lower});
        lower.add(e, -1);
        Inequality upper(n, 1, {InequalityKind::box_upper});
        upper.add(e, 1);
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

Inequality triangle_inequality(int n, Node center, Node u, Node w)
{
    if (center == u || center == w || u == w)
        throw std::invalid_argument("triangle needs three distinct nodes");
    Inequality t(n, 1, {InequalityKind::triangle, 3, 0});
    t.add(Edge::make(center, u), 1);
    t.add(Edge::make(center, w), 1);
    t.add(Edge::make(u, w), -1);
    return t;
}

std::vector<Inequality> triangle_inequalities(int n)
{
    if (n < 3) throw std::invalid_argument("triangle inequalities need n >= 3");
    std::vector<Inequality> out;
    for (Node a = 0; a < n; ++a)
        for (Node b = a + 1; b < n; ++b)
            for (Node c = b + 1; c < n; ++c) {
                out.push_back(triangle_inequality(n, a, b, c));
                out.push_back(triangle_inequality(n, b, a, c));
                out.push_back(triangle_inequality(n, c, a, b));
            }
    return out;
}

Inequality chorded_cycle_inequality(int n, std::span<const Node> cycle, int q)
{
    const int k = static_cast<int>(cycle.size());
    require_chord_parameters(k, q);
    std::vector<Node> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
        sorted.back() >= n)
        throw std::invalid_argument("cycle must visit distinct nodes of K_n");
    const Rational rhs = Rational(k) - Rational(ceil_div(k, q));
    Inequality ineq(n, rhs, {InequalityKind::chorded, k, q});
    for (int i = 0; i < k; ++i) {
        ineq.add(Edge::make(cycle[i], cycle[mod(i + 1, k)]), 1);
        ineq.add(Edge::make(cycle[i], cycle[mod(i + q, k)]), -1);
    }
    return ineq;
}

Inequality chorded_cycle_inequality(int k, int q)
{
    require_chord_parameters(k, q);
    std::vector<Node> cycle(k);
    for (int i = 0; i < k; ++i) cycle[i] = i;
    return chorded_cycle_inequality(k, cycle, q);
}

Inequality cycle_inequality(int k, Node i, int q)
{
    require_chord_parameters(k, q);
    if (i < 0 || i >= k) throw std::invalid_argument("cycle start outside Z_k");
    Inequality ineq(k, q - 1, {InequalityKind::cycle, k, q});
    for (int j = 0; j < q; ++j) ineq.add(Edge::on_cycle(i + j, i + j + 1, k), 1);
    ineq.add(Edge::on_cycle(i, i + q, k), -1);
    return ineq;
}

Inequality relaxed_cycle_inequality(int k, Node i, int q)
{
    Inequality ineq = cycle_inequality(k, i, q);
    ineq.add(Edge::on_cycle(i, i + q, k), -(q - 1));
    ineq.set_label({InequalityKind::relaxed_cycle, k, q});
    return ineq;
}

Inequality paired_inequality(int k, int q)
{
    require_chord_parameters(k, q);
    if (k % q != 1)
        throw std::invalid_argument("paired inequality needs k = 1 (mod q) (got k=" +
                                    std::to_string(k) + ", q=" + std::to_string(q) + ")");
    Inequality ineq(k, k - q - 1, {InequalityKind::paired, k, q});
    for (int i = 0; i < k; ++i) {
        ineq.add(Edge::on_cycle(i, i + 1, k), -1);
        ineq.add(Edge::on_cycle(i, i + q, k), 1);
    }
    return ineq;
}

Inequality zero_lift(const Inequality& ineq, int m)
{
    const int n = ineq.node_count();
    if (m < n)
        throw std::invalid_argument("cannot lift an inequality over K_" + std::to_string(n) +
                                    " to K_" + std::to_string(m));
    Inequality lifted(m, ineq.rhs(), {InequalityKind::lifted, ineq.label().k, ineq.label().q});
    for (const auto& [idx, coeff] : ineq.coefficients()) lifted.add(edge_at(n, idx), coeff);
    if (m == n) lifted.set_label(ineq.label());
    return lifted;
}

bool is_valid_over_polytope(const Inequality& ineq, int k)
{
    if (ineq.node_count() != k)
        throw std::invalid_argument("inequality is not over K_" + std::to_string(k));
    if (k > kMaxExhaustiveNodes)
        throw std::out_of_range("exhaustive validity check limited to k <= " +
                                std::to_string(kMaxExhaustiveNodes));

    // Evaluate on block labels directly instead of materializing x^Π.
    std::vector<std::pair<Edge, Rational>> terms;
    for (const auto& [idx, coeff] : ineq.coefficients()) terms.emplace_back(edge_at(k, idx), coeff);
    bool valid = true;
    PartitionEnumerator e(k);
    do {
        const auto& labels = e.labels();
        Rational lhs = 0;
        for (const auto& [edge, coeff] : terms)
            if (labels[edge.i] == labels[edge.j]) lhs += coeff;
        if (lhs > ineq.rhs()) {
            valid = false;
            break;
        }
    } while (e.next());
    return valid;
}

std::string format_inequality(const Inequality& ineq)
{
    std::ostringstream os;
    const int n = ineq.node_count();
    os << "ineq n=" << n << " rhs=" << to_string(ineq.rhs()) << '\n';
    for (const auto& [idx, coeff] : ineq.coefficients()) {
        const Edge e = edge_at(n, idx);
        os << e.i << ' ' << e.j << ' ' << to_string(coeff) << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto end = line.find(' ', pos);
        out.push_back(line.substr(pos, end - pos));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

int parse_node(std::string_view field)
{
    const Rational r = parse_rational(field);
    if (!is_integral(r) || !r.get_num().fits_sint_p())
        throw std::invalid_argument("malformed node id '" + std::string(field) + "'");
    return static_cast<int>(r.get_num().get_si());
}

}  // namespace

Inequality parse_inequality(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty inequality text");
    const auto header = split_fields(lines.front());
    if (header.size() != 3 || header[0] != "ineq" || !header[1].starts_with("n=") ||
        !header[2].starts_with("rhs="))
        throw std::invalid_argument("malformed inequality header '" + std::string(lines.front()) +
                                    "'");
    const int n = parse_node(header[1].substr(2));
    Inequality ineq(n, parse_rational(header[2].substr(4)));

    long long last = -1;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        if (lines[l].empty() && l + 1 == lines.size()) break;
        const auto fields = split_fields(lines[l]);
        if (fields.size() != 3)
            throw std::invalid_argument("malformed coefficient line '" + std::string(lines[l]) + "'");
        const Node i = parse_node(fields[0]);
        const Node j = parse_node(fields[1]);
        if (i >= j) throw std::invalid_argument("coefficient line needs i < j");
        if (j >= n) throw std::invalid_argument("node " + std::to_string(j) + " outside K_" + std::to_string(n));
        const auto idx = static_cast<long long>(edge_index(n, Edge{i, j}));
        if (idx <= last) throw std::invalid_argument("coefficient lines out of edge order");
        last = idx;
        const Rational coeff = parse_rational(fields[2]);
        if (coeff == 0) throw std::invalid_argument("zero coefficient listed");
        ineq.add(Edge{i, j}, coeff);
    }
    if (format_inequality(ineq) != text && format_inequality(ineq) != std::string(text) + "\n")
        throw std::invalid_argument("inequality text is not in canonical form");
    return ineq;
}

std::ostream& operator<<(std::ostream& os, const Inequality& ineq)
{
    return os << format_inequality(ineq);
}

}  // namespace chordcut
