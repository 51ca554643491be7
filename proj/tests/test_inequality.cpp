#include "chordcut/inequality.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chordcut;

namespace {

std::map<std::pair<int, int>, int> coeff_map(const Inequality& ineq)
{
    std::map<std::pair<int, int>, int> out;
    for (const auto& [idx, c] : ineq.coefficients()) {
        const Edge e = edge_at(ineq.node_count(), idx);
        REQUIRE(is_integral(c));
        out[{e.i, e.j}] = static_cast<int>(c.get_num().get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("box and triangle counts")
{
    CHECK(box_inequalities(3).size() == 6);
    CHECK(triangle_inequalities(3).size() == 3);
    CHECK(triangle_inequalities(5).size() == 30);
    const auto boxes = box_inequalities(2);
    CHECK(boxes[0].label().kind == InequalityKind::box_lower);
    CHECK(boxes[0].coefficient({0, 1}) == -1);
    CHECK(boxes[0].rhs() == 0);
    CHECK(boxes[1].coefficient({0, 1}) == 1);
    CHECK(boxes[1].rhs() == 1);

    const auto tri = triangle_inequalities(3);
    CHECK(coeff_map(tri[0]) == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, -1}});
    CHECK(coeff_map(tri[1]) == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, -1}});
    CHECK(coeff_map(tri[2]) == std::map<std::pair<int, int>, int>{{{0, 2}, 1}, {{1, 2}, 1}, {{0, 1}, -1}});
    CHECK_THROWS_AS(triangle_inequality(3, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("chorded inequality matches literal summation")
{
    for (int k = 4; k <= 20; ++k)
        for (int q = 2; 2 * q <= k; ++q) {
            const Inequality ineq = chorded_cycle_inequality(k, q);
            CHECK(coeff_map(ineq) == oracle::chorded_coeffs(k, q));
            CHECK(ineq.rhs() == oracle::chorded_rhs(k, q));
            // 2k nonzeros, or k + k/2 with -2 diagonals when q = k/2.
            CHECK(ineq.nonzeros() == (2 * q == k ? static_cast<std::size_t>(k + k / 2) : 2u * k));
        }
}

TEST_CASE("chorded inequality examples")
{
    const Inequality a = chorded_cycle_inequality(13, 3);
    CHECK(a.rhs() == 8);
    CHECK(a.coefficient({0, 1}) == 1);
    CHECK(a.coefficient({0, 12}) == 1);
    CHECK(a.coefficient({0, 3}) == -1);
    CHECK(a.coefficient({2, 12}) == -1);
    CHECK(a.nonzeros() == 26);

    const Inequality b = chorded_cycle_inequality(4, 2);
    CHECK(b.rhs() == 2);
    CHECK(b.coefficient({0, 2}) == -2);
    CHECK(b.coefficient({1, 3}) == -2);
    CHECK(b.coefficient({0, 3}) == 1);

    CHECK(chorded_cycle_inequality(5, 2).rhs() == 2);
    CHECK(chorded_cycle_inequality(5, 2).label() == InequalityLabel{InequalityKind::chorded, 5, 2});
}

TEST_CASE("chorded inequality parameter range")
{
    CHECK_THROWS_AS(chorded_cycle_inequality(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(chorded_cycle_inequality(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(chorded_cycle_inequality(5, 3), std::invalid_argument);
    CHECK_NOTHROW(chorded_cycle_inequality(6, 3));
}

TEST_CASE("chorded inequality on a node sequence")
{
    const std::vector<Node> cycle{4, 0, 2, 5, 1};
    const Inequality ineq = chorded_cycle_inequality(6, cycle, 2);
    CHECK(ineq.rhs() == 2);
    CHECK(ineq.coefficient({0, 4}) == 1);
    CHECK(ineq.coefficient({1, 4}) == 1);
    CHECK(ineq.coefficient({2, 4}) == -1);
    CHECK(ineq.coefficient({3, 4}) == 0);
    CHECK(ineq.nonzeros() == 10);
    const std::vector<Node> dup{0, 1, 1, 2};
    CHECK_THROWS_AS(chorded_cycle_inequality(6, dup, 2), std::invalid_argument);
    const std::vector<Node> out{0, 1, 2, 6};
    CHECK_THROWS(chorded_cycle_inequality(6, out, 2));
}

TEST_CASE("cycle and relaxed cycle inequalities")
{
    const Inequality c = cycle_inequality(5, 0, 2);
    CHECK(coeff_map(c) == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, -1}});
    CHECK(c.rhs() == 1);

    const Inequality r = relaxed_cycle_inequality(5, 0, 2);
    CHECK(coeff_map(r) == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, -2}});
    CHECK(r.rhs() == 1);

    // Sum of x_23 + x_34 - x_24 <= 1 and x_24 + x_45 - x_25 <= 1.
    const Inequality c7 = cycle_inequality(7, 2, 3);
    CHECK(coeff_map(c7) ==
          std::map<std::pair<int, int>, int>{{{2, 3}, 1}, {{3, 4}, 1}, {{4, 5}, 1}, {{2, 5}, -1}});
    CHECK(c7.rhs() == 2);

    const Inequality wrap = cycle_inequality(7, 5, 3);
    CHECK(coeff_map(wrap) ==
          std::map<std::pair<int, int>, int>{{{5, 6}, 1}, {{0, 6}, 1}, {{0, 1}, 1}, {{1, 5}, -1}});
}

TEST_CASE("evaluate, tightness and validity")
{
    const Inequality ineq = chorded_cycle_inequality(5, 2);
    const EdgeVector zero = characteristic_vector(5, Partition::singletons(5));
    CHECK(ineq.evaluate(zero) == 0);
    CHECK_FALSE(ineq.is_tight(zero));
    const EdgeVector x = characteristic_vector(5, Partition(5, {{0, 1, 2}, {3, 4}}));
    CHECK(ineq.evaluate(x) == 2);
    CHECK(ineq.is_tight(x));
    CHECK(ineq.violation(x) == 0);
    CHECK_THROWS_AS(ineq.evaluate(EdgeVector(6)), std::invalid_argument);

    CHECK(is_valid_over_polytope(chorded_cycle_inequality(7, 3), 7));
    Inequality strong = chorded_cycle_inequality(5, 2);
    strong.set_rhs(1);
    CHECK_FALSE(is_valid_over_polytope(strong, 5));
    CHECK_THROWS_AS(is_valid_over_polytope(chorded_cycle_inequality(13, 3), 13), std::out_of_range);
}

TEST_CASE("paired inequality")
{
    const Inequality p = paired_inequality(7, 3);
    CHECK(p.rhs() == 3);
    const Inequality c = chorded_cycle_inequality(7, 3);
    for (const auto& [idx, coeff] : c.coefficients()) CHECK(p.coefficients().at(idx) == -coeff);
    CHECK(p.nonzeros() == c.nonzeros());

    // Same as the ((k-1)/q)-chorded inequality on the cycle 0, q, 2q, ...
    for (auto [k, q] : {std::pair{7, 3}, std::pair{5, 2}, std::pair{9, 2}, std::pair{9, 4}, std::pair{13, 3},
                        std::pair{13, 4}}) {
        std::vector<Node> seq;
        for (int t = 0; t < k; ++t) seq.push_back(mod(static_cast<long long>(t) * q, k));
        const int m = (k - 1) / q;
        CHECK(paired_inequality(k, q).same_as(chorded_cycle_inequality(k, seq, m)));
    }
    CHECK(paired_inequality(5, 2).same_as(chorded_cycle_inequality(5, std::vector<Node>{0, 2, 4, 1, 3}, 2)));
    CHECK_THROWS_AS(paired_inequality(8, 3), std::invalid_argument);
}

TEST_CASE("paired inequality is valid, k <= 11")
{
    for (int k = 5; k <= 11; ++k)
        for (int q = 2; 2 * q <= k; ++q)
            if (k % q == 1) CHECK(is_valid_over_polytope(paired_inequality(k, q), k));
}

TEST_CASE("zero lift")
{
    const Inequality base = chorded_cycle_inequality(5, 2);
    CHECK(zero_lift(base, 5).same_as(base));
    const Inequality lifted = zero_lift(base, 6);
    CHECK(lifted.node_count() == 6);
    CHECK(lifted.nonzeros() == 10);
    CHECK(lifted.rhs() == base.rhs());
    for (const auto& [idx, c] : base.coefficients()) CHECK(lifted.coefficient(edge_at(5, idx)) == c);
    CHECK_THROWS_AS(zero_lift(base, 4), std::invalid_argument);

    // Tight vertices stay tight when extended by singletons.
    for_each_partition(5, [&](const std::vector<int>& l) {
        if (!base.is_tight(characteristic_vector(5, l))) return;
        std::vector<int> ext = l;
        ext.push_back(99);
        ext.push_back(98);
        CHECK(zero_lift(base, 7).is_tight(characteristic_vector(7, ext)));
    });
}

TEST_CASE("inequality text format round trip")
{
    const Inequality ineq = chorded_cycle_inequality(5, 2);
    const std::string text = format_inequality(ineq);
    CHECK(text.rfind("ineq n=5 rhs=2\n", 0) == 0);
    CHECK(text.find("0 1 1\n") != std::string::npos);
    CHECK(text.find("0 2 -1\n") != std::string::npos);
    const Inequality back = parse_inequality(text);
    CHECK(back.same_as(ineq));
    CHECK(format_inequality(back) == text);

    Inequality frac(4, Rational(5, 2));
    frac.add({0, 3}, Rational(-1, 3));
    frac.add({1, 2}, 2);
    CHECK(format_inequality(frac) == "ineq n=4 rhs=5/2\n0 3 -1/3\n1 2 2\n");
    CHECK(format_inequality(parse_inequality(format_inequality(frac))) == format_inequality(frac));
}

TEST_CASE("inequality parser rejects malformed text")
{
    for (const char* bad : {"", "ineq n=3\n", "ineq n=3 rhs=1.5\n", "ineq n=3 rhs=1\n0 1\n",
                            "ineq n=3 rhs=1\n1 2 1\n0 1 1\n", "ineq n=3 rhs=1\n0 1 1\n0 1 2\n",
                            "ineq n=3 rhs=1\n0 1 0\n", "ineq n=3 rhs=1\n0 3 1\n", "ineq n=3 rhs=1\n1 0 1\n",
                            "ineq n=3 rhs=1\n0 1 0.5\n", "ineq n=3 rhs=2/4\n"})
        CHECK_THROWS_AS(parse_inequality(bad), std::invalid_argument);
}

TEST_CASE("add erases cancelled entries")
{
    Inequality ineq(4, 0);
    ineq.add({0, 1}, 2);
    ineq.add({0, 1}, -2);
    CHECK(ineq.nonzeros() == 0);
    CHECK(ineq.coefficient({0, 1}) == 0);
}
