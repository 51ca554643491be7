#include "chordcut/errors.hpp"
#include "chordcut/facet.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace chordcut;

namespace {

EdgeVector point(std::vector<int> v)
{
    // Two coordinates pose as the edge space of K_2 plus one padding edge of K_3.
    std::vector<Rational> e(v.begin(), v.end());
    return EdgeVector(3, e);
}

std::vector<std::vector<oracle::Q>> to_q(const std::vector<std::vector<Integer>>& m)
{
    std::vector<std::vector<oracle::Q>> out;
    for (const auto& row : m) {
        std::vector<oracle::Q> r;
        for (const auto& v : row) r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

TEST_CASE("affine rank examples")
{
    const std::vector<EdgeVector> tri{point({0, 0, 0}), point({1, 0, 0}), point({0, 1, 0})};
    CHECK(affine_rank(tri) == 2);
    const std::vector<EdgeVector> same{point({1, 0, 1}), point({1, 0, 1}), point({1, 0, 1})};
    CHECK(affine_rank(same) == 0);
    CHECK_THROWS_AS(affine_rank(std::vector<EdgeVector>{}), std::invalid_argument);
    const std::vector<EdgeVector> mixed{EdgeVector(3), EdgeVector(4)};
    CHECK_THROWS_AS(affine_rank(mixed), std::invalid_argument);

    std::vector<Rational> half{Rational(1, 2), 0, 0};
    const std::vector<EdgeVector> frac{EdgeVector(3), EdgeVector(3, half)};
    CHECK(affine_rank(frac) == 1);
}

TEST_CASE("tight vertices of (5,2) span a facet")
{
    const TightSet set = enumerate_tight(5, 2, TightMethod::brute);
    CHECK(affine_rank(set.vertices) == 9);
}

TEST_CASE("Bareiss rank agrees with rational elimination")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
        for (auto& row : m)
            for (auto& v : row) v = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
        // Duplicate a row now and then to force dependence.
        if (trial % 4 == 0 && rows > 1) m.back() = m.front();
        CHECK(bareiss_rank(m) == oracle::rank(to_q(m)));
    }
    CHECK(bareiss_rank({}) == 0);
    CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("facet predicate values")
{
    CHECK(theorem_predicate(5, 2));
    CHECK_FALSE(theorem_predicate(6, 2));
    CHECK(theorem_predicate(7, 2));
    CHECK(theorem_predicate(10, 3));
    CHECK(theorem_predicate(13, 4));
    CHECK_FALSE(theorem_predicate(16, 5));
    CHECK(theorem_predicate(21, 5));
    CHECK_FALSE(theorem_predicate(22, 7));
    CHECK(theorem_predicate(25, 8));
    CHECK_THROWS_AS(theorem_predicate(5, 3), std::invalid_argument);
}

TEST_CASE("verify_theorem examples")
{
    const FaceReport r72 = verify_theorem(7, 2);
    CHECK(r72.face_dimension == 20);
    CHECK(r72.observed_facet);
    CHECK(r72.predicted_facet);
    CHECK(r72.cross_checked);
    CHECK_FALSE(r72.witness.has_value());

    const FaceReport r62 = verify_theorem(6, 2);
    CHECK(r62.face_dimension <= 13);
    CHECK_FALSE(r62.observed_facet);
    REQUIRE(r62.witness.has_value());
    CHECK(r62.witness->kind == WitnessKind::cycle_edge_sum);
    CHECK(r62.witness->holds);
    CHECK(r62.witness->value == 3);

    const FaceReport r103 = verify_theorem(10, 3);
    CHECK(r103.observed_facet);

    const FaceReport brute = verify_theorem(8, 3, TightMethod::brute);
    const FaceReport structured = verify_theorem(8, 3, TightMethod::structured);
    CHECK(brute.tight_count == structured.tight_count);
    CHECK(brute.face_dimension == structured.face_dimension);
    CHECK_FALSE(brute.cross_checked);
}

TEST_CASE("face dimension matches an independent rank")
{
    for (auto [k, q] : {std::pair{6, 2}, std::pair{7, 3}, std::pair{8, 2}, std::pair{9, 4}}) {
        std::vector<std::vector<int>> pts;
        oracle::partitions(k, [&](const oracle::Labels& l) {
            if (oracle::chorded_lhs(k, q, l) == oracle::chorded_rhs(k, q)) pts.push_back(oracle::bits(l));
        });
        CHECK(verify_theorem(k, q).face_dimension == oracle::affine_dim(pts));
    }
}

TEST_CASE("witness equalities")
{
    const TightSet t82 = enumerate_tight(8, 2, TightMethod::structured);
    const WitnessResult w82 = witness_check(8, 2, t82);
    CHECK(w82.kind == WitnessKind::cycle_edge_sum);
    CHECK(w82.holds);
    CHECK(w82.value == 4);

    const TightSet t165 = enumerate_tight(16, 5, TightMethod::structured);
    const WitnessResult w165 = witness_check(16, 5, t165);
    CHECK(w165.kind == WitnessKind::alternating_q_plus_2);
    CHECK(w165.holds);
    CHECK(w165.value == 0);

    CHECK_THROWS_AS(witness_check(5, 2, enumerate_tight(5, 2, TightMethod::brute)), std::invalid_argument);
    CHECK_THROWS_AS(witness_check(6, 2, TightSet{6, 2, {}, TightMethod::brute}), std::invalid_argument);

    // A set that breaks the equality is reported as not holding.
    TightSet broken = t82;
    broken.vertices.push_back(characteristic_vector(8, Partition::singletons(8)));
    CHECK_FALSE(witness_check(8, 2, broken).holds);
}

TEST_CASE("zero lifting keeps facets")
{
    const auto base = chorded_cycle_inequality(5, 2);
    CHECK(face_dimension_exhaustive(base) == 9u);
    CHECK(face_dimension_exhaustive(zero_lift(base, 6)) == 14u);
    CHECK(face_dimension_exhaustive(zero_lift(base, 7)) == 20u);

    Inequality never(4, -1);
    never.add({0, 1}, 1);
    CHECK_FALSE(face_dimension_exhaustive(never).has_value());
    CHECK_THROWS_AS(face_dimension_exhaustive(zero_lift(base, 13)), BudgetExceeded);
}

TEST_CASE("face report text")
{
    const std::string text = format_face_report(verify_theorem(6, 2));
    CHECK(text ==
          "k=6\nq=2\nmethod=structured\ntight_count=2\nface_dimension=1\nambient_dimension=15\n"
          "predicted_facet=false\nobserved_facet=false\ncross_checked=true\nwitness=cycle_edge_sum\n"
          "witness_holds=true\nwitness_value=3\n");
    CHECK(format_face_report_line(verify_theorem(5, 2)) ==
          "k=5 q=2 method=structured tight_count=10 face_dimension=9 ambient_dimension=10 predicted_facet=true "
          "observed_facet=true cross_checked=true witness=none witness_holds=na witness_value=na");
}
