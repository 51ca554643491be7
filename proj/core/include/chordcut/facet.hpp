#pragma once

// Face dimensions of chorded-cycle inequalities by exact affine rank, the
// facet predicate, and the equalities that certify non-facets.

#include "chordcut/graph.hpp"
#include "chordcut/inequality.hpp"
#include "chordcut/tight_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chordcut {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Pivots
/// are the first nonzero entry of the current column at or below the
/// current row.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows);

/// Affine dimension of the points: rank of {v - v_0}. Rational entries are
/// scaled per row to integers. Throws std::invalid_argument on empty input or
/// mixed dimensions.
std::size_t affine_rank(std::span<const EdgeVector> points);

/// k = 1 (mod q), and q = 3 or q even whenever k = 3q + 1.
bool theorem_predicate(int k, int q);

enum class WitnessKind { none, cycle_edge_sum, alternating_q_plus_2 };

std::string to_string(WitnessKind kind);

struct WitnessResult {
    WitnessKind kind = WitnessKind::none;
    /// The equality evaluates to `value` on every tight vertex.
    bool holds = false;
    /// cycle_edge_sum: the common value of sum_i x_{i,i+1};
    /// alternating_q_plus_2: the common value of sum_i (-1)^i x_{i,i+q+2} (0 when it holds).
    Rational value;
};

/// For a pair with theorem_predicate false: if k != 1 (mod q), checks that
/// sum_i x_{i,i+1} is constant over the tight set; otherwise checks that
/// sum_i (-1)^i x_{i,i+q+2} = 0 on every tight vertex. Throws
/// std::invalid_argument for facet-inducing pairs or an empty tight set.
WitnessResult witness_check(int k, int q, const TightSet& tight);

struct FaceReport {
    int k = 0;
    int q = 0;
    TightMethod method = TightMethod::structured;
    std::size_t tight_count = 0;
    std::size_t face_dimension = 0;
    std::size_t ambient_dimension = 0;
    bool predicted_facet = false;
    bool observed_facet = false;
    /// Both enumeration methods were run and produced the same vertex set.
    bool cross_checked = false;
    std::optional<WitnessResult> witness;

    bool agrees() const { return predicted_facet == observed_facet; }
};

/// Largest k at which verify_theorem repeats the enumeration by brute force.
constexpr int kCrossCheckMaxK = 11;

/// Enumerates the tight set, computes its affine rank and compares facet
/// status with theorem_predicate. With the structured method, the tight set
/// is cross-checked against brute force when k <= 11 (std::logic_error on
/// disagreement). Non-facet predictions also run witness_check.
FaceReport verify_theorem(int k, int q, TightMethod method = TightMethod::structured);

/// Face dimension of an arbitrary inequality over CPP_n by enumerating every
/// partition (n <= 12); returns nullopt when no vertex is tight.
std::optional<std::size_t> face_dimension_exhaustive(const Inequality& ineq);

/// `key=value` lines in a fixed key order.
std::string format_face_report(const FaceReport& report);
/// Same fields on one line separated by spaces.
std::string format_face_report_line(const FaceReport& report);

std::string to_string(TightMethod method);

}  // namespace chordcut
