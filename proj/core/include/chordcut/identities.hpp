#pragma once

// Vector-level combinations of tight vertices used to pin down the
// coefficients of any inequality whose face contains the chorded face.
// Each function returns the signed phi/psi combination; callers compare it
// against the expected sum of unit vectors. All require k = m*q + 1.

#include "chordcut/graph.hpp"
#include "chordcut/tight_set.hpp"

namespace chordcut {

/// m with k = m*q + 1. Throws std::invalid_argument when k != 1 (mod q).
int cycle_multiplicity(int k, int q);

/// phi(i,(p+1,q-p+1,q..q,q-1)) - phi(i,(p,q-p+2,q..q,q-1))
///   - phi(i+1,(p,q-p+1,q..q,q)) + phi(i+1,(p-1,q-p+2,q..q,q)),  2 <= p <= q-1.
EdgeVector short_chord_combination(int k, int q, Node i, int p);

/// phi(i,(2,q-1,q,...,q)) - phi(i,(1,q,...,q)).
EdgeVector edge_shift_combination(int k, int q, Node i);

/// Blocks {i..i+q}, {i+q+1..i+2q}, ..., {i-q..i-1}: node i starts the
/// unique block of q+1 nodes.
Partition long_run_partition(int k, int q, Node i);
/// x^Π(long_run_partition) - phi(i,(1,q,...,q)).
EdgeVector edge_chord_combination(int k, int q, Node i);

/// For k = 3q+1 and q+1 <= p <= floor(k/2):
/// psi(j+p-q,(1*,q,q*,q)) + psi(j,((p-q)*,q,(2q+1-p)*,q)) - psi(j,((p-q+1)*,q,(2q-p)*,q)).
EdgeVector three_run_long_chord_combination(int k, int q, Node j, int p);

/// For m > 3, 1 <= s <= m-3, 2 <= j <= q-1, with t = i-q+1 and s leading q-runs:
/// psi(t,(q*,q..,j-1,(q-j+2)*,q..)) - psi(t,((q-1)*,q..,j,(q-j+2)*,q..))
///   - psi(t,(q*,q..,j,(q-j+1)*,q..)) + psi(t,((q-1)*,q..,j+1,(q-j+1)*,q..)).
EdgeVector long_chord_combination(int k, int q, Node i, int s, int j);

/// The previous construction at j = 2 with the last two varying runs
/// exchanged (q >= 3):
/// psi(t,(q*,q..,q*,1,q..)) - psi(t,((q-1)*,q..,q*,2,q..))
///   - psi(t,(q*,q..,(q-1)*,2,q..)) + psi(t,((q-1)*,q..,(q-1)*,3,q..)).
EdgeVector long_chord_swapped_combination(int k, int q, Node i, int s);

/// psi(i,(1*, q (s times), q*, q (m-s-1 times))): joins {i} with the run
/// {i+sq+1, ..., i+sq+q}.
EdgeVector telescoping_chord_combination(int k, int q, Node i, int s);

}  // namespace chordcut
