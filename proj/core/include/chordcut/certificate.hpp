#pragma once

// Chvatal-Gomory certificates: a non-negative combination of box and
// triangle inequalities whose rounded-down right-hand side yields a target.

#include "chordcut/inequality.hpp"

#include <string>
#include <vector>

namespace chordcut {

struct CgTerm {
    Inequality inequality;
    Rational multiplier;
};

struct CgCertificate {
    int n = 0;
    std::vector<CgTerm> terms;
    /// Sum of multiplier * term, before rounding.
    Inequality combined;
    Integer floored_rhs;
};

/// Sums multiplier * inequality over the terms, coefficients and rhs alike.
Inequality combine_terms(int n, const std::vector<CgTerm>& terms);

/// For each i in Z_k: the triangles x_{i,i+j} + x_{i+j,i+j+1} - x_{i,i+j+1} <= 1,
/// j = 1..q-1, at multiplier 1/q, and -x_{i,i+q} <= 0 at multiplier (q-1)/q.
/// The combination is the chorded k-cycle left-hand side with rhs k(q-1)/q.
CgCertificate cg_certificate(int k, int q);

/// True iff every term is a box or triangle inequality with a non-negative
/// multiplier, the recomputed combination matches the target coefficients
/// exactly, and floor(combined rhs) equals both the recorded floored rhs
/// and the target rhs. Throws std::invalid_argument on dimension mismatch.
bool verify_certificate(const CgCertificate& certificate, const Inequality& target);

/// One term per line: `<multiplier> <label> <nodes...>`, followed by
/// `combined_rhs=` and `floored_rhs=` lines.
std::string format_certificate(const CgCertificate& certificate);

}  // namespace chordcut
