#pragma once

#include "mirrorlat/overlattice.hpp"
#include "mirrorlat/qform.hpp"

namespace mirrorlat {

// Invariants (r, q) of a hyperbolic polarizing lattice of signature (1, r-1).
struct PolarizationInvariants {
    int r = 1;
    FiniteQuadraticForm q;
};

// Validates 1 <= r <= 19 and the Milgram congruence sign(q) = 2 - r (mod 8).
PolarizationInvariants make_polarization(int r, const FiniteQuadraticForm& q,
                                         const SearchBudget& budget = {});

struct MirrorResult {
    PolarizationInvariants inv;  // (20 - r, -q)
    bool splits_off_u = false;   // Cor. U+T criterion on (2, 20-r, -q)
    // When the U+T criterion fails (the documented mirror-rank-1 case), the
    // complement is pinned instead by the exists-and-unique criterion.
    bool footnote_case = false;
};

// The mirror map on invariants: (r, q) -> (20 - r, -q). Errors for r >= 20.
MirrorResult mirror_invariants(const PolarizationInvariants& inv, const SearchBudget& budget = {});

struct MirrorPairReport {
    bool rank_ok = false;  // r + r' == 20
    bool form_ok = false;  // q == -q' up to isomorphism
    bool ok() const { return rank_ok && form_ok; }
};

MirrorPairReport check_mirror_pair(const PolarizationInvariants& a, const PolarizationInvariants& b,
                                   const SearchBudget& budget = {});

}  // namespace mirrorlat
