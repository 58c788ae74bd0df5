#include "mirrorlat/mirror.hpp"

namespace mirrorlat {

PolarizationInvariants make_polarization(int r, const FiniteQuadraticForm& q,
                                         const SearchBudget& budget) {
    if (r < 1 || r > 19) throw error("polarization rank must be in 1..19");
    int sig = milgram_signature(q, budget);
    int expect = ((2 - r) % 8 + 8) % 8;  // t+ - t- = 1 - (r - 1)
    if (sig != expect)
        throw error("polarization invariants violate the signature congruence: sign(q) = " +
                    std::to_string(sig) + ", expected " + std::to_string(expect));
    return PolarizationInvariants{r, q};
}

MirrorResult mirror_invariants(const PolarizationInvariants& inv, const SearchBudget& budget) {
    if (inv.r >= 20) throw error("no mirror for rank >= 20");
    MirrorResult res;
    res.inv.r = 20 - inv.r;
    res.inv.q = negate(inv.q);
    LatticeInvariants complement{2, 20 - inv.r, res.inv.q};
    res.splits_off_u = splits_off_U(complement);
    if (!res.splits_off_u) {
        // The complement must still be pinned as the unique lattice with
        // these invariants; otherwise the mirror is genuinely ambiguous.
        if (!existence_and_uniqueness(complement, budget))
            throw error("mirror complement neither splits off U nor is pinned by uniqueness");
        res.footnote_case = true;
    }
    return res;
}

MirrorPairReport check_mirror_pair(const PolarizationInvariants& a, const PolarizationInvariants& b,
                                   const SearchBudget& budget) {
    MirrorPairReport rep;
    rep.rank_ok = (a.r + b.r == 20);
    rep.form_ok = forms_isomorphic(a.q, negate(b.q), budget);
    return rep;
}

}  // namespace mirrorlat
