#pragma once

#include "mirrorlat/exact.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mirrorlat {

// Enumeration budget shared by the finite-group searches. `group_order`
// bounds |A| in element enumerations; `nodes` bounds backtracking.
struct SearchBudget {
    Int group_order = 1000000;
    long long nodes = 20000000;
};

// A finite quadratic form q : A -> Q/2Z on A = Z/d1 x ... x Z/dk with
// d1 | d2 | ... | dk (invariant factors, each >= 2; empty list = trivial
// form). `gram` holds q(g_i) on the diagonal, reduced into [0,2), and
// b(g_i,g_j) off the diagonal, reduced into [0,1) -- the appendix `mod2`
// convention, so values compare bit-for-bit.
struct FiniteQuadraticForm {
    std::vector<Int> orders;
    RatMat gram;

    int generators() const { return int(orders.size()); }
    bool trivial() const { return orders.empty(); }
};

// Builds a form from arbitrary generator orders (>= 1, not necessarily a
// chain) and a compatible symmetric rational Gram, recanonicalizing the
// group into invariant-factor shape and reducing all residues.
FiniteQuadraticForm make_form(const std::vector<Int>& orders, const RatMat& gram);

Int group_order(const FiniteQuadraticForm& q);
int length(const FiniteQuadraticForm& q);
int p_length(const FiniteQuadraticForm& q, const Int& p);

// q(a) in [0,2) and b(a,a') in [0,1) for coordinate vectors a.
Rat q_value(const FiniteQuadraticForm& q, const std::vector<Int>& a);
Rat b_value(const FiniteQuadraticForm& q, const std::vector<Int>& a, const std::vector<Int>& b);

Int element_order(const FiniteQuadraticForm& q, const std::vector<Int>& a);

FiniteQuadraticForm negate(const FiniteQuadraticForm& q);
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);
FiniteQuadraticForm p_part(const FiniteQuadraticForm& q, const Int& p);
std::vector<Int> primes_of(const FiniteQuadraticForm& q);

// All elements of A in lexicographic coordinate order. Throws budget_error
// if |A| exceeds the budget.
std::vector<std::vector<Int>> all_elements(const FiniteQuadraticForm& q,
                                           const SearchBudget& budget = {});

// True iff there is a group isomorphism carrying q1 to q2. Decision is by
// invariant factors, then a value-count fingerprint, then pruned
// backtracking over generator images. Throws budget_error when the search
// exceeds its node budget (never guesses).
bool forms_isomorphic(const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2,
                      const SearchBudget& budget = {});

// The witness of a positive decision: images of q1's generators in q2's
// coordinates, or nullopt when not isomorphic.
std::optional<std::vector<std::vector<Int>>> isomorphism_witness(const FiniteQuadraticForm& q1,
                                                                 const FiniteQuadraticForm& q2,
                                                                 const SearchBudget& budget = {});

// sign(q) mod 8 via the Gauss sum over A evaluated exactly in the
// cyclotomic field of order 2*lcm(orders).
int milgram_signature(const FiniteQuadraticForm& q, const SearchBudget& budget = {});

// Generator blocks w_{p,k}^eps, u_k, v_k.
struct GeneratorBlock {
    char kind;  // 'w', 'u', 'v'
    Int p;      // prime (w only)
    int k;      // >= 1
    int eps;    // w only: odd p in {+1,-1}; p=2 in {+1,-1,+5,-5}
    bool operator==(const GeneratorBlock&) const = default;
};

FiniteQuadraticForm block_form(const GeneratorBlock& b);
FiniteQuadraticForm blocks_form(const std::vector<GeneratorBlock>& bs);

// A multiset of generator blocks whose direct sum is isomorphic to q
// (verified internally; the decomposition is not canonical).
std::vector<GeneratorBlock> block_decomposition(const FiniteQuadraticForm& q,
                                                const SearchBudget& budget = {});

// All block multisets (per p-part) realizing q; used for the split-pattern
// tests of the uniqueness criteria.
std::vector<std::vector<GeneratorBlock>> all_block_decompositions(const FiniteQuadraticForm& q,
                                                                  const Int& p,
                                                                  const SearchBudget& budget = {});

// Form-expression grammar: `w(p,k,e)`, `u(k)`, `v(k)`, bare `u`/`v` for
// k = 1, `+` for direct sums, integer multiplicity prefix (`4w(2,1,-1)`),
// `<0>` or `triv` for the trivial form. parse(print(parse(s))) == parse(s).
FiniteQuadraticForm parse_form(const std::string& text);
std::string print_form(const std::vector<GeneratorBlock>& blocks);
std::string print_form(const FiniteQuadraticForm& q, const SearchBudget& budget = {});

// TeX-flavoured rendering (w_{p,k}^e style) for reports.
std::string pretty_form(const std::vector<GeneratorBlock>& blocks);

}  // namespace mirrorlat
