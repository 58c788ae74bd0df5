#pragma once

#include "mirrorlat/exact.hpp"

#include <string>
#include <vector>

namespace mirrorlat {

struct WeightSystem {
    std::vector<Int> weights;
    Int degree = 0;

    int vars() const { return int(weights.size()); }
    bool operator==(const WeightSystem&) const = default;
};

// Validates gcd(w) = 1 and w_i < d.
WeightSystem make_weight_system(const std::vector<Int>& weights, const Int& degree);
std::string print_weight_system(const WeightSystem& ws);

// Invertible quasihomogeneous polynomial: square exponent matrix A_W (one
// row per monomial), nonsingular, with A_W * w = d * 1.
struct InvertiblePolynomial {
    IntMat expo;
    WeightSystem ws;
};

// Monomial text over the variables x, y, z, w: `+`-separated monomials,
// `^` powers, implicit multiplication (`yw^12`).
InvertiblePolynomial parse_polynomial(const std::string& text, const WeightSystem& ws);
std::string print_polynomial(const InvertiblePolynomial& w);

// Transpose polynomial: exponent matrix A_W^T, weight system derived by
// solving A_W^T q = 1 and clearing denominators.
InvertiblePolynomial transpose(const InvertiblePolynomial& w);

// Reorders variables so weights are nonincreasing (stable). Returns the
// polynomial with permuted columns/rows and perm[i] = source variable of
// new slot i.
std::pair<InvertiblePolynomial, std::vector<int>> sort_by_weights(const InvertiblePolynomial& w);

// Exponent matrices equal as monomial multisets under some weight-
// preserving relabeling of variables.
bool polynomials_equivalent(const InvertiblePolynomial& a, const InvertiblePolynomial& b);

// A diagonal symmetry as a vector in (Q/Z)^n, coordinates in [0,1).
using SymmetryElement = std::vector<Rat>;

struct SymmetryGroup {
    std::vector<SymmetryElement> elements;  // sorted, closed under addition
    int vars = 0;

    Int order() const { return Int(long(elements.size())); }
    bool contains(const SymmetryElement& g) const;
    bool subgroup_of(const SymmetryGroup& o) const;
    bool operator==(const SymmetryGroup& o) const { return elements == o.elements; }
};

SymmetryElement reduce_element(const SymmetryElement& g);
SymmetryElement add_elements(const SymmetryElement& a, const SymmetryElement& b);
SymmetryGroup group_closure(int vars, const std::vector<SymmetryElement>& gens);

// G_W, generated by the columns of A_W^{-1} mod Z; |G_W| = |det A_W|.
SymmetryGroup full_symmetry_group(const InvertiblePolynomial& w);

// Exponential grading element j_W = (w_1/d, ..., w_n/d) and J_W = <j_W>.
SymmetryElement j_element(const InvertiblePolynomial& w);
SymmetryGroup j_group(const InvertiblePolynomial& w);

// SL_W = {g in G_W : sum g_i in Z}; an element is symplectic iff its
// coordinate sum is integral.
bool is_symplectic(const SymmetryElement& g);
SymmetryGroup sl_subgroup(const InvertiblePolynomial& w);

// Small generating set of a closed group, picked greedily.
std::vector<SymmetryElement> generating_set(const SymmetryGroup& g);

// Dual group {g in G_{W^T} : g A_W h^T in Z for all h in G}. G must be a
// subgroup of G_W. The second overload reuses precomputed G_W and G_{W^T}.
SymmetryGroup dual_group(const InvertiblePolynomial& w, const SymmetryGroup& g);
SymmetryGroup dual_group(const InvertiblePolynomial& w, const SymmetryGroup& g,
                         const SymmetryGroup& gw, const SymmetryGroup& gwt);

// All subgroups H with J <= H <= S, ordered by (order, elements).
std::vector<SymmetryGroup> subgroups_between(const SymmetryGroup& j, const SymmetryGroup& s);

// Structure of a finite abelian group of (Q/Z)^n vectors: invariant factors.
std::vector<Int> abelian_invariants(const SymmetryGroup& g);

}  // namespace mirrorlat
