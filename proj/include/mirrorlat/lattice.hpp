#pragma once

#include "mirrorlat/exact.hpp"
#include "mirrorlat/qform.hpp"

#include <string>
#include <vector>

namespace mirrorlat {

// An even nondegenerate lattice presented by its Gram matrix.
struct Lattice {
    IntMat gram;
    int t_plus = 0;
    int t_minus = 0;

    int rank() const { return gram.rows(); }
};

// Validates symmetry, evenness and nondegeneracy, and caches the signature.
Lattice make_lattice(const IntMat& gram);

Int lattice_det(const Lattice& l);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice twist(const Lattice& l, const Int& n);  // L(n); n must be a nonzero integer

// Named lattices. ADE lattices are negative definite (diagonal -2, +1 on
// Dynkin edges). T(p,q,r) is the T-graph lattice with nodes ordered
// [center, leg1..., leg2..., leg3...], each leg listed center-outward, so
// rank = p+q+r-2. H_p (p = 1 mod 4) is [[(p-1)/2, 1], [1, -2]].
//
// L9 and M9 are the two rank-2 hyperbolic lattices with discriminant group
// Z/9. We assign L9 := [[-4,5],[5,-4]] (form w_{3,2}^1) and
// M9 := [[-2,1],[1,4]] (form w_{3,2}^{-1}), which is the assignment forced
// by the "Lattices and forms" table.
Lattice lattice_U();
Lattice lattice_A(int n);
Lattice lattice_D(int m);
Lattice lattice_E(int n);  // n in {6, 7, 8}
Lattice lattice_H(const Int& p);
Lattice lattice_L9();
Lattice lattice_M9();
Lattice lattice_T(int p, int q, int r);
Lattice lattice_scalar(const Int& n);  // <n>, n even nonzero

// Lattice-expression grammar shared with the CLI:
//   U, U(2), A3, A1(2), D7, E8, H5, L9, M9, T(3,4,4), T(3,4,4)(2),
//   <2>, <-8>, `+` for direct sums, `k*X` for k copies.
Lattice parse_lattice(const std::string& text);
std::string gram_json(const Lattice& l);  // bit-exact JSON array of integer rows

// Discriminant form A_L = L*/L with q_L, generators scaled from the Smith
// column transform exactly as in the appendix `disc` routine.
FiniteQuadraticForm discriminant_form(const Lattice& l);

// Gram of a maximal linearly independent subset of the given generators
// (greedy in input order) inside the ambient lattice, plus the kept
// indices. Generators are rows in ambient coordinates.
std::pair<Lattice, std::vector<int>> sublattice_from_generators(const Lattice& ambient,
                                                                const IntMat& generators);

// True iff the quotient of the ambient by the span of `sub` is torsion-free
// over the span (all nonzero Smith invariants are 1).
bool is_primitive_sublattice(const Lattice& ambient, const IntMat& sub);

}  // namespace mirrorlat
