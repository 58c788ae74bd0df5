#pragma once

#include "mirrorlat/lattice.hpp"
#include "mirrorlat/qform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mirrorlat {

// A subgroup of A_L on which q vanishes identically. Elements are
// coordinate vectors with respect to the generators of discriminant_form.
// `basis` is the canonical Hermite basis of the subgroup's coordinate
// matrix (including the order relations), used for deduplication.
struct IsotropicSubgroup {
    IntMat basis;
    std::vector<std::vector<Int>> elements;

    Int order() const { return Int(long(elements.size())); }
    bool trivial() const { return elements.size() <= 1; }
};

// All a in A with q(a) = n (residue mod 2Z), in lexicographic coordinate
// order.
std::vector<std::vector<Int>> elements_with_value(const FiniteQuadraticForm& q, const Rat& n,
                                                  const SearchBudget& budget = {});

// Complete duplicate-free enumeration of isotropic subgroups (including the
// trivial one), built by closing over isotropic elements.
std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& q,
                                                   const SearchBudget& budget = {});

// The even overlattice L' corresponding to H (Prop. of the 1:1
// correspondence): index |H| above L, det L' = det L / |H|^2.
Lattice overlattice(const Lattice& l, const IsotropicSubgroup& h);

struct LatticeInvariants {
    int t_plus = 0;
    int t_minus = 0;
    FiniteQuadraticForm q;

    int rank() const { return t_plus + t_minus; }
};

LatticeInvariants invariants_of(const Lattice& l);

enum class Uniqueness { Unique, NotGuaranteed };

// Sufficient conditions only; NotGuaranteed is not a claim of non-uniqueness.
Uniqueness uniqueness(const LatticeInvariants& inv, const SearchBudget& budget = {});

// Exists-and-unique sufficient test: signature congruence mod 8,
// rank >= 2 + length, both signature entries positive.
bool existence_and_uniqueness(const LatticeInvariants& inv, const SearchBudget& budget = {});

// S = U + T split: t+ >= 1, t- >= 1, rank >= 3 + length.
bool splits_off_U(const LatticeInvariants& inv);

// Necessary conditions for existence: rank >= length and the mod-8
// signature congruence.
bool exists_necessary(const LatticeInvariants& inv, const SearchBudget& budget = {});

// Can `sub` embed primitively into a lattice with invariants `ambient`
// through the trivial-subgroup pushout? Returns false when the
// complementary invariants fail the necessary existence conditions.
// Only applicable when value matching forces the trivial subgroup; that
// premise is checked and reported through `forced_trivial`.
struct EmbeddingObstruction {
    bool forced_trivial = false;   // no nonzero q-value of sub occurs in ambient at equal order
    bool complement_exists = true; // necessary conditions for the complement lattice
    bool embeds() const { return !(forced_trivial && !complement_exists); }
};
EmbeddingObstruction primitive_embedding_obstruction(const LatticeInvariants& sub,
                                                     const LatticeInvariants& ambient,
                                                     const SearchBudget& budget = {});

// Bounded search over direct sums from the catalog whose signature matches
// exactly and whose discriminant form is isomorphic to inv.q. Returns the
// first match as an expression, or nullopt.
std::vector<std::string> default_lattice_catalog();
std::optional<std::string> find_lattice_by_invariants(const LatticeInvariants& inv,
                                                      const std::vector<std::string>& catalog,
                                                      int max_summands = 4,
                                                      const SearchBudget& budget = {});

}  // namespace mirrorlat
