#pragma once

#include "mirrorlat/bhk.hpp"
#include "mirrorlat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mirrorlat {

// Genus of a quasismooth curve of degree d in P(w1,w2,w3). Errors when the
// formula does not produce a nonnegative integer.
Int curve_genus(const Int& w1, const Int& w2, const Int& w3, const Int& d);

// Riemann-Roch on a K3: C.C = 2g - 2.
Int self_intersection(const Int& genus);

struct IsotropyStratum {
    std::string description;   // vanishing coordinates, e.g. "z=w=0"
    std::vector<int> support;  // nonvanishing coordinate indices
    Int order;                 // cyclic isotropy order n
    Int points;                // number of singular points on the open stratum
    Int chain_length() const { return order - 1; }  // A_{n-1}
};

struct IsotropyReport {
    std::vector<IsotropyStratum> strata;
    Int exceptional_curves() const;
};

// Scans coordinate points and coordinate curves of P(w1..w4) for cyclic
// quotient points on the hypersurface W = 0, counting solutions of the
// restricted binary forms. Patterns outside the invertible restrictions
// (vanishing or non-squarefree restrictions) raise an error asking for a
// manual configuration.
IsotropyReport isotropy_scan(const InvertiblePolynomial& w);

// Curve configuration: genus-labeled nodes, intersection-multiplicity
// edges, finite-order node action.
struct CurveNode {
    std::string id;
    Int genus = 0;
    bool exceptional = false;  // class: exceptional vs coordinate-component
};

struct CurveConfig {
    std::vector<CurveNode> nodes;
    std::vector<std::tuple<std::string, std::string, Int>> edges;
    Int action_order = 1;
    std::vector<std::pair<std::string, std::string>> action;  // id -> image id

    CurveConfig with_identity_action() const;
};

CurveConfig parse_curve_config(const std::string& json_text);
CurveConfig load_curve_config(const std::string& path);

struct OrbitLatticeResult {
    int r = 0;                                       // 1 + number of exceptional orbits
    Lattice lattice;                                 // L_B
    std::vector<std::vector<std::string>> orbits;    // node ids per orbit, input order
    std::vector<int> kept;                           // orbit indices of the greedy basis
    RatMat class_coords;  // row per orbit: coordinates of its class over the basis
};

// Orbit sums of the node classes under the action, Gram by bilinear
// extension (2g-2 diagonal, edge multiplicities), greedy in-order basis
// selection; rationally dependent generators still contribute integrally
// to the generated lattice (finite-index correction kept).
OrbitLatticeResult orbit_lattice(const CurveConfig& config);

}  // namespace mirrorlat
