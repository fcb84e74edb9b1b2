#pragma once

#include <vector>

#include "tessera/rational.hpp"
#include "tessera/walks.hpp"

namespace tessera {

// kappa(v) = 1 - deg(v)/2 + sum over incident faces of 1/deg(f).
// Requires v complete (all incident faces known).
Rational kappa(const PlaneGraph& g, int v);
Rational kappa_sum(const PlaneGraph& g, const std::vector<int>& vs);

enum class TurnSide { outer, inner };

struct CornerTurn {
    int v = -1, prev = -1, next = -1;
    Rational turn;
    int face_count = 0;  // faces swept on the chosen side (deg v if prev == next)
};

// Turn at the walk corner (v; prev, next). Outer side sweeps the faces on the
// right of the corner and contributes sum(1/2 - 1/deg f) - 1/2; inner side
// sweeps the faces on the left and contributes 1/2 - sum(1/2 - 1/deg g).
// A degenerate corner (prev == next) sweeps all deg(v) faces on either side.
CornerTurn corner_turn(const PlaneGraph& g, int v, int prev, int next, TurnSide side);

struct TurnReport {
    TurnSide side = TurnSide::outer;
    Rational total;
    // Outward (outer side) or inward (inner side) edge tally: face_count - 1
    // summed over corners; a constant cycle contributes deg of its vertex.
    long long edge_count = 0;
    std::vector<Rational> cycle_totals;
    std::vector<CornerTurn> corners;  // filled only when detail requested
};

// Total turn of a walk. Constant cycles use the conventions
// tau_outer = 1 - kappa(v), tau_inner = kappa(v) - 1.
TurnReport walk_turn(const PlaneGraph& g, const BoundaryWalk& w, TurnSide side,
                     bool detail = false);

enum class GBVariant {
    outer_walk,       // kappa(S) + tau_outer(boundary walk) == chi(S)
    inner_walk,       // kappa(S-minus) + tau_inner(inner walk) == chi(interior of D(S))
    complement_layer  // kappa(S) + tau_inner(layer walk) == 2 - (#layer cycles)
};

struct GaussBonnetReport {
    GBVariant variant = GBVariant::outer_walk;
    Rational curvature;   // kappa term
    Rational turn;        // walk turn term
    long long rhs = 0;    // topological side
    bool pass = false;
    TurnReport turn_report;
};

GaussBonnetReport gauss_bonnet_check(const PlaneGraph& g, const Subgraph& s, GBVariant variant);

struct EdgeCounts {
    long long inward = 0;   // from inner-walk corners
    long long outward = 0;  // from boundary-walk corners
};

EdgeCounts edge_counts(const PlaneGraph& g, const Subgraph& s);

}  // namespace tessera
