#include "tessera/curvature.hpp"

#include <string>

#include "tessera/errors.hpp"

namespace tessera {

Rational kappa(const PlaneGraph& g, int v) {
    if (!g.complete(v))
        throw UnsafeVertex("kappa: vertex " + std::to_string(v) + " has unknown incident faces");
    Rational k = Rational(1) - Rational(g.degree(v), 2);
    for (int f : g.faces_at(v)) k = k + Rational(1, g.face_degree(f));
    return k;
}

Rational kappa_sum(const PlaneGraph& g, const std::vector<int>& vs) {
    Rational total;
    for (int v : vs) total = total + kappa(g, v);
    return total;
}

CornerTurn corner_turn(const PlaneGraph& g, int v, int prev, int next, TurnSide side) {
    if (!g.complete(v))
        throw UnsafeVertex("corner_turn: vertex " + std::to_string(v) +
                           " has unknown incident faces");
    const int dp = g.dart_from_to(v, prev);
    const int dn = g.dart_from_to(v, next);
    if (dp < 0 || dn < 0)
        throw NotAdjacent("corner_turn: corner (" + std::to_string(prev) + ", " +
                          std::to_string(v) + ", " + std::to_string(next) +
                          ") uses a missing edge");

    const int deg = g.degree(v);
    const int ip = g.dart(dp).rot_index;
    const int in = g.dart(dn).rot_index;
    const auto& rot = g.vertex_darts(v);

    CornerTurn ct;
    ct.v = v;
    ct.prev = prev;
    ct.next = next;

    const Rational half(1, 2);
    if (side == TurnSide::outer) {
        // Sweep counterclockwise from the prev dart up to (not including) the
        // next dart; these sectors lie on the right of the walk corner.
        int span = (in - ip) % deg;
        if (span < 0) span += deg;
        if (span == 0) span = deg;
        Rational sum;
        for (int k = 0; k < span; ++k) {
            const int f = g.face_left(rot[(ip + k) % deg]);
            sum = sum + (half - Rational(1, g.face_degree(f)));
        }
        ct.turn = sum - half;
        ct.face_count = span;
    } else {
        // The remaining sectors, counterclockwise from the next dart up to the
        // prev dart, lie on the left of the corner.
        int span = (ip - in) % deg;
        if (span < 0) span += deg;
        if (span == 0) span = deg;
        Rational sum;
        for (int k = 0; k < span; ++k) {
            const int f = g.face_left(rot[(in + k) % deg]);
            sum = sum + (half - Rational(1, g.face_degree(f)));
        }
        ct.turn = half - sum;
        ct.face_count = span;
    }
    return ct;
}

TurnReport walk_turn(const PlaneGraph& g, const BoundaryWalk& w, TurnSide side, bool detail) {
    if (w.host != &g) throw WalkHostMismatch("walk_turn: walk belongs to a different graph");

    TurnReport rep;
    rep.side = side;
    for (const WalkCycle& c : w.cycles) {
        Rational cycle_total;
        if (c.darts.empty()) {
            const int v = c.base_vertex;
            const Rational kv = kappa(g, v);
            cycle_total = (side == TurnSide::outer) ? Rational(1) - kv : kv - Rational(1);
            rep.edge_count += g.degree(v);
        } else {
            const int len = static_cast<int>(c.darts.size());
            for (int k = 0; k < len; ++k) {
                const int d = c.darts[k];
                const int dprev = c.darts[(k + len - 1) % len];
                CornerTurn ct = corner_turn(g, g.origin(d), g.origin(dprev), g.head(d), side);
                cycle_total = cycle_total + ct.turn;
                rep.edge_count += ct.face_count - 1;
                if (detail) rep.corners.push_back(ct);
            }
        }
        rep.total = rep.total + cycle_total;
        rep.cycle_totals.push_back(cycle_total);
    }
    return rep;
}

GaussBonnetReport gauss_bonnet_check(const PlaneGraph& g, const Subgraph& s, GBVariant variant) {
    if (s.host != &g) throw WalkHostMismatch("gauss_bonnet_check: subgraph hosted elsewhere");

    GaussBonnetReport rep;
    rep.variant = variant;
    switch (variant) {
        case GBVariant::outer_walk: {
            BoundaryWalk bw = boundary_walk(s);
            rep.turn_report = walk_turn(g, bw, TurnSide::outer);
            rep.curvature = kappa_sum(g, s.vset);
            rep.rhs = s.euler_characteristic();
            break;
        }
        case GBVariant::inner_walk: {
            BoundaryWalk iw = inner_boundary_walk(s);
            rep.turn_report = walk_turn(g, iw, TurnSide::inner);
            rep.curvature = kappa_sum(g, interior(s).vset);
            rep.rhs = euler_characteristics(s).second;
            break;
        }
        case GBVariant::complement_layer: {
            BoundaryWalk lw = outer_layer_walk(s);
            rep.turn_report = walk_turn(g, lw, TurnSide::inner);
            rep.curvature = kappa_sum(g, s.vset);
            rep.rhs = 2 - static_cast<long long>(lw.cycle_count());
            break;
        }
    }
    rep.turn = rep.turn_report.total;
    rep.pass = (rep.curvature + rep.turn == Rational(rep.rhs));
    return rep;
}

EdgeCounts edge_counts(const PlaneGraph& g, const Subgraph& s) {
    if (s.host != &g) throw WalkHostMismatch("edge_counts: subgraph hosted elsewhere");
    EdgeCounts ec;
    ec.inward = walk_turn(g, inner_boundary_walk(s), TurnSide::inner).edge_count;
    ec.outward = walk_turn(g, boundary_walk(s), TurnSide::outer).edge_count;
    return ec;
}

}  // namespace tessera
