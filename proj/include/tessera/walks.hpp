#pragma once

#include <utility>
#include <vector>

#include "tessera/subgraph.hpp"

namespace tessera {

enum class WalkKind { outer, inner, layer };

// One closed walk. A constant cycle (single vertex, length 0) has no darts
// and records its vertex in base_vertex.
struct WalkCycle {
    std::vector<int> darts;
    int base_vertex = -1;

    int length() const { return static_cast<int>(darts.size()); }
};

struct BoundaryWalk {
    const PlaneGraph* host = nullptr;
    WalkKind kind = WalkKind::outer;
    std::vector<WalkCycle> cycles;
    bool empty_face_set = false;  // inner walk was asked for an empty face set

    int length() const {
        int n = 0;
        for (const auto& c : cycles) n += c.length();
        return n;
    }
    int cycle_count() const { return static_cast<int>(cycles.size()); }
    // Distinct vertices visited, sorted.
    std::vector<int> vertex_set() const;
    // Visit sequence of one cycle: origins of its darts ({v} for a constant
    // cycle). The walk closes up, so the successor of the last entry is the
    // first.
    std::vector<int> cycle_vertices(const WalkCycle& c) const;
};

// Boundary walk of D(s): one positively oriented cycle per complement
// component per component of s (unbounded side traversed with the region on
// the left, holes with it on the right). Isolated vertices give constant
// cycles. Requires s nonempty and safe.
BoundaryWalk boundary_walk(const Subgraph& s);

// Inner boundary walk: s is reduced to its face graph; for every connected
// component of the interior of D, the walks bounding that component are
// traced with the component's material kept on the left. Empty face set is
// signalled, not fatal.
BoundaryWalk inner_boundary_walk(const Subgraph& s);

// Boundary of the induced complement of b, restricted to the cycles facing b,
// orientation reversed; its vertices are exactly the next layer
// V(b+) \ V(b). Requires the closure's vertices to be complete and the
// complement to be nonempty.
BoundaryWalk outer_layer_walk(const Subgraph& b);

// Induced subgraph on V(s) minus the boundary-walk vertices.
Subgraph interior(const Subgraph& s);

// (interior of s, depth): depth counts how many successive applications of
// interior() give a nonempty result; depth 0 means the interior is already
// empty.
std::pair<Subgraph, int> interior_and_depth(const Subgraph& s);

// All faces incident to the vertices of s (plus their edges and vertices).
// Iterating yields quasi-balls.
Subgraph face_closure(const Subgraph& s);

// Connected components of the interior of D(face_graph(s)): groups of fset
// ids joined whenever two faces share an edge (interiors meeting across an
// open edge). Pinch vertices do not join components.
std::vector<std::vector<int>> interior_components(const Subgraph& s);

// (chi(S), chi(D(S)-interior)). The second value is the sum over interior
// components of (2 - number of bounding cycles).
std::pair<long long, long long> euler_characteristics(const Subgraph& s);

}  // namespace tessera
