#pragma once

#include <algorithm>
#include <vector>

#include "tessera/plane_graph.hpp"

namespace tessera {

// Closed (vertex, edge, face) id triple over a host graph: every edge's
// endpoints are in vset, every face's edges are in eset. vset may contain
// vertices with no incident eset edge; fset never contains the outer face.
// The id vectors are kept sorted and unique, which doubles as the canonical
// encoding used for deterministic tie-breaking.
struct Subgraph {
    const PlaneGraph* host = nullptr;
    std::vector<int> vset, eset, fset;

    bool empty() const { return vset.empty(); }
    int vertex_count() const { return static_cast<int>(vset.size()); }
    int edge_count() const { return static_cast<int>(eset.size()); }
    int face_count() const { return static_cast<int>(fset.size()); }

    bool has_vertex(int v) const { return std::binary_search(vset.begin(), vset.end(), v); }
    bool has_edge(int e) const { return std::binary_search(eset.begin(), eset.end(), e); }
    bool has_face(int f) const { return std::binary_search(fset.begin(), fset.end(), f); }

    long long euler_characteristic() const {
        return static_cast<long long>(vset.size()) - eset.size() + fset.size();
    }

    // All vset vertices complete in the host.
    bool safe() const;
    void require_safe(const char* op) const;  // throws UnsafeSubgraph

    // Closure + well-formedness; throws Error on violation. Intended for
    // externally supplied triples; library constructors maintain it.
    void validate() const;

    // Connectivity of the complex (vset under eset adjacency; isolated
    // vertices are their own components).
    bool connected() const;
    int component_count() const;

    // Sum of host degrees over vset / sum of face degrees over fset.
    long long vertex_degree_sum() const;
    long long face_degree_sum() const;

    bool operator==(const Subgraph& o) const {
        return host == o.host && vset == o.vset && eset == o.eset && fset == o.fset;
    }

    static Subgraph single_vertex(const PlaneGraph& g, int v);
    static Subgraph single_edge(const PlaneGraph& g, int u, int v);
    // Induced subgraph: all host edges inside vs, all bounded faces whose
    // vertices all lie in vs.
    static Subgraph induced(const PlaneGraph& g, std::vector<int> vs);
    // Face graph of a face set: the faces plus exactly their edges/vertices.
    static Subgraph from_faces(const PlaneGraph& g, std::vector<int> fs);

    // Drops vertices and edges not incident to any fset face (empty result
    // when fset is empty).
    Subgraph face_graph() const;
};

struct Boundaries {
    std::vector<int> boundary_edges;  // host edges with one endpoint inside
    std::vector<int> d0;              // inside vertices with an outside neighbor
    std::vector<int> d1;              // outside vertices with an inside neighbor
};

// Requires s safe (outside neighborhoods must be fully known).
Boundaries edge_and_vertex_boundaries(const Subgraph& s);

// Adds every bounded complement component of D(s) (faces, edges, vertices)
// to s. Components are found by face-BFS crossing only edges not in eset;
// the component reaching the outer face is the unbounded one and stays out.
Subgraph fill_holes(const Subgraph& s);

// Induced subgraph on {u : d(u, v) <= n}; throws UnsafeSubgraph when any
// vertex within distance n is incomplete.
Subgraph combinatorial_ball(const PlaneGraph& g, int v, int n);

}  // namespace tessera
