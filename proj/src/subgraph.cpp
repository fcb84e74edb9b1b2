#include "tessera/subgraph.hpp"

#include <queue>
#include <set>
#include <string>

namespace tessera {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool Subgraph::safe() const {
    for (int v : vset)
        if (!host->complete(v)) return false;
    return true;
}

void Subgraph::require_safe(const char* op) const {
    if (host == nullptr) throw UnsafeSubgraph(std::string(op) + ": subgraph has no host");
    for (int v : vset)
        if (!host->complete(v))
            throw UnsafeSubgraph(std::string(op) + ": vertex " + std::to_string(v) +
                                 " is incomplete");
}

void Subgraph::validate() const {
    if (host == nullptr) throw Error("subgraph: no host graph");
    auto sorted = [](const std::vector<int>& v) {
        return std::is_sorted(v.begin(), v.end()) &&
               std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!sorted(vset) || !sorted(eset) || !sorted(fset))
        throw Error("subgraph: id sets must be sorted and duplicate-free");
    for (int v : vset)
        if (v < 0 || v >= host->vertex_count())
            throw Error("subgraph: vertex id " + std::to_string(v) + " out of range");
    for (int e : eset) {
        if (e < 0 || e >= host->edge_count())
            throw Error("subgraph: edge id " + std::to_string(e) + " out of range");
        auto [u, v] = host->edge_endpoints(e);
        if (!has_vertex(u) || !has_vertex(v))
            throw Error("subgraph: edge " + std::to_string(e) +
                        " has an endpoint outside the vertex set");
    }
    for (int f : fset) {
        if (f < 0 || f >= host->face_count())
            throw Error("subgraph: face id " + std::to_string(f) + " out of range");
        if (!host->face_bounded(f))
            throw Error("subgraph: face set contains the outer face");
        for (int d : host->face(f).darts)
            if (!has_edge(host->edge_of(d)))
                throw Error("subgraph: face " + std::to_string(f) +
                            " has an edge outside the edge set");
    }
}

bool Subgraph::connected() const { return component_count() <= 1; }

int Subgraph::component_count() const {
    if (vset.empty()) return 0;
    // Union-find over vset positions via eset edges.
    std::vector<int> parent(vset.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vset.begin(), vset.end(), v) - vset.begin());
    };
    for (int e : eset) {
        auto [u, v] = host->edge_endpoints(e);
        int a = find(index_of(u)), b = find(index_of(v));
        if (a != b) parent[a] = b;
    }
    int count = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
    return count;
}

long long Subgraph::vertex_degree_sum() const {
    long long s = 0;
    for (int v : vset) s += host->degree(v);
    return s;
}

long long Subgraph::face_degree_sum() const {
    long long s = 0;
    for (int f : fset) s += host->face_degree(f);
    return s;
}

Subgraph Subgraph::single_vertex(const PlaneGraph& g, int v) {
    Subgraph s;
    s.host = &g;
    s.vset = {v};
    return s;
}

Subgraph Subgraph::single_edge(const PlaneGraph& g, int u, int v) {
    int e = g.edge_between(u, v);
    if (e < 0)
        throw NotAdjacent("single_edge: " + std::to_string(u) + " and " + std::to_string(v) +
                          " are not adjacent");
    Subgraph s;
    s.host = &g;
    s.vset = {std::min(u, v), std::max(u, v)};
    s.eset = {e};
    return s;
}

Subgraph Subgraph::induced(const PlaneGraph& g, std::vector<int> vs) {
    Subgraph s;
    s.host = &g;
    s.vset = std::move(vs);
    sort_unique(s.vset);
    for (int v : s.vset)
        for (int d : g.vertex_darts(v)) {
            int u = g.head(d);
            if (u > v && s.has_vertex(u)) s.eset.push_back(g.edge_of(d));
        }
    sort_unique(s.eset);
    // A bounded face is induced iff all its vertices are in vs (its edges are
    // then induced edges automatically).
    std::set<int> candidates;
    for (int v : s.vset)
        for (int f : g.faces_at(v))
            if (g.face_bounded(f)) candidates.insert(f);
    for (int f : candidates) {
        bool ok = true;
        for (int d : g.face(f).darts)
            if (!s.has_vertex(g.origin(d))) { ok = false; break; }
        if (ok) s.fset.push_back(f);
    }
    sort_unique(s.fset);
    return s;
}

Subgraph Subgraph::from_faces(const PlaneGraph& g, std::vector<int> fs) {
    Subgraph s;
    s.host = &g;
    s.fset = std::move(fs);
    sort_unique(s.fset);
    for (int f : s.fset) {
        if (!g.face_bounded(f))
            throw Error("from_faces: face set contains the outer face");
        for (int d : g.face(f).darts) {
            s.eset.push_back(g.edge_of(d));
            s.vset.push_back(g.origin(d));
        }
    }
    sort_unique(s.eset);
    sort_unique(s.vset);
    return s;
}

Subgraph Subgraph::face_graph() const {
    Subgraph s;
    s.host = host;
    s.fset = fset;
    for (int f : fset)
        for (int d : host->face(f).darts) {
            s.eset.push_back(host->edge_of(d));
            s.vset.push_back(host->origin(d));
        }
    sort_unique(s.eset);
    sort_unique(s.vset);
    return s;
}

Boundaries edge_and_vertex_boundaries(const Subgraph& s) {
    s.require_safe("edge_and_vertex_boundaries");
    Boundaries b;
    std::set<int> d1;
    for (int v : s.vset) {
        bool outside_neighbor = false;
        for (int d : s.host->vertex_darts(v)) {
            int u = s.host->head(d);
            if (!s.has_vertex(u)) {
                outside_neighbor = true;
                b.boundary_edges.push_back(s.host->edge_of(d));
                d1.insert(u);
            }
        }
        if (outside_neighbor) b.d0.push_back(v);
    }
    sort_unique(b.boundary_edges);
    b.d1.assign(d1.begin(), d1.end());
    return b;
}

Subgraph fill_holes(const Subgraph& s) {
    const PlaneGraph& g = *s.host;
    // BFS over faces not in fset, crossing only edges not in eset. The
    // component containing the outer face is the unbounded complement
    // component; every other component is a hole.
    std::vector<char> reached(g.face_count(), 0);
    std::queue<int> q;
    reached[g.outer_face()] = 1;
    q.push(g.outer_face());
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int d : g.face(f).darts) {
            if (s.has_edge(g.edge_of(d))) continue;
            int nf = g.face_right(d);
            if (!reached[nf] && !s.has_face(nf)) {
                reached[nf] = 1;
                q.push(nf);
            }
        }
    }
    Subgraph out = s;
    bool changed = false;
    for (int f = 0; f < g.face_count(); ++f) {
        if (reached[f] || !g.face_bounded(f) || s.has_face(f)) continue;
        changed = true;
        out.fset.push_back(f);
        for (int d : g.face(f).darts) {
            out.eset.push_back(g.edge_of(d));
            out.vset.push_back(g.origin(d));
        }
    }
    if (changed) {
        sort_unique(out.vset);
        sort_unique(out.eset);
        sort_unique(out.fset);
    }
    return out;
}

Subgraph combinatorial_ball(const PlaneGraph& g, int v, int n) {
    if (v < 0 || v >= g.vertex_count())
        throw Error("combinatorial_ball: vertex out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> inside;
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (!g.complete(u))
            throw UnsafeSubgraph("combinatorial_ball: vertex " + std::to_string(u) +
                                 " at distance " + std::to_string(dist[u]) + " is incomplete");
        inside.push_back(u);
        if (dist[u] == n) continue;
        for (int d : g.vertex_darts(u)) {
            int w = g.head(d);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return Subgraph::induced(g, std::move(inside));
}

}  // namespace tessera
