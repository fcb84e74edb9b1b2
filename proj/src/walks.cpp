#include "tessera/walks.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tessera {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Successor scan shared by all walk tracers. Starting from the reversal of
// the incoming dart, the next walk dart is the first one met going
// counterclockwise (outer walks: keeps the swept region on the right) or
// clockwise (inner walks: keeps the traced material on the left). The scan
// wraps all the way back to the reversed dart itself, which realizes the
// doubling of pendant edges.
template <typename IsWalkDart>
int walk_successor(const PlaneGraph& g, int dart, bool ccw, const IsWalkDart& in_walk) {
    int r = g.twin(dart);
    int w = g.origin(r);
    const auto& rot = g.vertex_darts(w);
    int deg = static_cast<int>(rot.size());
    int k = g.dart(r).rot_index;
    for (int i = 1; i <= deg; ++i) {
        int cand = ccw ? rot[(k + i) % deg] : rot[(k - i % deg + deg) % deg];
        if (in_walk(cand)) return cand;
    }
    return -1;
}

template <typename IsWalkDart>
std::vector<WalkCycle> trace_cycles(const PlaneGraph& g, const std::vector<int>& walk_darts,
                                    bool ccw, const IsWalkDart& in_walk, const char* op) {
    std::vector<WalkCycle> cycles;
    std::unordered_set<int> visited;
    visited.reserve(walk_darts.size() * 2);
    for (int d0 : walk_darts) {  // ascending ids: each cycle starts at its least dart
        if (visited.count(d0)) continue;
        WalkCycle c;
        int d = d0;
        do {
            visited.insert(d);
            c.darts.push_back(d);
            d = walk_successor(g, d, ccw, in_walk);
            if (d < 0)
                throw Error(std::string(op) + ": walk left the dart set (inconsistent subgraph)");
        } while (d != d0);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace

std::vector<int> BoundaryWalk::vertex_set() const {
    std::vector<int> out;
    for (const auto& c : cycles) {
        if (c.base_vertex >= 0) out.push_back(c.base_vertex);
        for (int d : c.darts) out.push_back(host->origin(d));
    }
    sort_unique(out);
    return out;
}

std::vector<int> BoundaryWalk::cycle_vertices(const WalkCycle& c) const {
    if (c.base_vertex >= 0) return {c.base_vertex};
    std::vector<int> out;
    out.reserve(c.darts.size());
    for (int d : c.darts) out.push_back(host->origin(d));
    return out;
}

BoundaryWalk boundary_walk(const Subgraph& s) {
    s.require_safe("boundary_walk");
    if (s.empty()) throw Error("boundary_walk: empty subgraph");
    const PlaneGraph& g = *s.host;

    // Walk darts: subgraph edges whose right side is not covered by fset.
    std::vector<int> walk_darts;
    for (int e : s.eset) {
        int d = g.edge_dart(e);
        if (!s.has_face(g.face_right(d))) walk_darts.push_back(d);
        if (!s.has_face(g.face_left(d))) walk_darts.push_back(g.twin(d));
    }
    sort_unique(walk_darts);
    auto in_walk = [&](int d) { return std::binary_search(walk_darts.begin(), walk_darts.end(), d); };

    BoundaryWalk w;
    w.host = &g;
    w.kind = WalkKind::outer;
    w.cycles = trace_cycles(g, walk_darts, /*ccw=*/true, in_walk, "boundary_walk");

    // Vertices with no subgraph edge are constant cycles.
    std::unordered_set<int> covered;
    for (int e : s.eset) {
        auto [u, v] = g.edge_endpoints(e);
        covered.insert(u);
        covered.insert(v);
    }
    for (int v : s.vset) {
        if (!covered.count(v)) {
            WalkCycle c;
            c.base_vertex = v;
            w.cycles.push_back(std::move(c));
        }
    }
    return w;
}

std::vector<std::vector<int>> interior_components(const Subgraph& s) {
    const PlaneGraph& g = *s.host;
    if (s.fset.empty()) return {};
    std::unordered_map<int, int> index;
    index.reserve(s.fset.size() * 2);
    for (size_t i = 0; i < s.fset.size(); ++i) index[s.fset[i]] = static_cast<int>(i);
    std::vector<int> parent(s.fset.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Interiors connect exactly across edges with fset faces on both sides.
    for (size_t i = 0; i < s.fset.size(); ++i) {
        for (int d : g.face(s.fset[i]).darts) {
            auto it = index.find(g.face_right(d));
            if (it != index.end()) {
                int a = find(static_cast<int>(i)), b = find(it->second);
                if (a != b) parent[a] = b;
            }
        }
    }
    std::unordered_map<int, std::vector<int>> groups;
    for (size_t i = 0; i < s.fset.size(); ++i) groups[find(static_cast<int>(i))].push_back(s.fset[i]);
    std::vector<std::vector<int>> out;
    for (auto& [root, faces] : groups) out.push_back(std::move(faces));
    // Deterministic order: by least face id.
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return out;
}

namespace {

// Inner cycles of one interior component: darts with the component on the
// left and not on the right, chained by the clockwise successor rule.
std::vector<WalkCycle> component_inner_cycles(const PlaneGraph& g,
                                              const std::vector<int>& component) {
    std::unordered_set<int> faces(component.begin(), component.end());
    std::vector<int> walk_darts;
    for (int f : component)
        for (int d : g.face(f).darts)
            if (!faces.count(g.face_right(d))) walk_darts.push_back(d);
    sort_unique(walk_darts);
    auto in_walk = [&](int d) { return std::binary_search(walk_darts.begin(), walk_darts.end(), d); };
    return trace_cycles(g, walk_darts, /*ccw=*/false, in_walk, "inner_boundary_walk");
}

}  // namespace

BoundaryWalk inner_boundary_walk(const Subgraph& s) {
    s.require_safe("inner_boundary_walk");
    BoundaryWalk w;
    w.host = s.host;
    w.kind = WalkKind::inner;
    if (s.fset.empty()) {
        w.empty_face_set = true;
        return w;
    }
    for (const auto& component : interior_components(s)) {
        auto cycles = component_inner_cycles(*s.host, component);
        for (auto& c : cycles) w.cycles.push_back(std::move(c));
    }
    return w;
}

Subgraph interior(const Subgraph& s) {
    auto bw = boundary_walk(s);
    auto on_walk = bw.vertex_set();
    std::vector<int> keep;
    std::set_difference(s.vset.begin(), s.vset.end(), on_walk.begin(), on_walk.end(),
                        std::back_inserter(keep));
    // Every host edge between interior vertices belongs to s (both side faces
    // of such an edge are filled), so host-induced equals s-induced here.
    return Subgraph::induced(*s.host, std::move(keep));
}

std::pair<Subgraph, int> interior_and_depth(const Subgraph& s) {
    s.require_safe("interior_and_depth");
    if (s.empty()) throw Error("interior_and_depth: empty subgraph");
    Subgraph first = interior(s);
    int depth = 0;
    Subgraph cur = first;
    while (!cur.empty()) {
        ++depth;
        cur = interior(cur);
    }
    return {std::move(first), depth};
}

Subgraph face_closure(const Subgraph& s) {
    if (s.empty()) throw Error("face_closure: empty subgraph");
    const PlaneGraph& g = *s.host;
    for (int v : s.vset)
        if (!g.complete(v))
            throw UnsafeSubgraph("face_closure: vertex " + std::to_string(v) +
                                 " is incomplete, its faces are not all known");
    std::vector<int> fs;
    for (int v : s.vset)
        for (int f : g.faces_at(v))
            if (g.face_bounded(f)) fs.push_back(f);
    sort_unique(fs);
    Subgraph out = Subgraph::from_faces(g, std::move(fs));
    // Isolated vertices of s lie on their incident faces, so the closure
    // already contains all of s.
    return out;
}

BoundaryWalk outer_layer_walk(const Subgraph& b) {
    const PlaneGraph& g = *b.host;
    b.require_safe("outer_layer_walk");
    if (b.empty()) throw Error("outer_layer_walk: empty subgraph");

    Subgraph closure = face_closure(b);
    for (int v : closure.vset)
        if (!g.complete(v))
            throw UnsafeSubgraph("outer_layer_walk: layer vertex " + std::to_string(v) +
                                 " is incomplete; host patch too small");
    if (closure.vertex_count() == g.vertex_count())
        throw UnsafeSubgraph("outer_layer_walk: complement of the subgraph is empty");

    std::vector<char> in_b(g.vertex_count(), 0);
    for (int v : b.vset) in_b[v] = 1;
    std::vector<char> layer_face(g.face_count(), 0);
    for (int f : closure.fset) layer_face[f] = 1;

    // Induced complement: edges/faces with no endpoint/vertex in b.
    auto edge_in_complement = [&](int e) {
        auto [u, v] = g.edge_endpoints(e);
        return !in_b[u] && !in_b[v];
    };
    std::vector<char> face_in_complement(g.face_count(), 0);
    for (int f = 0; f < g.face_count(); ++f) {
        if (!g.face_bounded(f)) continue;
        bool ok = true;
        for (int d : g.face(f).darts)
            if (in_b[g.origin(d)]) { ok = false; break; }
        face_in_complement[f] = ok;
    }

    // Boundary-walk darts of the complement, collected only around the layer
    // (a dart qualifies if its right face is a bounded face of b's closure;
    // those are exactly the faces separating the complement from b).
    std::vector<int> walk_darts;
    std::vector<char> is_walk(g.dart_count(), 0);
    for (int v : closure.vset) {
        if (in_b[v]) continue;
        for (int d : g.vertex_darts(v)) {
            if (!edge_in_complement(g.edge_of(d))) continue;
            if (!face_in_complement[g.face_right(d)]) {
                walk_darts.push_back(d);
                is_walk[d] = 1;
            }
        }
    }
    sort_unique(walk_darts);
    auto in_walk = [&](int d) { return is_walk[d] != 0; };
    auto cycles = trace_cycles(g, walk_darts, /*ccw=*/true, in_walk, "outer_layer_walk");

    BoundaryWalk w;
    w.host = &g;
    w.kind = WalkKind::layer;
    for (auto& c : cycles) {
        bool faces_b = false;
        for (int d : c.darts) {
            int f = g.face_right(d);
            if (g.face_bounded(f) && layer_face[f]) { faces_b = true; break; }
        }
        if (!faces_b) continue;
        // Reverse the orientation: the layer walk runs opposite to the
        // complement's own boundary walk.
        WalkCycle rc;
        rc.darts.reserve(c.darts.size());
        for (auto it = c.darts.rbegin(); it != c.darts.rend(); ++it)
            rc.darts.push_back(g.twin(*it));
        std::rotate(rc.darts.begin(), std::min_element(rc.darts.begin(), rc.darts.end()),
                    rc.darts.end());
        w.cycles.push_back(std::move(rc));
    }
    // Complement vertices whose neighbors all lie in b are constant cycles.
    for (int v : closure.vset) {
        if (in_b[v]) continue;
        bool isolated = true;
        for (int d : g.vertex_darts(v))
            if (!in_b[g.head(d)]) { isolated = false; break; }
        if (isolated) {
            WalkCycle c;
            c.base_vertex = v;
            w.cycles.push_back(std::move(c));
        }
    }

    // The layer identity: the walk visits exactly the new layer.
    std::vector<int> expect;
    std::set_difference(closure.vset.begin(), closure.vset.end(), b.vset.begin(), b.vset.end(),
                        std::back_inserter(expect));
    if (w.vertex_set() != expect)
        throw HypothesisViolation(
            "outer_layer_walk: walk vertices differ from the closure layer; the subgraph is "
            "not quasi-ball-like (its complement interior is disconnected or wraps around)");
    return w;
}

std::pair<long long, long long> euler_characteristics(const Subgraph& s) {
    long long chi = s.euler_characteristic();
    long long chi_interior = 0;
    if (!s.fset.empty()) {
        for (const auto& component : interior_components(s)) {
            auto cycles = component_inner_cycles(*s.host, component);
            chi_interior += 2 - static_cast<long long>(cycles.size());
        }
    }
    return {chi, chi_interior};
}

}  // namespace tessera
