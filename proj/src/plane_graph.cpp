#include "tessera/plane_graph.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <set>

namespace tessera {

PlaneGraph PlaneGraph::build(const std::vector<std::vector<int>>& rotations,
                             const std::vector<bool>& complete,
                             std::optional<std::pair<int, int>> outer_hint) {
    const int n = static_cast<int>(rotations.size());
    if (complete.size() != rotations.size())
        throw InconsistentRotation("build: rotations and complete flags differ in length");

    PlaneGraph g;
    g.complete_.assign(complete.begin(), complete.end());
    g.incomplete_count_ = static_cast<int>(std::count(complete.begin(), complete.end(), false));
    g.vertex_darts_.resize(n);

    // Create one dart per (vertex, rotation slot) and index them by (u,v).
    for (int u = 0; u < n; ++u) {
        for (int k = 0; k < static_cast<int>(rotations[u].size()); ++k) {
            int v = rotations[u][k];
            if (v < 0 || v >= n)
                throw InconsistentRotation("build: vertex " + std::to_string(u) +
                                           " lists out-of-range neighbor " + std::to_string(v));
            if (v == u)
                throw SelfLoop("build: vertex " + std::to_string(u) + " lists itself");
            int id = static_cast<int>(g.darts_.size());
            auto [it, inserted] = g.dart_by_pair_.emplace(
                static_cast<std::int64_t>(u) * n + v, id);
            if (!inserted)
                throw ParallelEdge("build: duplicate edge " + std::to_string(u) + "-" +
                                   std::to_string(v) + " in rotation");
            Dart d;
            d.origin = u;
            d.rot_index = k;
            g.darts_.push_back(d);
            g.vertex_darts_[u].push_back(id);
        }
    }

    // Pair twins; symmetry of the adjacency relation is required.
    for (int d = 0; d < static_cast<int>(g.darts_.size()); ++d) {
        if (g.darts_[d].twin >= 0) continue;
        int u = g.darts_[d].origin;
        int v = rotations[u][g.darts_[d].rot_index];
        auto it = g.dart_by_pair_.find(static_cast<std::int64_t>(v) * n + u);
        if (it == g.dart_by_pair_.end())
            throw InconsistentRotation("build: vertex " + std::to_string(u) + " lists " +
                                       std::to_string(v) + " but not vice versa");
        int t = it->second;
        g.darts_[d].twin = t;
        g.darts_[t].twin = d;
        int e = static_cast<int>(g.edge_darts_.size());
        g.darts_[d].edge = e;
        g.darts_[t].edge = e;
        g.edge_darts_.push_back(std::min(d, t));
    }

    // Face tracing: next dart of a face orbit is the clockwise successor of
    // the twin at the twin's origin. Each orbit is the boundary of the face
    // lying left of every dart in it.
    for (int d0 = 0; d0 < static_cast<int>(g.darts_.size()); ++d0) {
        if (g.darts_[d0].face_left >= 0) continue;
        int f = static_cast<int>(g.faces_.size());
        g.faces_.emplace_back();
        int d = d0;
        do {
            g.darts_[d].face_left = f;
            g.faces_[f].darts.push_back(d);
            d = g.cw_next_at_origin(g.darts_[d].twin);
        } while (d != d0);
    }

    // Outer face designation.
    if (outer_hint) {
        int hd = g.dart_from_to(outer_hint->first, outer_hint->second);
        if (hd < 0)
            throw InconsistentRotation("build: outer face hint names a missing edge");
        g.outer_face_ = g.darts_[hd].face_left;
    } else if (g.incomplete_count_ > 0) {
        // The outer orbit of a patch sweeps the whole incomplete rim.
        std::vector<int> count(g.faces_.size(), 0);
        std::vector<int> stamp(g.faces_.size(), -1);
        for (int v = 0; v < n; ++v) {
            if (complete[v]) continue;
            for (int d : g.vertex_darts_[v]) {
                int f = g.darts_[d].face_left;
                if (stamp[f] != v) {
                    stamp[f] = v;
                    ++count[f];
                }
            }
        }
        int found = -1;
        for (int f = 0; f < static_cast<int>(g.faces_.size()); ++f) {
            if (count[f] == g.incomplete_count_) {
                if (found >= 0)
                    throw InconsistentRotation(
                        "build: outer face ambiguous (two orbits cover all incomplete "
                        "vertices); pass an outer face hint");
                found = f;
            }
        }
        if (found < 0)
            throw InconsistentRotation(
                "build: no face orbit passes through every incomplete vertex; "
                "incomplete flags do not describe a patch rim");
        g.outer_face_ = found;
    } else {
        // Closed graph without a hint: deterministic default.
        int best = 0;
        for (int f = 1; f < static_cast<int>(g.faces_.size()); ++f)
            if (g.faces_[f].darts.size() > g.faces_[best].darts.size()) best = f;
        g.outer_face_ = best;
    }

    // A complete vertex has all its faces present, so it can never lie on the
    // outer orbit of a patch (the orbit sweeping missing data).
    if (g.incomplete_count_ > 0) {
        for (int d : g.faces_[g.outer_face_].darts) {
            if (complete[g.darts_[d].origin])
                throw InconsistentRotation(
                    "build: vertex " + std::to_string(g.darts_[d].origin) +
                    " is marked complete but lies on the outer face");
        }
    }

    // Closed rotation systems must be spheres.
    if (g.incomplete_count_ == 0) {
        long long chi = static_cast<long long>(n) - g.edge_count() + g.face_count();
        if (chi != 2)
            throw NonPlanar("build: closed graph has Euler characteristic " +
                            std::to_string(chi) + ", expected 2");
    }

    if (n > 0 && g.complete_[0]) g.meta.safe_height = g.compute_safe_height(0);
    return g;
}

std::vector<int> PlaneGraph::face_vertex_cycle(int f) const {
    std::vector<int> out;
    out.reserve(faces_[f].darts.size());
    for (int d : faces_[f].darts) out.push_back(darts_[d].origin);
    return out;
}

std::vector<int> PlaneGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(vertex_darts_[v].size());
    for (int d : vertex_darts_[v]) out.push_back(head(d));
    return out;
}

std::vector<int> PlaneGraph::faces_at(int v) const {
    std::vector<int> out;
    out.reserve(vertex_darts_[v].size());
    for (int d : vertex_darts_[v]) out.push_back(darts_[d].face_left);
    return out;
}

void PlaneGraph::audit_tessellation() const {
    const int n = vertex_count();
    // Vertex condition: a complete vertex sees one distinct bounded face per
    // sector, so |F(v)| = |E(v)| = deg v.
    for (int v = 0; v < n; ++v) {
        if (!complete_[v]) continue;
        auto fs = faces_at(v);
        std::set<int> distinct(fs.begin(), fs.end());
        // On a closed graph the designated outer face is a genuine face.
        if (!is_closed() && distinct.count(outer_face_))
            throw Error("audit: complete vertex " + std::to_string(v) + " touches the outer face");
        if (static_cast<int>(distinct.size()) != degree(v))
            throw Error("audit: vertex " + std::to_string(v) + " has " +
                        std::to_string(distinct.size()) + " distinct faces but degree " +
                        std::to_string(degree(v)));
    }
    // Edge condition: an edge of the tessellation borders two distinct faces.
    for (int e = 0; e < edge_count(); ++e) {
        int d = edge_darts_[e];
        auto [u, v] = edge_endpoints(e);
        if (!complete_[u] || !complete_[v]) continue;
        if (face_left(d) == face_right(d))
            throw Error("audit: edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " has the same face on both sides");
    }

    // Audited faces: bounded, every vertex complete. They must be simple
    // polygons and meet pairwise in at most one edge / at most two vertices.
    std::vector<bool> audited(face_count(), false);
    for (int f = 0; f < face_count(); ++f) {
        if (!face_bounded(f)) continue;
        bool all_complete = true;
        std::set<int> seen;
        for (int d : faces_[f].darts) {
            int v = darts_[d].origin;
            if (!complete_[v]) all_complete = false;
            if (!seen.insert(v).second && all_complete)
                throw Error("audit: face " + std::to_string(f) + " revisits vertex " +
                            std::to_string(v));
        }
        audited[f] = all_complete;
    }

    std::map<std::pair<int, int>, int> shared_vertices, shared_edges;
    for (int v = 0; v < n; ++v) {
        if (!complete_[v]) continue;
        auto fs = faces_at(v);
        std::sort(fs.begin(), fs.end());
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j)
                if (audited[fs[i]] && audited[fs[j]] && fs[i] != fs[j])
                    ++shared_vertices[{fs[i], fs[j]}];
    }
    for (int e = 0; e < edge_count(); ++e) {
        int d = edge_darts_[e];
        int f = face_left(d), h = face_right(d);
        if (f == h) continue;
        auto key = std::minmax(f, h);
        if (audited[key.first] && audited[key.second])
            ++shared_edges[{key.first, key.second}];
    }
    for (const auto& [pair, nv] : shared_vertices) {
        int ne = shared_edges.count(pair) ? shared_edges[pair] : 0;
        if (ne >= 2)
            throw Error("audit: faces " + std::to_string(pair.first) + " and " +
                        std::to_string(pair.second) + " share " + std::to_string(ne) + " edges");
        if (ne == 1 && nv != 2)
            throw Error("audit: faces sharing an edge share " + std::to_string(nv) +
                        " vertices, expected 2");
        if (ne == 0 && nv >= 2)
            throw Error("audit: faces " + std::to_string(pair.first) + " and " +
                        std::to_string(pair.second) + " share " + std::to_string(nv) +
                        " vertices but no edge");
    }
}

void PlaneGraph::audit_degrees(int p_min, int p_max, int q_min, int q_max) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (!complete_[v]) continue;
        if (degree(v) < p_min || degree(v) > p_max)
            throw DegreeAuditFailed("vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(degree(v)) + ", outside [" +
                                    std::to_string(p_min) + "," + std::to_string(p_max) + "]");
    }
    for (int f = 0; f < face_count(); ++f) {
        if (!face_bounded(f)) continue;
        bool all_complete = true;
        for (int d : faces_[f].darts)
            if (!complete_[darts_[d].origin]) { all_complete = false; break; }
        if (!all_complete) continue;
        int deg = face_degree(f);
        if (deg < q_min || deg > q_max)
            throw DegreeAuditFailed("face " + std::to_string(f) + " has degree " +
                                    std::to_string(deg) + ", outside [" + std::to_string(q_min) +
                                    "," + std::to_string(q_max) + "]");
    }
}

int PlaneGraph::min_complete_degree() const {
    int best = -1;
    for (int v = 0; v < vertex_count(); ++v)
        if (complete_[v] && (best < 0 || degree(v) < best)) best = degree(v);
    return best;
}

int PlaneGraph::compute_safe_height(int root) const {
    if (root < 0 || root >= vertex_count() || !complete_[root]) return -1;
    std::vector<int> dist(vertex_count(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    int safe = INT_MAX;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!complete_[v]) {
            // First incomplete vertex bounds the safe radius; BFS order makes
            // this the minimum over all incomplete vertices.
            safe = std::min(safe, dist[v] - 1);
            break;
        }
        for (int d : vertex_darts_[v]) {
            int u = head(d);
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    if (safe == INT_MAX) {
        // Everything reachable is complete.
        int far = 0;
        for (int v = 0; v < vertex_count(); ++v) far = std::max(far, dist[v]);
        return far;
    }
    return safe;
}

PlaneGraph dual(const PlaneGraph& g) {
    // Keep the faces whose corners are all complete; those have a trustworthy
    // cyclic edge order, so the dual rotation can be read off the face cycle.
    // On a closed graph every face is a sphere face, including the one that
    // build() designated as outer for embedding purposes.
    const bool closed = g.is_closed();
    std::vector<int> dual_id(g.face_count(), -1);
    std::vector<int> kept;
    for (int f = 0; f < g.face_count(); ++f) {
        if (!closed && !g.face_bounded(f)) continue;
        bool ok = true;
        for (int d : g.face(f).darts)
            if (!g.complete(g.origin(d))) {
                ok = false;
                break;
            }
        if (ok) {
            dual_id[f] = static_cast<int>(kept.size());
            kept.push_back(f);
        }
    }
    if (kept.empty()) throw EmptyDual("dual: no face has all corners complete");

    std::vector<std::vector<int>> rotations(kept.size());
    std::vector<bool> complete(kept.size(), true);
    for (size_t i = 0; i < kept.size(); ++i) {
        for (int d : g.face(kept[i]).darts) {
            const int across = g.face_right(d);
            if ((closed || g.face_bounded(across)) && dual_id[across] >= 0)
                rotations[i].push_back(dual_id[across]);
            else
                complete[i] = false;
        }
    }

    PlaneGraph dg = PlaneGraph::build(rotations, complete);
    dg.meta.p = g.meta.q;
    dg.meta.q = g.meta.p;
    dg.meta.height = g.meta.height;
    dg.meta.seed = g.meta.seed;
    dg.meta.kind = "dual";
    return dg;
}

}  // namespace tessera
