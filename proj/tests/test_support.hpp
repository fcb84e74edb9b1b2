#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tessera/plane_graph.hpp"
#include "tessera/subgraph.hpp"

namespace tessera::testing {

struct RotationSystem {
    std::vector<std::vector<int>> rotations;
    std::vector<bool> complete;
};

// Derive a rotation system from counterclockwise face cycles. Each face
// corner (a, v, b) pins "a immediately follows b" in v's rotation; chaining
// the pins recovers the rotation. Vertices whose pins close into one cycle
// are complete, a single open chain leaves the vertex incomplete, anything
// else is a malformed fixture.
inline RotationSystem rotations_from_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> succ(n);
    for (const auto& cyc : faces) {
        const int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            const int v = cyc[i];
            const int prev = cyc[(i + m - 1) % m];
            const int next = cyc[(i + 1) % m];
            auto [it, inserted] = succ[v].emplace(next, prev);
            if (!inserted)
                throw std::logic_error("fixture: conflicting corners at vertex " +
                                       std::to_string(v));
        }
    }

    RotationSystem rs;
    rs.rotations.resize(n);
    rs.complete.assign(n, false);
    for (int v = 0; v < n; ++v) {
        const auto& s = succ[v];
        if (s.empty()) continue;
        std::map<int, int> preds;
        for (const auto& [b, a] : s) {
            preds.try_emplace(b, 0);
            preds.try_emplace(a, 0);
        }
        for (const auto& [b, a] : s) ++preds[a];
        std::vector<int> starts;
        for (const auto& [u, c] : preds)
            if (c == 0) starts.push_back(u);

        std::vector<int> order;
        if (starts.empty()) {
            const int start = s.begin()->first;
            int cur = start;
            do {
                order.push_back(cur);
                cur = s.at(cur);
            } while (cur != start);
            if (order.size() != preds.size())
                throw std::logic_error("fixture: rotation splits at vertex " + std::to_string(v));
            rs.complete[v] = true;
        } else if (starts.size() == 1) {
            int cur = starts[0];
            order.push_back(cur);
            for (auto it = s.find(cur); it != s.end(); it = s.find(cur)) {
                cur = it->second;
                order.push_back(cur);
            }
            if (order.size() != preds.size())
                throw std::logic_error("fixture: rotation chain broken at vertex " +
                                       std::to_string(v));
        } else {
            throw std::logic_error("fixture: several rotation gaps at vertex " +
                                   std::to_string(v));
        }
        rs.rotations[v] = std::move(order);
    }
    return rs;
}

// w x h square-lattice patch; vertex (x, y) gets id y * w + x, rotation order
// east, north, west, south. Interior vertices are complete.
inline PlaneGraph grid_patch(int w, int h) {
    auto id = [&](int x, int y) { return y * w + x; };
    std::vector<std::vector<int>> rot(static_cast<size_t>(w) * h);
    std::vector<bool> comp(static_cast<size_t>(w) * h, false);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::vector<int> r;
            if (x + 1 < w) r.push_back(id(x + 1, y));
            if (y + 1 < h) r.push_back(id(x, y + 1));
            if (x > 0) r.push_back(id(x - 1, y));
            if (y > 0) r.push_back(id(x, y - 1));
            rot[id(x, y)] = std::move(r);
            comp[id(x, y)] = x > 0 && x + 1 < w && y > 0 && y + 1 < h;
        }
    return PlaneGraph::build(rot, comp);
}

inline int grid_vertex(int w, int x, int y) { return y * w + x; }

// Bounded square whose lower-left corner is (x, y).
inline int grid_square(const PlaneGraph& g, int w, int x, int y) {
    return g.face_left(g.dart_from_to(grid_vertex(w, x, y), grid_vertex(w, x + 1, y)));
}

inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
        if (ok) return true;
    }
    return false;
}

// A hand-sized region exercising every boundary-walk feature at once: a
// hexagonal face with a three-edge pendant tree hanging off one corner, a
// bridge to a separate quadrilateral, and a second hexagonal region cut by
// chords into four faces around a diamond hole pinched at one vertex.
// Vertices 0..20 form the region; 21..44 are a collar of quadrilaterals
// around the outer rim so that every region vertex is complete.
inline const std::vector<int>& pendant_hole_rim() {
    static const std::vector<int> rim = {0, 1, 2, 3, 4,  5,  4,  6,  4,  3,  7,  8,
                                         9, 10, 11, 8, 7, 12, 0, 13, 14, 15, 16, 17};
    return rim;
}

inline std::vector<std::vector<int>> pendant_hole_faces() {
    return {
        {0, 1, 2, 3, 7, 12},      // hexagon
        {8, 9, 10, 11},           // quadrilateral across the bridge
        {0, 13, 18, 19},          // four faces of the chorded hexagon
        {13, 14, 15, 18},
        {0, 19, 20, 16, 17},
        {15, 16, 20},
        {15, 20, 19, 18},         // diamond hole (host face, not part of s)
    };
}

inline PlaneGraph make_pendant_hole_host() {
    auto faces = pendant_hole_faces();
    const auto& rim = pendant_hole_rim();
    const int len = static_cast<int>(rim.size());
    for (int k = 0; k < len; ++k) {
        const int u = rim[k];
        const int w = rim[(k + 1) % len];
        faces.push_back({w, u, 21 + k, 21 + (k + 1) % len});
    }
    auto rs = rotations_from_faces(45, faces);
    return PlaneGraph::build(rs.rotations, rs.complete);
}

inline Subgraph pendant_hole_subgraph(const PlaneGraph& g) {
    Subgraph s;
    s.host = &g;
    for (int v = 0; v <= 20; ++v) s.vset.push_back(v);
    const std::vector<std::pair<int, int>> edges = {
        {0, 1},   {1, 2},   {2, 3},   {3, 7},   {7, 12},  {12, 0},   // hexagon
        {3, 4},   {4, 5},   {4, 6},                                  // pendant tree
        {7, 8},                                                      // bridge
        {8, 9},   {9, 10},  {10, 11}, {11, 8},                       // quadrilateral
        {0, 13},  {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 0},   // second rim
        {15, 20}, {20, 19}, {19, 18}, {18, 15},                      // hole rim
        {19, 0},  {18, 13}, {20, 16},                                // chords
    };
    for (auto [u, v] : edges) s.eset.push_back(g.edge_between(u, v));
    const auto faces = pendant_hole_faces();
    for (size_t i = 0; i + 1 < faces.size(); ++i)  // all but the hole
        s.fset.push_back(g.face_left(g.dart_from_to(faces[i][0], faces[i][1])));
    std::sort(s.eset.begin(), s.eset.end());
    std::sort(s.fset.begin(), s.fset.end());
    s.validate();
    return s;
}

// Two 2x2 blocks of squares joined by one square at the bottom, leaving a
// notch open to the outside at the top. Hosted in a grid patch so that all
// 18 vertices are complete.
constexpr int kDumbbellGridW = 8;

inline PlaneGraph make_dumbbell_host() { return grid_patch(kDumbbellGridW, 5); }

inline Subgraph dumbbell_subgraph(const PlaneGraph& g) {
    std::vector<int> squares;
    for (int x : {1, 2, 4, 5})
        for (int y : {1, 2}) squares.push_back(grid_square(g, kDumbbellGridW, x, y));
    squares.push_back(grid_square(g, kDumbbellGridW, 3, 1));
    return Subgraph::from_faces(g, std::move(squares));
}

}  // namespace tessera::testing
