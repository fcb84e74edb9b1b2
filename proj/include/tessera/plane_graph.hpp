#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tessera/errors.hpp"

namespace tessera {

// One directed half of an edge. Darts at a vertex are ordered by the vertex's
// counterclockwise rotation; faces are orbits of d -> cw_successor(twin(d)),
// which traces the face lying on the LEFT of each dart (bounded faces come out
// counterclockwise, the outer region clockwise).
struct Dart {
    int origin = -1;     // vertex id
    int twin = -1;       // dart id of the reversed dart
    int rot_index = -1;  // position of this dart in origin's rotation
    int edge = -1;       // undirected edge id
    int face_left = -1;  // id of the face on the left of origin->head
};

struct FaceRec {
    std::vector<int> darts;  // orbit order; the face lies left of each dart
};

struct GraphMeta {
    int p = -1, q = -1;          // intended regular degrees when generated
    int p_max = -1, q_max = -1;  // degree ranges for perturbed patches
    int height = -1;             // generation height (construction layers)
    std::uint64_t seed = 0;
    std::string kind;            // "regular" | "perturbed" | "platonic" | ""
    int safe_height = -1;        // largest h with all vertices within graph
                                 // distance h of vertex 0 complete; -1 unknown
};

// Immutable rotation-system patch. A vertex marked complete asserts that its
// full neighborhood (all incident edges and faces) is present, i.e. local
// quantities at that vertex equal those of the infinite tessellation the patch
// approximates. One face is designated "outer": for patches it is the orbit
// that sweeps the incomplete rim (not a real face); for closed graphs it is a
// genuine face chosen by the caller (or by a deterministic default).
class PlaneGraph {
public:
    // rotations[v] = neighbor ids of v in counterclockwise order.
    // outer_hint, when given, is a (from, to) vertex pair: the face left of
    // that dart becomes the outer face. Required only when the default rules
    // (unique orbit through all incomplete vertices; for closed graphs the
    // largest face, smallest id first) would pick the wrong face.
    static PlaneGraph build(const std::vector<std::vector<int>>& rotations,
                            const std::vector<bool>& complete,
                            std::optional<std::pair<int, int>> outer_hint = std::nullopt);

    int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
    int edge_count() const { return static_cast<int>(edge_darts_.size()); }
    int dart_count() const { return static_cast<int>(darts_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }  // includes outer
    int bounded_face_count() const { return face_count() - 1; }
    int outer_face() const { return outer_face_; }
    bool face_bounded(int f) const { return f != outer_face_; }
    bool is_closed() const { return incomplete_count_ == 0; }

    int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
    bool complete(int v) const { return complete_[v]; }
    const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[v]; }

    const Dart& dart(int d) const { return darts_[d]; }
    int origin(int d) const { return darts_[d].origin; }
    int head(int d) const { return darts_[darts_[d].twin].origin; }
    int twin(int d) const { return darts_[d].twin; }
    int edge_of(int d) const { return darts_[d].edge; }
    int face_left(int d) const { return darts_[d].face_left; }
    int face_right(int d) const { return darts_[darts_[d].twin].face_left; }

    int ccw_next_at_origin(int d) const {
        const auto& rot = vertex_darts_[darts_[d].origin];
        return rot[(darts_[d].rot_index + 1) % rot.size()];
    }
    int cw_next_at_origin(int d) const {
        const auto& rot = vertex_darts_[darts_[d].origin];
        return rot[(darts_[d].rot_index + rot.size() - 1) % rot.size()];
    }

    // -1 when u->v is not an edge.
    int dart_from_to(int u, int v) const {
        auto it = dart_by_pair_.find(pair_key(u, v));
        return it == dart_by_pair_.end() ? -1 : it->second;
    }
    int edge_between(int u, int v) const {
        int d = dart_from_to(u, v);
        return d < 0 ? -1 : darts_[d].edge;
    }
    std::pair<int, int> edge_endpoints(int e) const {
        int d = edge_darts_[e];
        return {origin(d), head(d)};
    }
    int edge_dart(int e) const { return edge_darts_[e]; }

    const FaceRec& face(int f) const { return faces_[f]; }
    int face_degree(int f) const { return static_cast<int>(faces_[f].darts.size()); }
    std::vector<int> face_vertex_cycle(int f) const;

    std::vector<int> neighbors(int v) const;
    // Faces incident to v in rotation order: entry k is the face in the sector
    // counterclockwise-after dart k. Distinct for complete vertices of a
    // genuine tessellation patch.
    std::vector<int> faces_at(int v) const;

    // Checks the tessellation conditions on the complete region: complete
    // vertices have as many distinct faces as edges; every edge between
    // complete vertices borders two distinct faces; fully-complete bounded
    // faces are simple polygons and meet pairwise in nothing, one vertex, or
    // one edge. Throws Error describing the first violation.
    void audit_tessellation() const;

    // Degree-range audit over the complete region (vertices) and the bounded
    // faces whose vertices are all complete. Throws DegreeAuditFailed.
    void audit_degrees(int p_min, int p_max, int q_min, int q_max) const;
    int min_complete_degree() const;

    // Largest h such that every vertex within graph distance h of root is
    // complete (-1 when the root itself is incomplete).
    int compute_safe_height(int root) const;

    GraphMeta meta;

private:
    std::vector<std::vector<int>> vertex_darts_;
    std::vector<bool> complete_;
    std::vector<Dart> darts_;
    std::vector<int> edge_darts_;  // canonical dart per edge (lower id)
    std::vector<FaceRec> faces_;
    std::unordered_map<std::int64_t, int> dart_by_pair_;
    int outer_face_ = -1;
    int incomplete_count_ = 0;

    std::int64_t pair_key(int u, int v) const {
        return static_cast<std::int64_t>(u) * vertex_count() + v;
    }
};

// Dual graph: one vertex per face whose corners are all complete, joined when
// two such faces share an edge, rotations inherited from the face cycles.
// A dual vertex is complete when every face across its edges is also kept.
// For closed graphs this is the full dual; for patches it is the sub-dual of
// the safe region. Throws EmptyDual when no face qualifies.
PlaneGraph dual(const PlaneGraph& g);

}  // namespace tessera
