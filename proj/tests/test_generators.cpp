#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <vector>

#include "tessera/curvature.hpp"
#include "tessera/errors.hpp"
#include "tessera/generators.hpp"
#include "tessera/plane_graph.hpp"
#include "tessera/rational.hpp"

using namespace tessera;

namespace {

// Vertex counts per breadth-first ring around root, up to the given radius.
std::vector<int> ring_sizes(const PlaneGraph& g, int root, int radius) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> counts(radius + 1, 0);
    std::queue<int> q;
    dist[root] = 0;
    counts[0] = 1;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == radius) continue;
        for (int u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                ++counts[dist[u]];
                q.push(u);
            }
        }
    }
    return counts;
}

bool same_graph(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (a.complete(v) != b.complete(v)) return false;
        if (a.neighbors(v) != b.neighbors(v)) return false;
    }
    return true;
}

Rational total_curvature(const PlaneGraph& g) {
    Rational sum(0);
    for (int v = 0; v < g.vertex_count(); ++v) sum = sum + kappa(g, v);
    return sum;
}

}  // namespace

TEST_CASE("five closed solids") {
    struct Row {
        int p, q, verts, edges, faces;
    };
    const Row rows[] = {
        {3, 3, 4, 6, 4},    {3, 4, 8, 12, 6},  {4, 3, 6, 12, 8},
        {3, 5, 20, 30, 12}, {5, 3, 12, 30, 20},
    };
    for (const Row& r : rows) {
        CAPTURE(r.p);
        CAPTURE(r.q);
        PlaneGraph g = platonic_solid(r.p, r.q);
        CHECK(g.vertex_count() == r.verts);
        CHECK(g.edge_count() == r.edges);
        CHECK(g.face_count() == r.faces);
        CHECK(g.is_closed());
        CHECK_NOTHROW(g.audit_tessellation());
        CHECK_NOTHROW(g.audit_degrees(r.p, r.p, r.q, r.q));
        CHECK(total_curvature(g) == Rational(2));
        CHECK(g.meta.kind == "platonic");
    }
    CHECK_THROWS_AS(platonic_solid(4, 4), InfeasibleSpec);
    CHECK_THROWS_AS(platonic_solid(2, 3), DegreeTooSmall);
}

TEST_CASE("spherical parameters short-circuit to the solid") {
    PlaneGraph g = regular_patch(3, 3, 5);
    CHECK(g.vertex_count() == 4);
    CHECK(g.is_closed());
    PlaneGraph h = regular_patch(5, 3, 0);
    CHECK(h.vertex_count() == 12);
}

TEST_CASE("degree validation") {
    CHECK_THROWS_AS(regular_patch(2, 5, 1), DegreeTooSmall);
    CHECK_THROWS_AS(regular_patch(3, 2, 1), DegreeTooSmall);
    CHECK_THROWS_AS(regular_patch(4, 4, -1), InfeasibleSpec);
}

TEST_CASE("height zero certifies exactly the central face") {
    PlaneGraph g = regular_patch(4, 4, 0);
    // One halo sweep: the 4x4 block whose inner square is complete.
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);
    CHECK(g.bounded_face_count() == 9);
    CHECK(g.is_closed() == false);
    int complete = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.complete(v)) ++complete;
    CHECK(complete == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.complete(v));
    CHECK(g.meta.safe_height == 0);
}

TEST_CASE("square lattice patches") {
    PlaneGraph b1 = regular_patch(4, 4, 1);
    CHECK(b1.vertex_count() == 36);
    CHECK(b1.bounded_face_count() == 25);
    CHECK_NOTHROW(b1.audit_tessellation());
    CHECK_NOTHROW(b1.audit_degrees(4, 4, 4, 4));
    int complete1 = 0;
    for (int v = 0; v < b1.vertex_count(); ++v)
        if (b1.complete(v)) ++complete1;
    CHECK(complete1 == 16);
    CHECK(b1.meta.safe_height >= 1);

    PlaneGraph b2 = regular_patch(4, 4, 2);
    CHECK(b2.vertex_count() == 64);
    CHECK(b2.bounded_face_count() == 49);
    int complete2 = 0;
    for (int v = 0; v < b2.vertex_count(); ++v) {
        if (!b2.complete(v)) continue;
        ++complete2;
        CHECK(kappa(b2, v) == Rational(0));
    }
    CHECK(complete2 == 36);
    CHECK(b2.meta.safe_height >= 2);
}

TEST_CASE("triangular lattice patch covers a flat ball") {
    PlaneGraph g = regular_patch(6, 3, 2);
    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(6, 6, 3, 3));
    // Everything within distance 2 of each seed vertex must be complete and
    // flat, so the safe region holds the full radius-2 ball there.
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int s = 0; s < 3; ++s) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == 2) continue;
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] < 0) continue;
        CHECK(g.complete(v));
        CHECK(kappa(g, v) == Rational(0));
    }
    CHECK(g.meta.safe_height >= 2);
}

TEST_CASE("heptagonal-vertex triangulation has hyperbolic ring growth") {
    PlaneGraph g = regular_patch(7, 3, 3);
    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(7, 7, 3, 3));
    std::vector<int> rings = ring_sizes(g, 0, 3);
    CHECK(rings[1] == 7);
    CHECK(rings[2] == 21);
    CHECK(rings[3] == 56);
    CHECK(g.meta.safe_height >= 3);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.complete(v)) CHECK(kappa(g, v) == Rational(-1, 6));
}

TEST_CASE("hyperbolic mixed-degree patches") {
    PlaneGraph g = regular_patch(4, 5, 2);
    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(4, 4, 5, 5));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.complete(v)) CHECK(kappa(g, v) == Rational(-1, 5));

    PlaneGraph h = regular_patch(3, 7, 2);
    CHECK_NOTHROW(h.audit_tessellation());
    CHECK_NOTHROW(h.audit_degrees(3, 3, 7, 7));
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.complete(v)) CHECK(kappa(h, v) == Rational(-1, 14));
}

TEST_CASE("dual of the dual patch family") {
    // The dual of a (3,7) patch is a degree-7 triangulation wherever the
    // original faces were fully complete, matching the (7,3) family.
    PlaneGraph g = regular_patch(3, 7, 3);
    PlaneGraph d = dual(g);
    CHECK_NOTHROW(d.audit_tessellation());
    CHECK_NOTHROW(d.audit_degrees(7, 7, 3, 3));
    CHECK(d.min_complete_degree() == 7);
    int complete = 0;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.complete(v)) ++complete;
    CHECK(complete > 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.complete(v)) CHECK(kappa(d, v) == Rational(-1, 6));
}

TEST_CASE("generation is deterministic") {
    PlaneGraph a = regular_patch(7, 3, 2);
    PlaneGraph b = regular_patch(7, 3, 2);
    CHECK(same_graph(a, b));

    PatchSpec spec;
    spec.p_min = 7;
    spec.p_max = 9;
    spec.q_min = 3;
    spec.q_max = 3;
    spec.height = 2;
    spec.seed = 11;
    spec.kind = "perturbed";
    PlaneGraph c = perturbed_patch(spec);
    PlaneGraph d = perturbed_patch(spec);
    CHECK(same_graph(c, d));
}

TEST_CASE("perturbed patch respects its degree ranges") {
    PatchSpec spec;
    spec.p_min = 7;
    spec.p_max = 9;
    spec.q_min = 3;
    spec.q_max = 3;
    spec.height = 3;
    spec.seed = 1;
    spec.kind = "perturbed";
    PlaneGraph g = perturbed_patch(spec);
    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(7, 9, 3, 3));
    bool saw_off_seven = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.complete(v)) continue;
        CHECK(g.degree(v) >= 7);
        CHECK(g.degree(v) <= 9);
        if (g.degree(v) != 7) saw_off_seven = true;
    }
    CHECK(saw_off_seven);
    CHECK(g.meta.kind == "perturbed");

    PatchSpec other = spec;
    other.seed = 2;
    PlaneGraph h = perturbed_patch(other);
    CHECK_FALSE(same_graph(g, h));
}

TEST_CASE("collapsed ranges reproduce the regular patch") {
    PatchSpec spec;
    spec.p_min = 7;
    spec.p_max = 7;
    spec.q_min = 3;
    spec.q_max = 3;
    spec.height = 2;
    spec.seed = 0;
    spec.kind = "perturbed";
    PlaneGraph a = perturbed_patch(spec);
    PlaneGraph b = regular_patch(7, 3, 2);
    CHECK(same_graph(a, b));
    CHECK(a.meta.kind == "regular");
    for (int v = 0; v < a.vertex_count(); ++v)
        for (int k = 0; k < a.degree(v); ++k)
            CHECK(a.head(a.vertex_darts(v)[k]) == b.head(b.vertex_darts(v)[k]));
}

TEST_CASE("infeasible perturbation ranges are rejected") {
    PatchSpec spec;
    spec.p_min = 3;
    spec.p_max = 4;
    spec.q_min = 3;
    spec.q_max = 4;
    spec.height = 2;
    spec.kind = "perturbed";
    CHECK_THROWS_AS(perturbed_patch(spec), InfeasibleSpec);

    PatchSpec bad = spec;
    bad.p_min = 8;
    bad.p_max = 7;
    bad.q_min = 3;
    bad.q_max = 3;
    CHECK_THROWS_AS(perturbed_patch(bad), InfeasibleSpec);

    PatchSpec tiny = spec;
    tiny.p_min = 2;
    tiny.p_max = 7;
    CHECK_THROWS_AS(perturbed_patch(tiny), DegreeTooSmall);
}

TEST_CASE("parabolic boundary of the feasible range is allowed") {
    PatchSpec spec;
    spec.p_min = 6;
    spec.p_max = 7;
    spec.q_min = 3;
    spec.q_max = 3;
    spec.height = 2;
    spec.seed = 3;
    spec.kind = "perturbed";
    PlaneGraph g = perturbed_patch(spec);
    CHECK_NOTHROW(g.audit_degrees(6, 7, 3, 3));
}
