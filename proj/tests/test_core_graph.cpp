#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "tessera/plane_graph.hpp"
#include "tessera/subgraph.hpp"
#include "tessera/walks.hpp"
#include "test_support.hpp"

using namespace tessera;
using namespace tessera::testing;

namespace {

PlaneGraph make_tetrahedron() {
    // Outer triangle 0,1,2 counterclockwise with 3 in the middle.
    std::vector<std::vector<int>> rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    return PlaneGraph::build(rot, std::vector<bool>(4, true));
}

PlaneGraph make_cube() {
    // Bottom square 0..3 drawn as the outer square, top square 4..7 inside.
    std::vector<std::vector<int>> rot = {{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
                                         {5, 7, 0}, {6, 4, 1}, {2, 7, 5}, {6, 3, 4}};
    return PlaneGraph::build(rot, std::vector<bool>(8, true));
}

std::vector<int> sorted_cycle_lengths(const BoundaryWalk& w) {
    std::vector<int> lens;
    for (const auto& c : w.cycles) lens.push_back(c.length());
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace

TEST_CASE("build rejects malformed rotation systems") {
    CHECK_THROWS_AS(PlaneGraph::build({{0}}, {false}), SelfLoop);
    CHECK_THROWS_AS(PlaneGraph::build({{1, 1}, {0, 0}}, {false, false}), ParallelEdge);
    CHECK_THROWS_AS(PlaneGraph::build({{1}, {}}, {false, false}), InconsistentRotation);
    CHECK_THROWS_AS(PlaneGraph::build({{5}}, {false}), InconsistentRotation);
    CHECK_THROWS_AS(PlaneGraph::build({{1}, {0}}, {false}), InconsistentRotation);
}

TEST_CASE("tetrahedron builds as a closed sphere graph") {
    PlaneGraph g = make_tetrahedron();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    CHECK(g.is_closed());
    for (int f = 0; f < g.face_count(); ++f) CHECK(g.face_degree(f) == 3);
    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(3, 3, 3, 3));

    // Reversing one rotation gives a toroidal embedding; the Euler check
    // must reject it.
    std::vector<std::vector<int>> rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 0, 2}};
    CHECK_THROWS_AS(PlaneGraph::build(rot, std::vector<bool>(4, true)), NonPlanar);
}

TEST_CASE("a complete vertex may not lie on the outer rim") {
    // 2x2 block: every vertex is on the rim, so claiming one complete while
    // the rest are incomplete contradicts the patch shape.
    std::vector<std::vector<int>> rot = {{1, 2}, {3, 0}, {0, 3}, {2, 1}};
    std::vector<bool> comp = {true, false, false, false};
    CHECK_THROWS_AS(PlaneGraph::build(rot, comp), InconsistentRotation);
}

TEST_CASE("square lattice patch basics") {
    PlaneGraph g = grid_patch(5, 5);
    CHECK(g.vertex_count() == 25);
    CHECK(g.edge_count() == 40);
    CHECK(g.face_count() == 17);
    CHECK(g.bounded_face_count() == 16);
    CHECK(g.face_degree(g.outer_face()) == 16);
    CHECK_FALSE(g.is_closed());

    int n_complete = 0;
    for (int v = 0; v < g.vertex_count(); ++v) n_complete += g.complete(v);
    CHECK(n_complete == 9);

    const int center = grid_vertex(5, 2, 2);
    CHECK(g.degree(center) == 4);
    CHECK(g.faces_at(center).size() == 4);
    CHECK(g.compute_safe_height(center) == 1);

    // Face orbits partition the darts.
    int total = 0;
    for (int f = 0; f < g.face_count(); ++f) total += g.face_degree(f);
    CHECK(total == g.dart_count());

    CHECK_NOTHROW(g.audit_tessellation());
    CHECK_NOTHROW(g.audit_degrees(4, 4, 4, 4));
    CHECK(g.min_complete_degree() == 4);
}

TEST_CASE("dual of a lattice patch keeps the safe sub-dual") {
    PlaneGraph g = grid_patch(6, 6);
    PlaneGraph d = dual(g);
    CHECK(d.vertex_count() == 9);
    CHECK(d.edge_count() == 12);
    CHECK(d.bounded_face_count() == 4);
    int n_complete = 0;
    for (int v = 0; v < d.vertex_count(); ++v) n_complete += d.complete(v);
    CHECK(n_complete == 1);

    CHECK_THROWS_AS(dual(grid_patch(3, 3)), EmptyDual);
}

TEST_CASE("dual of the cube is the octahedron and back") {
    PlaneGraph cube = make_cube();
    CHECK(cube.face_count() == 6);
    PlaneGraph octa = dual(cube);
    CHECK(octa.vertex_count() == 6);
    CHECK(octa.edge_count() == 12);
    CHECK(octa.face_count() == 8);
    CHECK(octa.is_closed());
    for (int v = 0; v < octa.vertex_count(); ++v) CHECK(octa.degree(v) == 4);
    for (int f = 0; f < octa.face_count(); ++f) CHECK(octa.face_degree(f) == 3);

    PlaneGraph back = dual(octa);
    CHECK(back.vertex_count() == 8);
    CHECK(back.edge_count() == 12);
    CHECK(back.face_count() == 6);
    for (int v = 0; v < back.vertex_count(); ++v) CHECK(back.degree(v) == 3);
}

TEST_CASE("boundary walks of small lattice shapes") {
    PlaneGraph g = grid_patch(9, 9);
    const int c = grid_vertex(9, 4, 4);

    SUBCASE("single vertex gives a constant cycle") {
        Subgraph s = Subgraph::single_vertex(g, c);
        BoundaryWalk w = boundary_walk(s);
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 0);
        CHECK(w.cycles[0].base_vertex == c);
        CHECK(w.vertex_set() == std::vector<int>{c});
    }

    SUBCASE("single edge doubles back") {
        const int e = grid_vertex(9, 5, 4);
        Subgraph s = Subgraph::single_edge(g, c, e);
        BoundaryWalk w = boundary_walk(s);
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 2);
        CHECK(cyclic_equal(w.cycle_vertices(w.cycles[0]), {c, e}));
        CHECK_THROWS_AS(Subgraph::single_edge(g, c, grid_vertex(9, 6, 4)), NotAdjacent);
    }

    SUBCASE("radius-1 ball walk revisits the center between arms") {
        Subgraph s = combinatorial_ball(g, c, 1);
        CHECK(s.vertex_count() == 5);
        CHECK(s.edge_count() == 4);
        CHECK(s.face_count() == 0);
        BoundaryWalk w = boundary_walk(s);
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 8);
        auto seq = w.cycle_vertices(w.cycles[0]);
        CHECK(static_cast<int>(std::count(seq.begin(), seq.end(), c)) == 4);
        CHECK(w.vertex_set().size() == 5);
    }

    SUBCASE("radius-2 ball") {
        Subgraph s = combinatorial_ball(g, c, 2);
        CHECK(s.vertex_count() == 13);
        CHECK(s.edge_count() == 16);
        CHECK(s.face_count() == 4);
        CHECK(s.euler_characteristic() == 1);
        BoundaryWalk w = boundary_walk(s);
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 16);
    }

    SUBCASE("balls require complete neighborhoods") {
        CHECK_THROWS_AS(combinatorial_ball(g, c, 4), UnsafeSubgraph);
        CHECK_THROWS_AS(boundary_walk(Subgraph::single_vertex(g, grid_vertex(9, 0, 0))),
                        UnsafeSubgraph);
    }
}

TEST_CASE("walks on the pendant-bridge-hole region") {
    PlaneGraph g = make_pendant_hole_host();
    Subgraph s = pendant_hole_subgraph(g);
    CHECK(s.vertex_count() == 21);
    CHECK(s.edge_count() == 27);
    CHECK(s.face_count() == 6);
    CHECK(s.euler_characteristic() == 0);
    CHECK(s.connected());

    SUBCASE("outer boundary walk doubles pendants and splits at the pinch") {
        BoundaryWalk w = boundary_walk(s);
        REQUIRE(w.cycle_count() == 2);
        CHECK(sorted_cycle_lengths(w) == std::vector<int>{4, 24});
        for (const auto& cyc : w.cycles) {
            auto seq = w.cycle_vertices(cyc);
            if (cyc.length() == 24)
                CHECK(cyclic_equal(seq, pendant_hole_rim()));
            else
                CHECK(cyclic_equal(seq, {15, 18, 19, 20}));
        }
        CHECK(w.vertex_set().size() == 21);
    }

    SUBCASE("inner boundary walk splits into one walk per interior component") {
        BoundaryWalk w = inner_boundary_walk(s);
        CHECK_FALSE(w.empty_face_set);
        REQUIRE(w.cycle_count() == 3);
        CHECK(sorted_cycle_lengths(w) == std::vector<int>{4, 6, 10});
        for (const auto& cyc : w.cycles) {
            auto seq = w.cycle_vertices(cyc);
            if (cyc.length() == 6)
                CHECK(cyclic_equal(seq, {0, 1, 2, 3, 7, 12}));
            else if (cyc.length() == 4)
                CHECK(cyclic_equal(seq, {8, 9, 10, 11}));
            else
                CHECK(cyclic_equal(seq, {0, 13, 14, 15, 18, 19, 20, 15, 16, 17}));
        }
    }

    SUBCASE("interior, depth and Euler characteristics") {
        CHECK(interior(s).empty());
        CHECK(interior_and_depth(s).second == 0);
        auto [chi, chi_int] = euler_characteristics(s);
        CHECK(chi == 0);
        CHECK(chi_int == 3);

        auto comps = interior_components(s);
        std::vector<int> sizes;
        for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 1, 4});
    }

    SUBCASE("hole filling absorbs the diamond") {
        Subgraph filled = fill_holes(s);
        CHECK(filled.vertex_count() == 21);
        CHECK(filled.edge_count() == 27);
        CHECK(filled.face_count() == 7);
        CHECK(filled.euler_characteristic() == 1);
        CHECK(fill_holes(filled) == filled);
    }

    SUBCASE("validate catches a broken closure") {
        Subgraph broken = s;
        broken.eset.erase(broken.eset.begin());
        CHECK_THROWS_AS(broken.validate(), Error);
    }
}

TEST_CASE("walks on the dumbbell region") {
    PlaneGraph g = make_dumbbell_host();
    Subgraph s = dumbbell_subgraph(g);
    CHECK(s.vertex_count() == 18);
    CHECK(s.edge_count() == 26);
    CHECK(s.face_count() == 9);
    CHECK(s.euler_characteristic() == 1);

    BoundaryWalk outer = boundary_walk(s);
    REQUIRE(outer.cycle_count() == 1);
    CHECK(outer.cycles[0].length() == 16);

    BoundaryWalk inner = inner_boundary_walk(s);
    REQUIRE(inner.cycle_count() == 1);
    CHECK(inner.cycles[0].length() == 16);
    CHECK(inner.vertex_set() == outer.vertex_set());

    auto [chi, chi_int] = euler_characteristics(s);
    CHECK(chi == 1);
    CHECK(chi_int == 1);

    auto [sm, depth] = interior_and_depth(s);
    CHECK(sm.vertex_count() == 2);
    CHECK(sm.edge_count() == 0);
    CHECK(sm.euler_characteristic() == 2);
    CHECK(depth == 1);
    CHECK(sm.has_vertex(grid_vertex(kDumbbellGridW, 2, 2)));
    CHECK(sm.has_vertex(grid_vertex(kDumbbellGridW, 5, 2)));

    BoundaryWalk inner_walk_of_core = boundary_walk(sm);
    CHECK(inner_walk_of_core.cycle_count() == 2);
}

TEST_CASE("annulus of squares has genus-style characteristics") {
    PlaneGraph g = grid_patch(8, 8);
    std::vector<int> squares;
    for (int x = 2; x <= 4; ++x)
        for (int y = 2; y <= 4; ++y)
            if (!(x == 3 && y == 3)) squares.push_back(grid_square(g, 8, x, y));
    Subgraph s = Subgraph::from_faces(g, squares);
    CHECK(s.vertex_count() == 16);
    CHECK(s.edge_count() == 24);
    CHECK(s.face_count() == 8);
    CHECK(s.euler_characteristic() == 0);

    BoundaryWalk w = boundary_walk(s);
    CHECK(w.cycle_count() == 2);
    CHECK(sorted_cycle_lengths(w) == std::vector<int>{4, 12});

    auto [chi, chi_int] = euler_characteristics(s);
    CHECK(chi == 0);
    CHECK(chi_int == 0);

    Subgraph filled = fill_holes(s);
    CHECK(filled.vertex_count() == 16);
    CHECK(filled.edge_count() == 24);
    CHECK(filled.face_count() == 9);
    CHECK(filled.euler_characteristic() == 1);
}

TEST_CASE("face closure grows quasi-balls") {
    PlaneGraph g = grid_patch(9, 9);
    const int c = grid_vertex(9, 4, 4);

    Subgraph v0 = Subgraph::single_vertex(g, c);
    Subgraph q1 = face_closure(v0);
    CHECK(q1.vertex_count() == 9);
    CHECK(q1.edge_count() == 12);
    CHECK(q1.face_count() == 4);

    Subgraph q2 = face_closure(q1);
    CHECK(q2.face_count() == 16);
    CHECK(q2.vertex_count() == 25);

    // The distance ball is contained in the quasi-ball of the same index.
    Subgraph b1 = combinatorial_ball(g, c, 1);
    Subgraph q1b = face_closure(Subgraph::single_vertex(g, c));
    CHECK(std::includes(q1b.vset.begin(), q1b.vset.end(), b1.vset.begin(), b1.vset.end()));
    Subgraph closure_b1 = face_closure(b1);
    CHECK(closure_b1.face_count() == 12);
    CHECK(closure_b1.vertex_count() == 21);
    CHECK(closure_b1.edge_count() == 32);
    Subgraph b2 = combinatorial_ball(g, c, 2);
    CHECK(std::includes(closure_b1.vset.begin(), closure_b1.vset.end(), b2.vset.begin(),
                        b2.vset.end()));
}

TEST_CASE("outer layer walk rings a region counterclockwise") {
    PlaneGraph g = grid_patch(9, 9);
    const int c = grid_vertex(9, 4, 4);

    SUBCASE("around a single vertex") {
        BoundaryWalk w = outer_layer_walk(Subgraph::single_vertex(g, c));
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 8);
        auto id = [&](int x, int y) { return grid_vertex(9, x, y); };
        CHECK(cyclic_equal(w.cycle_vertices(w.cycles[0]),
                           {id(5, 4), id(5, 5), id(4, 5), id(3, 5), id(3, 4), id(3, 3),
                            id(4, 3), id(5, 3)}));
    }

    SUBCASE("around a single face") {
        Subgraph b = Subgraph::from_faces(g, {grid_square(g, 9, 4, 4)});
        BoundaryWalk w = outer_layer_walk(b);
        REQUIRE(w.cycle_count() == 1);
        CHECK(w.cycles[0].length() == 12);
        CHECK(w.vertex_set().size() == 12);
    }

    SUBCASE("needs a safe closure and a nonempty complement") {
        CHECK_THROWS_AS(outer_layer_walk(Subgraph::single_vertex(g, grid_vertex(9, 1, 1))),
                        UnsafeSubgraph);
        PlaneGraph cube = make_cube();
        std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
        CHECK_THROWS_AS(outer_layer_walk(Subgraph::induced(cube, all)), UnsafeSubgraph);
    }
}

TEST_CASE("edge and vertex boundaries of lattice balls") {
    PlaneGraph g = grid_patch(9, 9);
    const int c = grid_vertex(9, 4, 4);

    Boundaries b1 = edge_and_vertex_boundaries(combinatorial_ball(g, c, 1));
    CHECK(b1.boundary_edges.size() == 12);
    CHECK(b1.d0.size() == 4);
    CHECK(b1.d1.size() == 8);

    Boundaries b2 = edge_and_vertex_boundaries(combinatorial_ball(g, c, 2));
    CHECK(b2.boundary_edges.size() == 20);
    CHECK(b2.d0.size() == 8);
    CHECK(b2.d1.size() == 12);
}

TEST_CASE("face graph drops material not touching a face") {
    PlaneGraph g = make_pendant_hole_host();
    Subgraph s = pendant_hole_subgraph(g);
    Subgraph fg = s.face_graph();
    CHECK(fg.vertex_count() == 18);
    CHECK(fg.edge_count() == 23);
    CHECK(fg.face_count() == 6);
    CHECK_FALSE(fg.has_vertex(4));
    CHECK_FALSE(fg.has_vertex(5));
    CHECK_FALSE(fg.has_vertex(6));
}

TEST_CASE("subgraph validate rejects the outer face") {
    PlaneGraph g = grid_patch(5, 5);
    Subgraph s;
    s.host = &g;
    s.fset = {g.outer_face()};
    for (int v = 0; v < g.vertex_count(); ++v) s.vset.push_back(v);
    for (int e = 0; e < g.edge_count(); ++e) s.eset.push_back(e);
    CHECK_THROWS_AS(s.validate(), Error);
}
