#include <doctest.h>

#include <map>

#include "polydiam/generators.hpp"
#include "polydiam/pipeline.hpp"

using namespace polydiam;

namespace {

PolytopeGraph graph_of(const HPolyhedron& p) {
    return build_graph(enumerate_vertices(p), p);
}

// Hamming weight of the coordinate difference; the structural oracle for
// cube adjacency, independent of the rank-based edge test.
int coords_differing(const RVector& a, const RVector& b) {
    int diff = 0;
    for (int j = 0; j < a.size(); ++j)
        if (a(j) != b(j)) ++diff;
    return diff;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("the square's graph is a 4-cycle") {
    PolytopeGraph g = graph_of(gen_cube(2));
    REQUIRE(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    for (const auto& nbrs : g.adjacency) CHECK(nbrs.size() == 2);
    DiameterReport r = diameter(g);
    REQUIRE(r.diameter);
    CHECK(*r.diameter == 2);
}

TEST_CASE("the 3-cube's graph is 3-regular with 12 edges and Hamming adjacency") {
    HPolyhedron cube = gen_cube(3);
    Enumeration e = enumerate_vertices(cube);
    PolytopeGraph g = build_graph(e, cube);
    REQUIRE(g.num_vertices() == 8);
    CHECK(g.num_edges() == 12);
    for (int a = 0; a < 8; ++a) {
        CHECK(g.adjacency[a].size() == 3);
        for (int b = 0; b < 8; ++b) {
            if (a == b) continue;
            bool expect = coords_differing(e.vertices[a].coords, e.vertices[b].coords) == 1;
            CHECK(g.adjacent(a, b) == expect);
        }
    }
}

TEST_CASE("simplex graphs are complete") {
    for (int d = 2; d <= 5; ++d) {
        PolytopeGraph g = graph_of(gen_simplex(d));
        REQUIRE(g.num_vertices() == d + 1);
        CHECK(g.num_edges() == d * (d + 1) / 2);
        std::vector<int> dist = bfs_distances(g, 0);
        for (int w = 1; w <= d; ++w) CHECK(dist[w] == 1);
        DiameterReport r = diameter(g);
        CHECK(*r.diameter == 1);
    }
}

TEST_CASE("BFS layer sizes from a cube corner are binomial") {
    PolytopeGraph g = graph_of(gen_cube(3));
    std::vector<int> dist = bfs_distances(g, 0);
    std::map<int, int> layer;
    for (int v = 0; v < g.num_vertices(); ++v) ++layer[dist[v]];
    CHECK(layer[0] == 1);
    CHECK(layer[1] == 3);
    CHECK(layer[2] == 3);
    CHECK(layer[3] == 1);
}

TEST_CASE("single-vertex cone has the trivial distance vector") {
    RMatrix normals(2, 2);
    RVector offsets = RVector::Zero(2);
    normals.row(0) << -1, 0;
    normals.row(1) << 0, -1;
    PolytopeGraph g = graph_of(HPolyhedron(normals, offsets));
    REQUIRE(g.num_vertices() == 1);
    CHECK(bfs_distances(g, 0) == std::vector<int>{0});
    DiameterReport r = diameter(g);
    CHECK(*r.diameter == 0);
    CHECK(r.witness == std::pair<int, int>{0, 0});
}

TEST_CASE("cube diameters equal the dimension") {
    for (int d = 2; d <= 5; ++d) {
        DiameterReport r = diameter(graph_of(gen_cube(d)));
        REQUIRE(r.diameter);
        CHECK(*r.diameter == d);
        CHECK(r.num_irredundant == 2 * d);
    }
}

TEST_CASE("polygon diameters are floor(n/2)") {
    for (int n : {3, 4, 5, 8, 9, 13}) {
        DiameterReport r = diameter(graph_of(gen_polygon(n)));
        REQUIRE(r.diameter);
        CHECK(*r.diameter == n / 2);
        CHECK(r.num_vertices == n);
    }
}

TEST_CASE("product of polygons adds diameters") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 4}, {5, 7}}) {
        PolytopeGraph g = graph_of(gen_product(gen_polygon(p), gen_polygon(q)));
        DiameterReport r = diameter(g);
        REQUIRE(r.diameter);
        CHECK(*r.diameter == p / 2 + q / 2);
        CHECK(g.dim == 4);
        CHECK(g.num_rows == p + q);
        // Cartesian product structure: degree is the sum of factor degrees.
        for (const auto& nbrs : g.adjacency) CHECK(nbrs.size() == 4);
    }
}

TEST_CASE("cube and cross-polytope are eccentricity-uniform") {
    for (const HPolyhedron& p : {gen_cube(4), gen_cross_polytope(4)}) {
        DiameterReport r = diameter(graph_of(p));
        for (int ecc : r.eccentricities) CHECK(ecc == r.eccentricities[0]);
    }
    DiameterReport cross = diameter(graph_of(gen_cross_polytope(3)));
    CHECK(*cross.diameter == 2);
}

TEST_CASE("bound checks are filled against the irredundant count") {
    DiameterReport r = diameter(graph_of(gen_cube(3)));
    CHECK(r.bounds.hirsch == 3);
    REQUIRE(r.hirsch_holds);
    CHECK(*r.hirsch_holds);
    REQUIRE(r.quasipoly_holds);
    CHECK(*r.quasipoly_holds);
    REQUIRE(r.bounds.klee_walkup_lower);
    CHECK(*r.bounds.klee_walkup_lower == 3);
}

TEST_CASE("disconnected graphs report an unbounded diameter") {
    PolytopeGraph g;
    g.dim = 2;
    g.num_rows = 4;
    g.num_irredundant = 4;
    g.adjacency = {{1}, {0}, {3}, {2}};  // two separate edges
    DiameterReport r = diameter(g);
    CHECK(!r.connected);
    CHECK(!r.diameter);
    CHECK(!r.hirsch_holds);
    CHECK(!r.quasipoly_holds);
}

TEST_CASE("facet subgraphs are isomorphic to the facet sub-polyhedron graphs") {
    for (const HPolyhedron& p : {gen_cube(3), gen_simplex(3), gen_cross_polytope(3),
                                 gen_random_tangent(3, 8, 3)}) {
        Enumeration e = enumerate_vertices(p);
        PolytopeGraph g = build_graph(e, p);
        std::vector<int> redundant = redundant_rows(p, e);
        for (int f = 0; f < p.num_constraints(); ++f) {
            if (std::find(redundant.begin(), redundant.end(), f) != redundant.end())
                continue;  // a redundant row supports no facet
            FacetSubpolyhedron sub = facet_subpolyhedron(p, f);
            Enumeration se = enumerate_vertices(sub.poly);
            PolytopeGraph sg = build_graph(se, sub.poly);

            // Match facet vertices to ambient vertices through the map.
            std::map<int, int> to_ambient;
            std::map<RVector, int, RVectorLess> ambient_index;
            for (const Vertex& v : e.vertices) ambient_index[v.coords] = v.id;
            for (const Vertex& sv : se.vertices) {
                auto it = ambient_index.find(sub.map.lift(sv.coords));
                REQUIRE(it != ambient_index.end());
                to_ambient[sv.id] = it->second;
            }
            // Edges correspond exactly in both directions.
            for (int a = 0; a < sg.num_vertices(); ++a)
                for (int b = a + 1; b < sg.num_vertices(); ++b)
                    CHECK(sg.adjacent(a, b) == g.adjacent(to_ambient[a], to_ambient[b]));
        }
    }
}

TEST_CASE("bfs_path follows smallest-id parents and realizes the BFS distance") {
    PolytopeGraph g = graph_of(gen_cube(3));
    std::vector<int> dist = bfs_distances(g, 0);
    for (int target = 0; target < g.num_vertices(); ++target) {
        std::vector<int> path = bfs_path(g, 0, target);
        REQUIRE(!path.empty());
        CHECK(path.front() == 0);
        CHECK(path.back() == target);
        CHECK(static_cast<int>(path.size()) - 1 == dist[target]);
        for (size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
    }
    // Antipodal corner of the 3-cube: the smallest-parent rule fixes the path.
    std::vector<int> path = bfs_path(g, 0, 7);
    CHECK(path == std::vector<int>{0, 1, 3, 7});
}

}  // TEST_SUITE
