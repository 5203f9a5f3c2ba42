#ifndef POLYDIAM_GRAPH_HPP
#define POLYDIAM_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polydiam/bounds.hpp"
#include "polydiam/vertex_enum.hpp"

namespace polydiam {

/**
 * The vertex-edge graph of a polyhedron: vertices are extreme points, an
 * edge is a bounded 1-dimensional face. Two vertices are adjacent iff the
 * normals of their common active set have rank exactly d-1 (correct also
 * for non-simple polytopes, where an edge can lie on more than d-1
 * facets). Immutable after build.
 */
struct PolytopeGraph {
    int dim = 0;
    int num_rows = 0;
    int num_irredundant = 0;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    int num_vertices() const { return static_cast<int>(adjacency.size()); }
    int num_edges() const;
    bool adjacent(int a, int b) const;
};

PolytopeGraph build_graph(const Enumeration& e, const HPolyhedron& p);

/// Same build from the incidence bits alone (they carry the active sets,
/// which is all the rank test needs).
PolytopeGraph build_graph(const IncidenceMatrix& incidence, const HPolyhedron& p);

/// Exact edge-count distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const PolytopeGraph& g, int source);

/// BFS shortest path source -> target as vertex ids, choosing the smallest
/// neighbor id at every step so certificates are reproducible. Empty when
/// unreachable.
std::vector<int> bfs_path(const PolytopeGraph& g, int source, int target);

struct DiameterReport {
    bool connected = true;
    std::optional<int> diameter;           // absent means unbounded (disconnected graph)
    std::pair<int, int> witness{-1, -1};
    std::vector<int> eccentricities;
    int dim = 0;
    int num_rows = 0;
    int num_irredundant = 0;
    int num_vertices = 0;
    int num_edges = 0;

    ComparisonBounds bounds;               // evaluated at (dim, num_irredundant)
    long double quasipoly = 0.0L;
    std::optional<bool> hirsch_holds;      // reported, not asserted
    std::optional<bool> quasipoly_holds;
};

/// All-pairs diameter via BFS from every vertex, with every bound formula
/// evaluated at (d, irredundant facet count). Disconnected graphs report an
/// unbounded diameter and not-applicable checks instead of failing.
DiameterReport diameter(const PolytopeGraph& g);

}  // namespace polydiam

#endif
