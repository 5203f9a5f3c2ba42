#ifndef POLYDIAM_VERTEX_ENUM_HPP
#define POLYDIAM_VERTEX_ENUM_HPP

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polydiam/hrep.hpp"

namespace polydiam {

using FacetSet = boost::dynamic_bitset<>;

/// An extreme point: exact coordinates plus the full set of tight
/// constraints (all of them, not just one defining d-subset).
struct Vertex {
    int id = 0;
    RVector coords;
    FacetSet active_set;
};

/// Vertex-major tightness bits, one bit per constraint row.
struct IncidenceMatrix {
    int num_facets = 0;
    std::vector<FacetSet> rows;
};

struct EnumOptions {
    /// 0 = use POLYDIAM_THREADS or hardware concurrency.
    int threads = 0;
    /// Force the plain rational kernel even where the fixed-width exact
    /// kernel applies (used by tests to cross-check the two routes).
    bool force_rational = false;
};

struct Enumeration {
    std::vector<Vertex> vertices;
    IncidenceMatrix incidence;
};

/**
 * Enumerate every extreme point of P exactly once by brute force over the
 * d-subsets of constraints: solve each square subsystem, keep feasible
 * solutions, merge coincident points, and record full active sets.
 * Vertices are sorted lexicographically by coordinates with ids assigned
 * in that order, so output is byte-identical for any parallelism degree.
 *
 * Two exact evaluation kernels sit behind the same subset semantics: a
 * plain rational one, and an int64 fraction-free one used when an a
 * priori Hadamard bound proves that no intermediate value can overflow
 * (small-coefficient instances with large n, where the rational kernel
 * would be far too slow). Results are identical; tests cross-check.
 *
 * Throws NotPointedError when the constraint normals have rank < d and
 * EmptyPolyhedronError when no feasible basic solution exists.
 */
Enumeration enumerate_vertices(const HPolyhedron& p, const EnumOptions& opts = {});

/**
 * Constraints tight at no vertex. For pointed inputs (the only kind that
 * reaches this after enumeration) a non-redundant constraint supports a
 * nonempty face, and every nonempty face of a pointed polyhedron contains
 * a vertex, so "tight at no vertex" is exactly the redundant set; rows
 * bounding unbounded directions of some vertex cone are always tight at
 * that vertex. Reported so bound formulas can use the irredundant count.
 */
std::vector<int> redundant_rows(const HPolyhedron& p, const Enumeration& e);

/// Overload on the incidence bits alone.
std::vector<int> redundant_rows(const HPolyhedron& p, const IncidenceMatrix& incidence);

/// Effective thread count: request > 0 wins, then POLYDIAM_THREADS, then
/// hardware concurrency.
int resolve_threads(int requested);

}  // namespace polydiam

#endif
