#ifndef POLYDIAM_KK_PATH_HPP
#define POLYDIAM_KK_PATH_HPP

#include <memory>
#include <string>
#include <vector>

#include "polydiam/bounds.hpp"
#include "polydiam/pipeline.hpp"

namespace polydiam {

/// Union of active sets over all vertices at graph distance <= k from v.
FacetSet ball_facets(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int k);

/**
 * The largest k such that the radius-k ball around v touches at most
 * floor(n/2) facets; 0 when even the radius-0 or radius-1 ball exceeds the
 * threshold (the degenerate boundary keeps the pigeonhole step usable on
 * small instances, which still reach a common facet within k+1 = 1 steps).
 */
int expansion_radius(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int n);

struct CommonFacet {
    int facet = -1;
    int radius_source = 0, radius_target = 0;  // expansion radii of v and u
    std::vector<int> path_source;              // v ... nearest vertex on facet
    std::vector<int> path_target;              // u ... nearest vertex on facet
};

/**
 * A facet reachable from v within radius_source+1 steps and from u within
 * radius_target+1 steps. The balls of those radii each touch more than
 * floor(n/2) facets, so their facet sets intersect; the lowest common
 * index is chosen, entry vertices are the nearest incident vertices
 * (smallest id on ties), and paths follow smallest-neighbor BFS trees.
 * NoCommonFacetError here means an upstream bug, not bad input.
 */
CommonFacet find_common_facet(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int u,
                              int n);

/**
 * Certificate of one recursive path construction. `assembled` is a walk in
 * the level's graph from source to target; every recursive level records
 * its facet, entry paths, and the facet-local inner trace, and certifies
 *
 *   length <= f(d-1, n-1) + 2 f(d, floor(n/2)) + 2   and   length <= f(d, n)
 *
 * with n the level's irredundant facet count and f the recurrence table.
 */
struct KKTrace {
    enum class Kind { TrivialEqual, BaseBfs, Recursive };

    Kind kind = Kind::TrivialEqual;
    int dim = 0;
    int num_rows = 0;
    int num_irredundant = 0;
    int source = -1, target = -1;

    // Recursive levels only.
    int radius_source = -1, radius_target = -1;
    int facet = -1;
    std::vector<int> path_source, path_target;  // entry segments at this level
    int entry_source = -1, entry_target = -1;
    std::unique_ptr<KKTrace> inner;             // ids local to the facet polyhedron
    std::vector<int> inner_path_lifted;         // inner walk in this level's ids

    std::vector<int> assembled;                 // walk source..target, this level's ids
    Integer level_bound;                        // f(d-1,n-1) + 2 f(d,n/2) + 2
    Integer total_bound;                        // f(d,n)

    int length() const { return assembled.empty() ? 0 : static_cast<int>(assembled.size()) - 1; }
};

/**
 * Recursive path construction from v to u. Base cases: v == u; d <= 2,
 * vertex count <= 2, or n <= d+2 fall back to a direct BFS shortest path.
 * Otherwise: walk to a common facet from both ends, descend into the facet
 * sub-polyhedron through its coordinate map, recurse, lift the inner walk
 * back, and concatenate. Every level is validated edge by edge against the
 * graph and against the certified length bounds; a violation raises
 * InternalInvariantError (a bug, never bad input).
 */
KKTrace kk_path(PipelineCache& cache, const HPolyhedron& p, int v, int u);

struct RestrictedPolyhedron {
    HPolyhedron poly;
    std::vector<int> kept_rows;  // ambient row index per kept row
};

/**
 * The polyhedron obtained by keeping exactly the constraints whose facets
 * the radius-k_v ball around v touches (at most floor(n/2) of them when
 * k_v came from expansion_radius). Throws ResultNotPointedError when the
 * kept normals lose full rank.
 */
RestrictedPolyhedron restricted_polyhedron(const HPolyhedron& p, const IncidenceMatrix& incidence,
                                           int v, int k_v);

struct QLemmaReport {
    int vertex = -1;
    int radius = 0;             // k_v
    bool skipped = false;
    std::string skip_reason;
    int q_rows = 0;
    std::vector<int> checked;         // vertices at distance exactly k_v
    std::vector<int> failures;        // distance changed in the restriction
    std::vector<int> not_comparable;  // no counterpart among Q's vertices
    bool radius_bound_ok = false;     // k_v <= f(d, floor(n/2))

    bool passed() const { return !skipped && failures.empty(); }
};

/**
 * Executable check of the restriction lemma: every vertex at distance
 * exactly k_v from v keeps that exact distance in the graph of the
 * restricted polyhedron, and k_v <= f(d, floor(n/2)). Skipped with a
 * reason when the restriction loses pointedness; a vertex with no
 * counterpart in the restriction is reported as not comparable, never
 * counted as a pass.
 */
QLemmaReport verify_q_lemma(PipelineCache& cache, const HPolyhedron& p, int v);

}  // namespace polydiam

#endif
