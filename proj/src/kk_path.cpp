#include "polydiam/kk_path.hpp"

#include <deque>

#include "polydiam/linalg.hpp"

namespace polydiam {

namespace {

void require_vertex(const PolytopeGraph& g, int v, const char* role) {
    if (v < 0 || v >= g.num_vertices())
        throw std::invalid_argument(std::string(role) + " vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(g.num_vertices()) + ")");
}

// Nearest vertex incident to `facet` (smallest id among nearest) and the
// smallest-parent BFS path to it.
std::vector<int> path_to_facet(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v,
                               int facet) {
    std::vector<int> dist = bfs_distances(g, v);
    int best = -1;
    for (int w = 0; w < g.num_vertices(); ++w) {
        if (dist[w] < 0 || !incidence.rows[w].test(facet)) continue;
        if (best < 0 || dist[w] < dist[best]) best = w;
    }
    if (best < 0)
        throw InternalInvariantError("facet " + std::to_string(facet) +
                                     " has no vertex reachable from " + std::to_string(v));
    return bfs_path(g, v, best);
}

}  // namespace

FacetSet ball_facets(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int k) {
    require_vertex(g, v, "ball center");
    if (k < 0) throw std::invalid_argument("ball radius must be >= 0");
    FacetSet facets(incidence.num_facets);
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    facets |= incidence.rows[v];
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        if (dist[w] == k) continue;
        for (int x : g.adjacency[w]) {
            if (dist[x] < 0) {
                dist[x] = dist[w] + 1;
                facets |= incidence.rows[x];
                queue.push_back(x);
            }
        }
    }
    return facets;
}

int expansion_radius(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int n) {
    require_vertex(g, v, "expansion");
    const size_t threshold = static_cast<size_t>(n / 2);

    // One BFS, accumulating facets layer by layer. The facet union can stall
    // on one layer and grow on a later one, so only the exhausted component
    // ends the scan early.
    std::vector<int> dist = bfs_distances(g, v);
    int reach = 0;
    for (int w = 0; w < g.num_vertices(); ++w) reach = std::max(reach, dist[w]);

    FacetSet acc(incidence.num_facets);
    int best = 0;
    for (int k = 0; k <= reach; ++k) {
        for (int w = 0; w < g.num_vertices(); ++w)
            if (dist[w] == k) acc |= incidence.rows[w];
        if (acc.count() > threshold) return best;
        best = k;
    }
    return best;  // the whole component stays within the threshold
}

CommonFacet find_common_facet(const PolytopeGraph& g, const IncidenceMatrix& incidence, int v, int u,
                              int n) {
    require_vertex(g, v, "source");
    require_vertex(g, u, "target");
    if (v == u) throw std::invalid_argument("find_common_facet needs distinct vertices");

    CommonFacet out;
    out.radius_source = expansion_radius(g, incidence, v, n);
    out.radius_target = expansion_radius(g, incidence, u, n);
    FacetSet common = ball_facets(g, incidence, v, out.radius_source + 1) &
                      ball_facets(g, incidence, u, out.radius_target + 1);
    if (common.none())
        throw NoCommonFacetError("ball facet sets of " + std::to_string(v) + " and " +
                                 std::to_string(u) + " do not intersect");
    out.facet = static_cast<int>(common.find_first());
    out.path_source = path_to_facet(g, incidence, v, out.facet);
    out.path_target = path_to_facet(g, incidence, u, out.facet);
    if (static_cast<int>(out.path_source.size()) - 1 > out.radius_source + 1 ||
        static_cast<int>(out.path_target.size()) - 1 > out.radius_target + 1)
        throw InternalInvariantError("entry path exceeds its certified radius bound");
    return out;
}

RestrictedPolyhedron restricted_polyhedron(const HPolyhedron& p, const IncidenceMatrix& incidence,
                                           int v, int k_v) {
    if (v < 0 || v >= static_cast<int>(incidence.rows.size()))
        throw std::invalid_argument("restriction center out of range");
    PolytopeGraph g = build_graph(incidence, p);
    FacetSet keep = ball_facets(g, incidence, v, k_v);

    std::vector<int> kept;
    for (size_t i = keep.find_first(); i != FacetSet::npos; i = keep.find_next(i))
        kept.push_back(static_cast<int>(i));

    RMatrix normals(static_cast<int>(kept.size()), p.dim());
    RVector offsets(static_cast<int>(kept.size()));
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        normals.row(i) = p.normals().row(kept[i]);
        offsets(i) = p.offset(kept[i]);
    }
    if (rank(normals) < p.dim())
        throw ResultNotPointedError("restriction around vertex " + std::to_string(v) +
                                    " keeps only rank " + std::to_string(rank(normals)) +
                                    " normals and is not pointed");
    HPolyhedron q(std::move(normals), std::move(offsets));
    return RestrictedPolyhedron{std::move(q), std::move(kept)};
}

KKTrace kk_path(PipelineCache& cache, const HPolyhedron& p, int v, int u) {
    auto data = cache.get(p);
    const PolytopeGraph& g = data->graph;
    const IncidenceMatrix& incidence = data->enumeration.incidence;
    require_vertex(g, v, "source");
    require_vertex(g, u, "target");

    KKTrace trace;
    trace.dim = p.dim();
    trace.num_rows = p.num_constraints();
    trace.num_irredundant = data->num_irredundant;
    trace.source = v;
    trace.target = u;
    trace.total_bound = kk_recurrence(trace.dim, trace.num_irredundant);
    trace.level_bound = trace.total_bound;

    if (v == u) {
        trace.kind = KKTrace::Kind::TrivialEqual;
        trace.assembled = {v};
        return trace;
    }

    if (trace.dim <= 2 || g.num_vertices() <= 2 || trace.num_irredundant <= trace.dim + 2) {
        trace.kind = KKTrace::Kind::BaseBfs;
        trace.assembled = bfs_path(g, v, u);
        if (trace.assembled.empty())
            throw InputError("vertices " + std::to_string(v) + " and " + std::to_string(u) +
                             " are not connected in the graph");
    } else {
        trace.kind = KKTrace::Kind::Recursive;
        if (bfs_distances(g, v)[u] < 0)
            throw InputError("vertices " + std::to_string(v) + " and " + std::to_string(u) +
                             " are not connected in the graph");

        CommonFacet cf = find_common_facet(g, incidence, v, u, trace.num_irredundant);
        trace.radius_source = cf.radius_source;
        trace.radius_target = cf.radius_target;
        trace.facet = cf.facet;
        trace.path_source = cf.path_source;
        trace.path_target = cf.path_target;
        trace.entry_source = cf.path_source.back();
        trace.entry_target = cf.path_target.back();

        FacetSubpolyhedron sub = facet_subpolyhedron(p, cf.facet);
        auto sub_data = cache.get(sub.poly);
        const int inner_v = sub_data->find_vertex(sub.map.project(data->coords(trace.entry_source)));
        const int inner_u = sub_data->find_vertex(sub.map.project(data->coords(trace.entry_target)));
        if (inner_v < 0 || inner_u < 0)
            throw InternalInvariantError("entry vertex has no counterpart in the facet sub-polyhedron");

        trace.inner = std::make_unique<KKTrace>(kk_path(cache, sub.poly, inner_v, inner_u));

        trace.inner_path_lifted.reserve(trace.inner->assembled.size());
        for (int id : trace.inner->assembled) {
            int ambient = data->find_vertex(sub.map.lift(sub_data->coords(id)));
            if (ambient < 0)
                throw InternalInvariantError("facet vertex lifts to a point that is not a vertex of the parent");
            trace.inner_path_lifted.push_back(ambient);
        }
        if (trace.inner_path_lifted.front() != trace.entry_source ||
            trace.inner_path_lifted.back() != trace.entry_target)
            throw InternalInvariantError("lifted inner walk does not join the entry vertices");

        trace.assembled = trace.path_source;
        trace.assembled.insert(trace.assembled.end(), trace.inner_path_lifted.begin() + 1,
                               trace.inner_path_lifted.end());
        for (auto it = trace.path_target.rbegin() + 1; it != trace.path_target.rend(); ++it)
            trace.assembled.push_back(*it);

        const Integer inner_term = kk_recurrence(trace.dim - 1, trace.num_irredundant - 1);
        const Integer half_term = kk_recurrence(trace.dim, trace.num_irredundant / 2);
        trace.level_bound = inner_term + 2 * half_term + 2;
    }

    if (trace.assembled.front() != v || trace.assembled.back() != u)
        throw InternalInvariantError("assembled walk does not join the requested endpoints");
    for (size_t i = 0; i + 1 < trace.assembled.size(); ++i)
        if (!g.adjacent(trace.assembled[i], trace.assembled[i + 1]))
            throw InternalInvariantError("assembled walk contains a non-edge at step " + std::to_string(i));
    if (Integer(trace.length()) > trace.level_bound || Integer(trace.length()) > trace.total_bound)
        throw InternalInvariantError("assembled walk exceeds its certified length bound");
    return trace;
}

QLemmaReport verify_q_lemma(PipelineCache& cache, const HPolyhedron& p, int v) {
    auto data = cache.get(p);
    const PolytopeGraph& g = data->graph;
    const IncidenceMatrix& incidence = data->enumeration.incidence;
    require_vertex(g, v, "lemma");

    QLemmaReport report;
    report.vertex = v;
    report.radius = expansion_radius(g, incidence, v, data->num_irredundant);
    report.radius_bound_ok =
        Integer(report.radius) <= kk_recurrence(p.dim(), data->num_irredundant / 2);

    std::shared_ptr<const PolyData> q_data;
    try {
        RestrictedPolyhedron q = restricted_polyhedron(p, incidence, v, report.radius);
        report.q_rows = static_cast<int>(q.kept_rows.size());
        q_data = cache.get(q.poly);
    } catch (const ResultNotPointedError& e) {
        report.skipped = true;
        report.skip_reason = e.what();
        return report;
    } catch (const InputError& e) {
        report.skipped = true;
        report.skip_reason = std::string("restriction could not be enumerated: ") + e.what();
        return report;
    }

    const int vq = q_data->find_vertex(data->coords(v));
    if (vq < 0) {
        report.skipped = true;
        report.skip_reason = "center vertex has no counterpart in the restriction";
        return report;
    }

    std::vector<int> dist_p = bfs_distances(g, v);
    std::vector<int> dist_q = bfs_distances(q_data->graph, vq);
    for (int w = 0; w < g.num_vertices(); ++w) {
        if (dist_p[w] != report.radius) continue;
        report.checked.push_back(w);
        int wq = q_data->find_vertex(data->coords(w));
        if (wq < 0) {
            report.not_comparable.push_back(w);
            continue;
        }
        if (dist_q[wq] != report.radius) report.failures.push_back(w);
    }
    return report;
}

}  // namespace polydiam
