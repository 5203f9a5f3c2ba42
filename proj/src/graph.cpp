#include "polydiam/graph.hpp"

#include <deque>

#include "polydiam/linalg.hpp"

namespace polydiam {

int PolytopeGraph::num_edges() const {
    size_t total = 0;
    for (const auto& nbrs : adjacency) total += nbrs.size();
    return static_cast<int>(total / 2);
}

bool PolytopeGraph::adjacent(int a, int b) const {
    const auto& nbrs = adjacency[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

PolytopeGraph build_graph(const Enumeration& e, const HPolyhedron& p) {
    return build_graph(e.incidence, p);
}

PolytopeGraph build_graph(const IncidenceMatrix& incidence, const HPolyhedron& p) {
    const int d = p.dim();
    const int count = static_cast<int>(incidence.rows.size());
    PolytopeGraph g;
    g.dim = d;
    g.num_rows = p.num_constraints();
    g.num_irredundant = p.num_constraints() - static_cast<int>(redundant_rows(p, incidence).size());
    g.adjacency.assign(count, {});

    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            FacetSet common = incidence.rows[a] & incidence.rows[b];
            if (static_cast<int>(common.count()) < d - 1) continue;
            RMatrix normals(common.count(), d);
            int r = 0;
            for (size_t i = common.find_first(); i != FacetSet::npos; i = common.find_next(i))
                normals.row(r++) = p.normals().row(static_cast<int>(i));
            if (rank(normals) == d - 1) {
                g.adjacency[a].push_back(b);
                g.adjacency[b].push_back(a);
            }
        }
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> bfs_distances(const PolytopeGraph& g, int source) {
    if (source < 0 || source >= g.num_vertices()) throw std::invalid_argument("BFS source out of range");
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_path(const PolytopeGraph& g, int source, int target) {
    if (source < 0 || source >= g.num_vertices() || target < 0 || target >= g.num_vertices())
        throw std::invalid_argument("BFS endpoints out of range");
    // Parent = smallest neighbor id at the previous level; since vertices are
    // scanned in increasing id order, the first parent found is the smallest.
    std::vector<int> dist(g.num_vertices(), -1), parent(g.num_vertices(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (dist[target] < 0) return {};
    std::vector<int> path;
    for (int v = target; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

DiameterReport diameter(const PolytopeGraph& g) {
    DiameterReport report;
    report.dim = g.dim;
    report.num_rows = g.num_rows;
    report.num_irredundant = g.num_irredundant;
    report.num_vertices = g.num_vertices();
    report.num_edges = g.num_edges();
    report.eccentricities.assign(g.num_vertices(), 0);

    int best = -1;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        int ecc = 0, far = v;
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (dist[w] < 0) {
                report.connected = false;
            } else if (dist[w] > ecc) {
                ecc = dist[w];
                far = w;
            }
        }
        report.eccentricities[v] = ecc;
        if (ecc > best) {
            best = ecc;
            report.witness = {v, far};
        }
    }
    if (g.num_vertices() > 0 && report.connected) {
        report.diameter = best;
        if (g.num_vertices() == 1) report.witness = {0, 0};
    }

    report.bounds = comparison_bounds(report.dim, report.num_irredundant);
    if (report.num_irredundant >= 2)
        report.quasipoly = quasipoly_bound(report.dim, report.num_irredundant);
    if (report.diameter) {
        report.hirsch_holds = Integer(*report.diameter) <= report.bounds.hirsch;
        report.quasipoly_holds =
            static_cast<long double>(*report.diameter) <= report.quasipoly;
    }
    return report;
}

}  // namespace polydiam
