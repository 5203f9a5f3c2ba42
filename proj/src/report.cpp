#include "polydiam/report.hpp"

#include <sstream>

#include "polydiam/generators.hpp"

namespace polydiam {

namespace {

Json json_or_null(const std::optional<Integer>& v) {
    return v ? json_integer(*v) : Json(nullptr);
}

Json bounds_to_json(const ComparisonBounds& bounds, long double quasipoly) {
    Json out;
    out["hirsch"] = json_integer(bounds.hirsch);
    out["klee_walkup_lower"] = json_or_null(bounds.klee_walkup_lower);
    out["barnette"] = json_or_null(bounds.barnette);
    out["larman"] = json_or_null(bounds.larman);
    out["kalai_subexp"] = bounds.kalai_subexp ? Json(static_cast<double>(*bounds.kalai_subexp)) : Json(nullptr);
    out["quasipoly"] = static_cast<double>(quasipoly);
    return out;
}

}  // namespace

Json json_integer(const Integer& value) {
    if (value >= std::numeric_limits<int64_t>::min() && value <= std::numeric_limits<int64_t>::max())
        return Json(value.convert_to<int64_t>());
    return Json(value.str());
}

Json vertices_to_json(const HPolyhedron& p, const Enumeration& e) {
    Json out;
    out["d"] = p.dim();
    out["n"] = p.num_constraints();
    Json list = Json::array();
    for (const Vertex& v : e.vertices) {
        Json item;
        item["id"] = v.id;
        Json coords = Json::array();
        for (int j = 0; j < v.coords.size(); ++j) coords.push_back(format_rational(v.coords(j)));
        item["coords"] = std::move(coords);
        Json active = Json::array();
        for (size_t i = v.active_set.find_first(); i != FacetSet::npos; i = v.active_set.find_next(i))
            active.push_back(static_cast<int>(i));
        item["active"] = std::move(active);
        list.push_back(std::move(item));
    }
    out["vertices"] = std::move(list);
    return out;
}

Json graph_to_json(const PolytopeGraph& g) {
    Json out;
    out["d"] = g.dim;
    out["n"] = g.num_rows;
    out["n_irredundant"] = g.num_irredundant;
    out["vertices"] = g.num_vertices();
    out["edges"] = g.num_edges();
    Json adj = Json::array();
    for (const auto& nbrs : g.adjacency) adj.push_back(nbrs);
    out["adjacency"] = std::move(adj);
    return out;
}

Json diameter_to_json(const DiameterReport& r) {
    Json out;
    out["d"] = r.dim;
    out["n"] = r.num_rows;
    out["n_irredundant"] = r.num_irredundant;
    out["vertices"] = r.num_vertices;
    out["edges"] = r.num_edges;
    out["connected"] = r.connected;
    out["diameter"] = r.diameter ? Json(*r.diameter) : Json("unbounded");
    out["witness"] = r.diameter ? Json::array({r.witness.first, r.witness.second}) : Json(nullptr);
    out["eccentricities"] = r.eccentricities;
    out["bounds"] = bounds_to_json(r.bounds, r.quasipoly);
    Json checks;
    checks["hirsch_holds"] = r.hirsch_holds ? Json(*r.hirsch_holds) : Json(nullptr);
    checks["quasipoly_holds"] = r.quasipoly_holds ? Json(*r.quasipoly_holds) : Json(nullptr);
    out["checks"] = std::move(checks);
    return out;
}

std::string diameter_to_csv(const DiameterReport& r, const std::string& instance_name) {
    std::ostringstream out;
    out << "instance,d,n,n_irredundant,vertices,edges,diameter,witness_a,witness_b,"
           "hirsch,klee_walkup_lower,barnette,larman,kalai_subexp,quasipoly,hirsch_holds,quasipoly_holds\n";
    auto opt_str = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
    out << instance_name << ',' << r.dim << ',' << r.num_rows << ',' << r.num_irredundant << ','
        << r.num_vertices << ',' << r.num_edges << ',';
    if (r.diameter)
        out << *r.diameter;
    else
        out << "unbounded";
    out << ',' << r.witness.first << ',' << r.witness.second << ',' << r.bounds.hirsch.str() << ','
        << opt_str(r.bounds.klee_walkup_lower) << ',' << opt_str(r.bounds.barnette) << ','
        << opt_str(r.bounds.larman) << ',';
    if (r.bounds.kalai_subexp) out << static_cast<double>(*r.bounds.kalai_subexp);
    out << ',' << static_cast<double>(r.quasipoly) << ',';
    out << (r.hirsch_holds ? (*r.hirsch_holds ? "true" : "false") : "") << ','
        << (r.quasipoly_holds ? (*r.quasipoly_holds ? "true" : "false") : "") << '\n';
    return out.str();
}

Json trace_to_json(const KKTrace& t) {
    Json out;
    switch (t.kind) {
        case KKTrace::Kind::TrivialEqual: out["kind"] = "trivial-equal"; break;
        case KKTrace::Kind::BaseBfs: out["kind"] = "base-bfs"; break;
        case KKTrace::Kind::Recursive: out["kind"] = "recursive"; break;
    }
    out["d"] = t.dim;
    out["n"] = t.num_rows;
    out["n_irredundant"] = t.num_irredundant;
    out["source"] = t.source;
    out["target"] = t.target;
    out["length"] = t.length();
    out["level_bound"] = json_integer(t.level_bound);
    out["total_bound"] = json_integer(t.total_bound);
    out["assembled"] = t.assembled;
    if (t.kind == KKTrace::Kind::Recursive) {
        out["radius_source"] = t.radius_source;
        out["radius_target"] = t.radius_target;
        out["facet"] = t.facet;
        out["path_source"] = t.path_source;
        out["path_target"] = t.path_target;
        out["entry_source"] = t.entry_source;
        out["entry_target"] = t.entry_target;
        out["inner_path_lifted"] = t.inner_path_lifted;
        out["inner"] = trace_to_json(*t.inner);  // ids local to the facet polyhedron
    }
    return out;
}

Json q_lemma_to_json(const QLemmaReport& r) {
    Json out;
    out["vertex"] = r.vertex;
    out["radius"] = r.radius;
    out["radius_bound_ok"] = r.radius_bound_ok;
    out["skipped"] = r.skipped;
    if (r.skipped) out["skip_reason"] = r.skip_reason;
    out["q_rows"] = r.q_rows;
    out["checked"] = r.checked;
    out["failures"] = r.failures;
    out["not_comparable"] = r.not_comparable;
    out["passed"] = r.passed();
    return out;
}

Json full_report(const HPolyhedron& p, const FullReportOptions& opts) {
    Json out;
    out["d"] = p.dim();
    out["n"] = p.num_constraints();

    PipelineCache cache(opts.enum_opts);
    std::shared_ptr<const PolyData> data;
    try {
        data = cache.get(p);
    } catch (const std::exception& e) {
        out["enumeration"] = {{"error", e.what()}};
        return out;
    }
    out["n_irredundant"] = data->num_irredundant;
    out["redundant_rows"] = data->redundant;
    out["vertices"] = static_cast<int>(data->enumeration.vertices.size());
    out["edges"] = data->graph.num_edges();

    DiameterReport diam = diameter(data->graph);
    out["diameter"] = diameter_to_json(diam);

    // Path certificates over all pairs, or a deterministic sample.
    try {
        const int count = data->graph.num_vertices();
        std::vector<std::pair<int, int>> pairs;
        bool sampled = false;
        if (count > opts.pair_threshold && !opts.exhaustive) {
            sampled = true;
            SplitMix64 rng(opts.pair_seed);
            while (static_cast<int>(pairs.size()) < opts.sampled_pairs) {
                int a = static_cast<int>(rng.next() % count);
                int b = static_cast<int>(rng.next() % count);
                if (a != b) pairs.emplace_back(a, b);
            }
        } else {
            for (int a = 0; a < count; ++a)
                for (int b = a + 1; b < count; ++b) pairs.emplace_back(a, b);
        }

        int max_length = 0;
        bool all_valid = true;
        Json violations = Json::array();
        for (auto [a, b] : pairs) {
            KKTrace trace = kk_path(cache, p, a, b);
            max_length = std::max(max_length, trace.length());
            const int dist = bfs_distances(data->graph, a)[b];
            if (dist < 0 || dist > trace.length() || Integer(trace.length()) > trace.total_bound) {
                all_valid = false;
                violations.push_back({{"source", a}, {"target", b}, {"length", trace.length()}});
            }
        }
        Json kk;
        kk["pairs_checked"] = pairs.size();
        kk["sampled"] = sampled;
        kk["max_length"] = max_length;
        kk["length_bound"] = json_integer(kk_recurrence(p.dim(), data->num_irredundant));
        kk["all_valid"] = all_valid;
        kk["violations"] = std::move(violations);
        out["kk_paths"] = std::move(kk);
    } catch (const std::exception& e) {
        out["kk_paths"] = {{"error", e.what()}};
    }

    try {
        int passes = 0, skips = 0, not_comparable = 0, failures = 0;
        Json details = Json::array();
        for (int v = 0; v < data->graph.num_vertices(); ++v) {
            QLemmaReport q = verify_q_lemma(cache, p, v);
            if (q.skipped)
                ++skips;
            else if (q.passed())
                ++passes;
            else
                ++failures;
            not_comparable += static_cast<int>(q.not_comparable.size());
            if (q.skipped || !q.passed() || !q.not_comparable.empty()) details.push_back(q_lemma_to_json(q));
        }
        Json lemma;
        lemma["vertices_checked"] = data->graph.num_vertices();
        lemma["passes"] = passes;
        lemma["failures"] = failures;
        lemma["skipped"] = skips;
        lemma["not_comparable"] = not_comparable;
        lemma["details"] = std::move(details);
        out["q_lemma"] = std::move(lemma);
    } catch (const std::exception& e) {
        out["q_lemma"] = {{"error", e.what()}};
    }

    out["bounds"] = bounds_to_json(comparison_bounds(p.dim(), data->num_irredundant),
                                   data->num_irredundant >= 2
                                       ? quasipoly_bound(p.dim(), data->num_irredundant)
                                       : 0.0L);
    out["bounds"]["recurrence"] = json_integer(kk_recurrence(p.dim(), data->num_irredundant));
    return out;
}

}  // namespace polydiam
