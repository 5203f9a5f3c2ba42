// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polydiam/generators.hpp"
#include "polydiam/kk_path.hpp"
#include "polydiam/report.hpp"

using namespace polydiam;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    std::string name;
    HPolyhedron poly;
    int expected_diameter = -1;  // -1: no exact expectation
};

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << ": " << name << " (" << detail << ")" << std::endl;
    if (!pass) ++failures;
}

std::vector<Instance> diameter_instances() {
    std::vector<Instance> out;
    for (int d = 2; d <= 6; ++d) out.push_back({"cube:" + std::to_string(d), gen_cube(d), d});
    for (int d = 2; d <= 7; ++d) out.push_back({"simplex:" + std::to_string(d), gen_simplex(d), 1});
    for (int n = 3; n <= 16; ++n) out.push_back({"polygon:" + std::to_string(n), gen_polygon(n), n / 2});
    for (int d = 3; d <= 6; ++d) out.push_back({"cross:" + std::to_string(d), gen_cross_polytope(d), 2});
    for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 4}, {6, 8}, {5, 7}})
        out.push_back({"product:" + std::to_string(p) + "x" + std::to_string(q),
                       gen_product(gen_polygon(p), gen_polygon(q)), p / 2 + q / 2});
    return out;
}

std::vector<Instance> tangent_instances() {
    const std::vector<std::tuple<int, int, uint64_t>> specs{
        {2, 6, 3},  {2, 5, 4},  {2, 12, 1}, {2, 8, 1},  {3, 8, 1},  {3, 10, 1}, {3, 16, 1},
        {3, 6, 1},  {3, 12, 1}, {3, 14, 1}, {4, 10, 1}, {4, 12, 1}, {4, 16, 1}, {4, 14, 1},
        {4, 8, 1},  {5, 12, 1}, {5, 16, 1}, {5, 14, 1}, {5, 13, 1}, {5, 15, 1}};
    std::vector<Instance> out;
    for (auto [d, m, seed] : specs) {
        std::ostringstream name;
        name << "random-tangent:" << d << ":" << m << ":" << seed;
        out.push_back({name.str(), gen_random_tangent(d, m, seed)});
    }
    return out;
}

std::vector<std::pair<int, int>> vertex_pairs(int count, uint64_t seed) {
    // All pairs up to 780 of them, else 64 deterministic seeded pairs.
    std::vector<std::pair<int, int>> pairs;
    if (int64_t(count) * (count - 1) / 2 <= 780) {
        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b) pairs.emplace_back(a, b);
    } else {
        SplitMix64 rng(seed);
        while (pairs.size() < 64) {
            int a = static_cast<int>(rng.next() % count);
            int b = static_cast<int>(rng.next() % count);
            if (a != b) pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

void criterion_theorem_grid() {
    auto start = Clock::now();
    BoundTable table;
    GridReport grid = verify_theorem_grid(15, 4096, table);
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << grid.cells_checked << " cells, " << grid.violations.size() << " violations, max ratio "
           << std::setprecision(4) << static_cast<double>(grid.max_ratio) << " at d=" << grid.argmax_d
           << " n=" << grid.argmax_n << ", " << std::setprecision(3) << elapsed << "s";
    report("theorem-grid d<=15 n<=4096", grid.violations.empty() && elapsed < 10.0, detail.str());

    auto bad = table.recheck_identity();
    std::ostringstream detail2;
    detail2 << table.memo_size() << " memoized cells re-checked, " << bad.size() << " identity failures";
    report("recurrence-identity", bad.empty(), detail2.str());
}

void criterion_known_diameters(const std::vector<Instance>& instances,
                               std::vector<DiameterReport>& reports_out) {
    bool pass = true;
    double slowest = 0.0;
    std::string slowest_name = "-";
    std::ostringstream bad;
    for (const Instance& inst : instances) {
        auto start = Clock::now();
        Enumeration e = enumerate_vertices(inst.poly);
        PolytopeGraph g = build_graph(e, inst.poly);
        DiameterReport r = diameter(g);
        double elapsed = seconds_since(start);
        reports_out.push_back(r);
        if (elapsed > slowest) {
            slowest = elapsed;
            slowest_name = inst.name;
        }
        const bool ok = r.diameter && *r.diameter == inst.expected_diameter && elapsed < 5.0;
        if (!ok) {
            pass = false;
            bad << ' ' << inst.name << "=" << (r.diameter ? std::to_string(*r.diameter) : "unbounded")
                << " want " << inst.expected_diameter << " (" << elapsed << "s)";
        }
    }
    std::ostringstream detail;
    detail << instances.size() << " instances exact via BFS, slowest " << slowest_name << " "
           << std::setprecision(3) << slowest << "s < 5s" << bad.str();
    report("known-diameters", pass, detail.str());
}

void criterion_kk_soundness(const std::vector<Instance>& instances, PipelineCache& cache) {
    bool pass = true;
    int64_t pairs_total = 0;
    std::ostringstream bad;
    for (const Instance& inst : instances) {
        auto data = cache.get(inst.poly);
        const Integer bound = kk_recurrence(inst.poly.dim(), data->num_irredundant);
        for (auto [a, b] : vertex_pairs(data->graph.num_vertices(), 42)) {
            ++pairs_total;
            KKTrace t = kk_path(cache, inst.poly, a, b);
            bool ok = t.assembled.front() == a && t.assembled.back() == b;
            for (size_t i = 0; ok && i + 1 < t.assembled.size(); ++i)
                ok = data->graph.adjacent(t.assembled[i], t.assembled[i + 1]);
            const int dist = bfs_distances(data->graph, a)[b];
            ok = ok && dist >= 0 && dist <= t.length() && Integer(t.length()) <= bound;
            if (!ok) {
                pass = false;
                bad << ' ' << inst.name << ":" << a << "-" << b;
            }
        }
    }
    std::ostringstream detail;
    detail << pairs_total << " pairs over " << instances.size() << " instances, walk/endpoint/length checks"
           << (pass ? ", 0 violations" : ", violations:" + bad.str());
    report("kk-path-soundness", pass, detail.str());
}

void criterion_q_lemma(const std::vector<Instance>& instances, PipelineCache& cache) {
    bool pass = true;
    int vertices_checked = 0, skipped = 0, not_comparable = 0, radius_bound_failures = 0;
    std::ostringstream bad;
    for (const Instance& inst : instances) {
        auto data = cache.get(inst.poly);
        for (int v = 0; v < data->graph.num_vertices(); ++v) {
            QLemmaReport r = verify_q_lemma(cache, inst.poly, v);
            ++vertices_checked;
            skipped += r.skipped ? 1 : 0;
            not_comparable += static_cast<int>(r.not_comparable.size());
            if (!r.skipped && !r.failures.empty()) {
                pass = false;
                bad << ' ' << inst.name << ":v" << v;
            }
            if (!r.radius_bound_ok) {
                pass = false;
                ++radius_bound_failures;
            }
        }
    }
    std::ostringstream detail;
    detail << vertices_checked << " vertices, distance preserved exactly, " << skipped << " skipped, "
           << not_comparable << " not-comparable, " << radius_bound_failures
           << " radius-bound failures" << bad.str();
    report("q-lemma-distance-preservation", pass, detail.str());
}

void criterion_pigeonhole(const std::vector<Instance>& instances, PipelineCache& cache) {
    bool pass = true;
    int64_t pairs_total = 0;
    for (const Instance& inst : instances) {
        auto data = cache.get(inst.poly);
        const int count = data->graph.num_vertices();
        std::vector<FacetSet> enlarged(count);
        for (int v = 0; v < count; ++v) {
            int k = expansion_radius(data->graph, data->enumeration.incidence, v, data->num_irredundant);
            enlarged[v] = ball_facets(data->graph, data->enumeration.incidence, v, k + 1);
        }
        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b) {
                ++pairs_total;
                if (!enlarged[a].intersects(enlarged[b])) pass = false;
            }
    }
    std::ostringstream detail;
    detail << pairs_total << " vertex pairs, enlarged ball facet sets always intersect";
    report("pigeonhole", pass, detail.str());
}

void criterion_formula_spot_values() {
    bool pass = true;
    ComparisonBounds kw = comparison_bounds(5, 10);
    pass = pass && kw.klee_walkup_lower && *kw.klee_walkup_lower == 6;
    for (int n = 4; n <= 100; ++n) {
        ComparisonBounds c = comparison_bounds(3, n);
        pass = pass && c.barnette && *c.barnette == n && c.larman && *c.larman == n;
    }
    for (int d = 1; d <= 12; ++d)
        for (int n = d; n <= 40; ++n) pass = pass && comparison_bounds(d, n).hirsch == n - d;
    report("formula-spot-values", pass,
           "klee_walkup_lower(5,10)=6, barnette(3,n)=n, larman(3,n)=n, hirsch(d,n)=n-d, exact");
}

void criterion_oracle_equivalence() {
    bool pass = true;
    std::ostringstream bad;
    for (int d = 1; d <= 6; ++d) {
        Enumeration e = enumerate_vertices(gen_cube(d));
        pass = pass && e.vertices.size() == (size_t(1) << d);
        std::set<std::string> seen;
        for (const Vertex& v : e.vertices) {
            bool zero_one = true;
            std::string key;
            for (int j = 0; j < d; ++j) {
                zero_one = zero_one && (v.coords(j) == 0 || v.coords(j) == 1);
                key += v.coords(j) == 1 ? '1' : '0';
            }
            pass = pass && zero_one && seen.insert(key).second;
        }
        if (!pass) bad << " cube:" << d;
    }
    for (int d = 1; d <= 7; ++d) {
        Enumeration e = enumerate_vertices(gen_simplex(d));
        bool ok = e.vertices.size() == size_t(d) + 1;
        int units = 0, origins = 0;
        for (const Vertex& v : e.vertices) {
            Rational sum = 0;
            int nonzero = 0;
            for (int j = 0; j < d; ++j) {
                sum += v.coords(j);
                if (v.coords(j) != 0) ++nonzero;
            }
            if (sum == 0) ++origins;
            if (sum == 1 && nonzero == 1) ++units;
        }
        ok = ok && origins == 1 && units == d;
        if (!ok) bad << " simplex:" << d;
        pass = pass && ok;
    }
    for (int d = 2; d <= 6; ++d) {
        Enumeration e = enumerate_vertices(gen_cross_polytope(d));
        bool ok = e.vertices.size() == size_t(2 * d);
        for (const Vertex& v : e.vertices) {
            int nonzero = 0;
            Rational norm1 = 0;
            for (int j = 0; j < d; ++j) {
                norm1 += abs(v.coords(j));
                if (v.coords(j) != 0) ++nonzero;
            }
            ok = ok && nonzero == 1 && norm1 == 1;
        }
        if (!ok) bad << " cross:" << d;
        pass = pass && ok;
    }

    // Byte-identical output for different parallelism degrees.
    for (const HPolyhedron& p : {gen_cross_polytope(5), gen_cube(5), gen_random_tangent(4, 12, 1)}) {
        EnumOptions one, three;
        one.threads = 1;
        three.threads = 3;
        std::string a = vertices_to_json(p, enumerate_vertices(p, one)).dump();
        std::string b = vertices_to_json(p, enumerate_vertices(p, three)).dump();
        if (a != b) {
            pass = false;
            bad << " determinism";
        }
    }
    report("oracle-equivalence", pass,
           "cube/simplex/cross vertex sets exact; 1-thread and 3-thread output byte-identical" +
               bad.str());
}

void criterion_hirsch_observation(const std::vector<Instance>& instances, PipelineCache& cache) {
    bool pass = true;
    std::ostringstream bad;
    int checked = 0;
    for (const Instance& inst : instances) {
        auto data = cache.get(inst.poly);
        DiameterReport r = diameter(data->graph);
        ++checked;
        if (!r.diameter || !(Integer(*r.diameter) <= r.bounds.hirsch)) {
            pass = false;
            bad << ' ' << inst.name;
        }
    }
    std::ostringstream detail;
    detail << checked << " bounded instances, diameter <= n-d everywhere (reported observation)"
           << bad.str();
    report("hirsch-observation", pass, detail.str());
}

}  // namespace

int main() {
    auto start = Clock::now();

    criterion_theorem_grid();

    std::vector<Instance> families = diameter_instances();
    std::vector<DiameterReport> family_reports;
    criterion_known_diameters(families, family_reports);

    std::vector<Instance> all_instances = families;
    for (Instance& t : tangent_instances()) all_instances.push_back(std::move(t));

    PipelineCache cache;
    criterion_kk_soundness(all_instances, cache);
    criterion_q_lemma(all_instances, cache);
    criterion_pigeonhole(all_instances, cache);
    criterion_formula_spot_values();
    criterion_oracle_equivalence();
    criterion_hirsch_observation(all_instances, cache);

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED: " + std::to_string(failures))
              << " (total " << std::setprecision(3) << seconds_since(start) << "s)" << std::endl;
    return failures;
}
