#include "polydiam/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polydiam/generators.hpp"
#include "polydiam/report.hpp"

namespace polydiam {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << content;
}

struct Options {
    int threads = 0;
    std::string input;
    std::string output;
    std::string family_spec;
    std::string left_spec, right_spec;
    bool as_json = false, as_csv = false, exhaustive = false;
    int from = 0, to = 0;
    std::optional<int> vertex;
    std::string trace_path;
    int64_t d = 0, n = 0, dmax = 10, nmax = 1024;
};

void print_bounds_text(std::ostream& out, int64_t d, int64_t n) {
    ComparisonBounds c = comparison_bounds(d, n);
    out << "recurrence f(" << d << "," << n << ") = " << kk_recurrence(d, n).str() << "\n";
    out << "quasipoly n^(log2 d + 2) = " << static_cast<double>(quasipoly_bound(d, n)) << "\n";
    out << "hirsch n-d = " << c.hirsch.str() << "\n";
    out << "klee_walkup_lower = " << (c.klee_walkup_lower ? c.klee_walkup_lower->str() : "n/a (needs n >= 2d)")
        << "\n";
    out << "barnette n*3^(d-3) = " << (c.barnette ? c.barnette->str() : "n/a (needs d >= 3)") << "\n";
    out << "larman n*2^(d-3) = " << (c.larman ? c.larman->str() : "n/a (needs d >= 3)") << "\n";
    out << "kalai_subexp = ";
    if (c.kalai_subexp)
        out << static_cast<double>(*c.kalai_subexp) << "\n";
    else
        out << "n/a (needs n > d)\n";
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err) {
    EnumOptions enum_opts;
    enum_opts.threads = opt.threads;

    if (command == "gen") {
        HPolyhedron p = [&] {
            if (opt.family_spec == "product") {
                if (opt.left_spec.empty() || opt.right_spec.empty())
                    throw InputError("gen product needs --left and --right family specs");
                return gen_product(generate(parse_family_spec(opt.left_spec)),
                                   generate(parse_family_spec(opt.right_spec)));
            }
            return generate(parse_family_spec(opt.family_spec));
        }();
        std::string text = serialize_hrep(p);
        if (opt.output.empty())
            out << text;
        else
            write_file(opt.output, text);
        err << "summary: generated " << opt.family_spec << " with n=" << p.num_constraints()
            << " d=" << p.dim() << (opt.output.empty() ? "" : " -> " + opt.output) << "\n";
        return 0;
    }

    if (command == "bounds") {
        print_bounds_text(out, opt.d, opt.n);
        err << "summary: bounds evaluated at d=" << opt.d << " n=" << opt.n << "\n";
        return 0;
    }

    if (command == "verify") {
        BoundTable table;
        GridReport report = verify_theorem_grid(opt.dmax, opt.nmax, table);
        auto identity_bad = table.recheck_identity();
        if (opt.as_csv) {
            out << "d,n,f,quasipoly,ratio\n";
            for (int64_t d = 3; d <= opt.dmax; ++d)
                for (int64_t n = d + 1; n <= opt.nmax; ++n) {
                    const Integer& f = table.value(d, n);
                    long double bound = quasipoly_bound(d, n);
                    out << d << ',' << n << ',' << f.str() << ',' << static_cast<double>(bound) << ','
                        << static_cast<double>(f.convert_to<long double>() / bound) << '\n';
                }
        } else {
            out << "cells checked: " << report.cells_checked << "\n";
            out << "violations: " << report.violations.size() << "\n";
            out << "recurrence identity failures: " << identity_bad.size() << "\n";
            out << "max ratio f/bound: " << static_cast<double>(report.max_ratio) << " at (d="
                << report.argmax_d << ", n=" << report.argmax_n << ")\n";
        }
        const bool ok = report.violations.empty() && identity_bad.empty();
        err << "summary: " << (ok ? "PASS" : "FAIL") << " grid d<=" << opt.dmax << " n<=" << opt.nmax
            << " (" << report.cells_checked << " cells, " << report.violations.size() << " violations)\n";
        return ok ? 0 : 2;
    }

    // Remaining commands read an instance file.
    HPolyhedron p = parse_hrep(read_file(opt.input));
    PipelineCache cache(enum_opts);

    if (command == "vertices") {
        auto data = cache.get(p);
        out << vertices_to_json(p, data->enumeration).dump(2) << "\n";
        err << "summary: " << data->enumeration.vertices.size() << " vertices of " << opt.input << "\n";
        return 0;
    }

    if (command == "graph") {
        auto data = cache.get(p);
        out << graph_to_json(data->graph).dump(2) << "\n";
        err << "summary: graph of " << opt.input << " has " << data->graph.num_vertices()
            << " vertices, " << data->graph.num_edges() << " edges\n";
        return 0;
    }

    if (command == "diameter") {
        auto data = cache.get(p);
        DiameterReport report = diameter(data->graph);
        if (opt.as_json)
            out << diameter_to_json(report).dump(2) << "\n";
        else if (opt.as_csv)
            out << diameter_to_csv(report, opt.input);
        else {
            out << "d = " << report.dim << "\nn = " << report.num_rows
                << "\nn_irredundant = " << report.num_irredundant << "\nvertices = " << report.num_vertices
                << "\nedges = " << report.num_edges << "\n";
            if (report.diameter)
                out << "diameter = " << *report.diameter << " (witness " << report.witness.first << " -> "
                    << report.witness.second << ")\n";
            else
                out << "diameter = unbounded (disconnected graph)\n";
            print_bounds_text(out, report.dim, report.num_irredundant);
        }
        std::ostringstream s;
        if (report.diameter)
            s << "diameter " << *report.diameter;
        else
            s << "diameter unbounded";
        err << "summary: " << s.str() << " for " << opt.input << " (d=" << report.dim
            << " n=" << report.num_irredundant << ")\n";
        return 0;
    }

    if (command == "kk-path") {
        KKTrace trace = kk_path(cache, p, opt.from, opt.to);
        Json j = trace_to_json(trace);
        if (!opt.trace_path.empty()) write_file(opt.trace_path, j.dump(2) + "\n");
        out << "path:";
        for (int id : trace.assembled) out << ' ' << id;
        out << "\n";
        err << "summary: len=" << trace.length() << " <= f(" << trace.dim << ","
            << trace.num_irredundant << ")=" << trace.total_bound.str() << "\n";
        return 0;
    }

    if (command == "q-lemma") {
        auto data = cache.get(p);
        Json all = Json::array();
        int failures = 0, skips = 0;
        const int lo = opt.vertex ? *opt.vertex : 0;
        const int hi = opt.vertex ? *opt.vertex + 1 : data->graph.num_vertices();
        for (int v = lo; v < hi; ++v) {
            QLemmaReport q = verify_q_lemma(cache, p, v);
            failures += q.skipped ? 0 : (q.passed() ? 0 : 1);
            skips += q.skipped ? 1 : 0;
            all.push_back(q_lemma_to_json(q));
        }
        out << all.dump(2) << "\n";
        err << "summary: restriction lemma on " << (hi - lo) << " vertices: " << failures
            << " failures, " << skips << " skipped\n";
        return failures == 0 ? 0 : 2;
    }

    if (command == "report") {
        FullReportOptions ropts;
        ropts.exhaustive = opt.exhaustive;
        ropts.enum_opts = enum_opts;
        Json j = full_report(p, ropts);
        out << j.dump(2) << "\n";
        err << "summary: full report for " << opt.input << "\n";
        return 0;
    }

    throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polydiam: exact polyhedron graphs, diameters, and recursive path certificates"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--threads", opt.threads, "parallelism degree (default: POLYDIAM_THREADS or hardware)");

    auto* gen = app.add_subcommand("gen", "generate a family instance");
    gen->add_option("spec", opt.family_spec,
                    "family spec: cube:D | simplex:D | cross:D | polygon:N | klee-minty:D:EPS | "
                    "random-tangent:D:M:SEED | product (with --left/--right)")
        ->required();
    gen->add_option("--left", opt.left_spec, "left factor for product");
    gen->add_option("--right", opt.right_spec, "right factor for product");
    gen->add_option("-o,--output", opt.output, "output file (default: stdout)");

    auto* vertices = app.add_subcommand("vertices", "enumerate vertices as JSON");
    vertices->add_option("file", opt.input)->required();

    auto* graph = app.add_subcommand("graph", "vertex-edge graph as JSON");
    graph->add_option("file", opt.input)->required();

    auto* diam = app.add_subcommand("diameter", "diameter report with bound checks");
    diam->add_option("file", opt.input)->required();
    diam->add_flag("--json", opt.as_json, "JSON output");
    diam->add_flag("--csv", opt.as_csv, "flat CSV output");

    auto* kk = app.add_subcommand("kk-path", "recursive path certificate between two vertices");
    kk->add_option("file", opt.input)->required();
    kk->add_option("--from", opt.from, "source vertex id")->required();
    kk->add_option("--to", opt.to, "target vertex id")->required();
    kk->add_option("--trace", opt.trace_path, "write the level-by-level trace JSON here");

    auto* bounds = app.add_subcommand("bounds", "print every bound formula at (d, n)");
    bounds->add_option("--d", opt.d)->required();
    bounds->add_option("--n", opt.n)->required();

    auto* verify = app.add_subcommand("verify", "check the recurrence against the quasi-polynomial bound on a grid");
    verify->add_option("--dmax", opt.dmax);
    verify->add_option("--nmax", opt.nmax);
    verify->add_flag("--csv", opt.as_csv, "emit per-cell CSV");

    auto* qlemma = app.add_subcommand("q-lemma", "distance preservation check in the restricted polyhedron");
    qlemma->add_option("file", opt.input)->required();
    int vertex_flag = -1;
    qlemma->add_option("--vertex", vertex_flag, "check a single vertex (default: all)");

    auto* report = app.add_subcommand("report", "full pipeline report as one JSON document");
    report->add_option("file", opt.input)->required();
    report->add_flag("--exhaustive", opt.exhaustive, "all vertex pairs even above the sampling threshold");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (vertex_flag >= 0) opt.vertex = vertex_flag;
    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out, err);
    } catch (const InternalInvariantError& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polydiam
