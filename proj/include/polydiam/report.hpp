#ifndef POLYDIAM_REPORT_HPP
#define POLYDIAM_REPORT_HPP

#include <json.hpp>

#include "polydiam/kk_path.hpp"

namespace polydiam {

using Json = nlohmann::ordered_json;

/// Exact integers as JSON numbers when they fit int64, decimal strings otherwise.
Json json_integer(const Integer& value);

Json vertices_to_json(const HPolyhedron& p, const Enumeration& e);
Json graph_to_json(const PolytopeGraph& g);
Json diameter_to_json(const DiameterReport& report);
std::string diameter_to_csv(const DiameterReport& report, const std::string& instance_name);
Json trace_to_json(const KKTrace& trace);
Json q_lemma_to_json(const QLemmaReport& report);

struct FullReportOptions {
    bool exhaustive = false;       // force all vertex pairs
    int pair_threshold = 200;      // above this many vertices, sample pairs
    int sampled_pairs = 64;
    uint64_t pair_seed = 7;        // deterministic pair sampling stream
    EnumOptions enum_opts;
};

/**
 * One composite JSON document: enumeration, graph, diameter with bound
 * checks, path certificates for all vertex pairs (or a deterministic
 * sample above the threshold), the restriction-lemma check at every
 * vertex, and the bound formulas. Stage failures are recorded per stage
 * instead of aborting the whole report.
 */
Json full_report(const HPolyhedron& p, const FullReportOptions& opts = {});

}  // namespace polydiam

#endif
