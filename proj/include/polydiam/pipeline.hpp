#ifndef POLYDIAM_PIPELINE_HPP
#define POLYDIAM_PIPELINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "polydiam/graph.hpp"

namespace polydiam {

struct RVectorLess {
    bool operator()(const RVector& a, const RVector& b) const {
        for (int i = 0; i < a.size(); ++i) {
            if (a(i) < b(i)) return true;
            if (a(i) > b(i)) return false;
        }
        return false;
    }
};

/// Everything the pipeline derives from one polyhedron: enumeration, graph,
/// redundancy report, and an exact coordinate index for vertex lookup.
struct PolyData {
    explicit PolyData(HPolyhedron p) : poly(std::move(p)) {}

    HPolyhedron poly;
    Enumeration enumeration;
    PolytopeGraph graph;
    std::vector<int> redundant;
    int num_irredundant = 0;
    std::string serialized;
    std::map<RVector, int, RVectorLess> vertex_index;

    const RVector& coords(int id) const { return enumeration.vertices[id].coords; }
    /// Vertex id with exactly these coordinates, or -1.
    int find_vertex(const RVector& x) const;
};

/**
 * Memoizes the enumeration pipeline by canonical serialized form. The
 * recursive path construction re-enumerates every facet sub-polyhedron it
 * descends into; the cache makes repeated descents into the same facet
 * (across vertex pairs and recursion levels) pay only once.
 */
class PipelineCache {
  public:
    explicit PipelineCache(EnumOptions opts = {}) : opts_(opts) {}

    std::shared_ptr<const PolyData> get(const HPolyhedron& p);
    const EnumOptions& options() const { return opts_; }

  private:
    EnumOptions opts_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const PolyData>> by_form_;
};

}  // namespace polydiam

#endif
