#include "polydiam/pipeline.hpp"

namespace polydiam {

int PolyData::find_vertex(const RVector& x) const {
    auto it = vertex_index.find(x);
    return it == vertex_index.end() ? -1 : it->second;
}

std::shared_ptr<const PolyData> PipelineCache::get(const HPolyhedron& p) {
    std::string form = serialize_hrep(p);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = by_form_.find(form);
    if (it != by_form_.end()) return it->second;

    auto data = std::make_shared<PolyData>(p);
    data->serialized = form;
    data->enumeration = enumerate_vertices(p, opts_);
    data->graph = build_graph(data->enumeration, p);
    data->redundant = redundant_rows(p, data->enumeration);
    data->num_irredundant = p.num_constraints() - static_cast<int>(data->redundant.size());
    for (const Vertex& v : data->enumeration.vertices) data->vertex_index.emplace(v.coords, v.id);
    by_form_.emplace(std::move(form), data);
    return data;
}

}  // namespace polydiam
