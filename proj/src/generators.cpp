#include "polydiam/generators.hpp"

#include <cmath>
#include <sstream>

#include "polydiam/graph.hpp"
#include "polydiam/linalg.hpp"
#include "polydiam/vertex_enum.hpp"

namespace polydiam {

namespace {

constexpr int64_t kDirectionScale = 65536;  // 2^16 rationalization grid

// Uniform integer in [0, range) by rejection from 32-bit draws.
uint32_t uniform_below(SplitMix64& rng, uint32_t range) {
    const uint64_t span = uint64_t(1) << 32;
    const uint64_t accept = span - span % range;
    for (;;) {
        uint64_t draw = rng.next() >> 32;
        if (draw < accept) return static_cast<uint32_t>(draw % range);
    }
}

// Exact recession-cone test: the cone {x : normals.x <= 0} of a pointed
// system is {0} iff it has no extreme ray, and every extreme ray lies in the
// kernel of some (d-1)-subset of rows. Brute force over those subsets.
bool has_recession_ray(const HPolyhedron& p) {
    const int n = p.num_constraints();
    const int d = p.dim();
    if (d == 1) {
        bool pos = false, neg = false;
        for (int i = 0; i < n; ++i) {
            if (p.normals()(i, 0) > 0) pos = true;
            if (p.normals()(i, 0) < 0) neg = true;
        }
        return !(pos && neg);
    }
    std::vector<int> subset(d - 1);
    for (int i = 0; i < d - 1; ++i) subset[i] = i;
    auto advance = [&]() {
        for (int i = d - 2; i >= 0; --i) {
            if (subset[i] < n - (d - 1) + i) {
                ++subset[i];
                for (int j = i + 1; j < d - 1; ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        RMatrix m(d - 1, d);
        for (int i = 0; i < d - 1; ++i) m.row(i) = p.normals().row(subset[i]);
        auto ray = kernel_vector(m);
        if (!ray || rank(m) < d - 1) continue;
        bool le_all = true, ge_all = true;
        for (int i = 0; i < n && (le_all || ge_all); ++i) {
            Rational v = p.normals().row(i).dot(ray->transpose());
            if (v > 0) le_all = false;
            if (v < 0) ge_all = false;
        }
        if (le_all || ge_all) return true;
    } while (advance());
    return false;
}

}  // namespace

HPolyhedron gen_cube(int d) {
    if (d < 1) throw std::invalid_argument("cube needs d >= 1");
    RMatrix normals = RMatrix::Zero(2 * d, d);
    RVector offsets(2 * d);
    for (int i = 0; i < d; ++i) {
        normals(i, i) = 1;
        offsets(i) = 1;
        normals(d + i, i) = -1;
        offsets(d + i) = 0;
    }
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_simplex(int d) {
    if (d < 1) throw std::invalid_argument("simplex needs d >= 1");
    RMatrix normals = RMatrix::Zero(d + 1, d);
    RVector offsets(d + 1);
    for (int i = 0; i < d; ++i) {
        normals(i, i) = -1;
        offsets(i) = 0;
    }
    for (int j = 0; j < d; ++j) normals(d, j) = 1;
    offsets(d) = 1;
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_cross_polytope(int d) {
    if (d < 2) throw std::invalid_argument("cross-polytope needs d >= 2");
    if (d > 12) throw std::invalid_argument("cross-polytope limited to d <= 12 (2^d facet rows)");
    const int n = 1 << d;
    RMatrix normals(n, d);
    RVector offsets(n);
    for (int code = 0; code < n; ++code) {
        for (int j = 0; j < d; ++j) normals(code, j) = ((code >> j) & 1) ? -1 : 1;
        offsets(code) = 1;
    }
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_polygon(int n) {
    if (n < 3) throw std::invalid_argument("polygon needs n >= 3");
    RMatrix normals(n, 2);
    RVector offsets(n);
    for (int k = 0; k < n; ++k) {
        const long double angle = 2.0L * M_PIl * k / n;
        normals(k, 0) = Integer(llroundl(kDirectionScale * cosl(angle)));
        normals(k, 1) = Integer(llroundl(kDirectionScale * sinl(angle)));
        offsets(k) = kDirectionScale;
    }
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_product(const HPolyhedron& a, const HPolyhedron& b) {
    const int d = a.dim() + b.dim();
    const int n = a.num_constraints() + b.num_constraints();
    RMatrix normals = RMatrix::Zero(n, d);
    RVector offsets(n);
    normals.topLeftCorner(a.num_constraints(), a.dim()) = a.normals();
    normals.bottomRightCorner(b.num_constraints(), b.dim()) = b.normals();
    offsets.head(a.num_constraints()) = a.offsets();
    offsets.tail(b.num_constraints()) = b.offsets();
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_klee_minty(int d, const Rational& eps) {
    if (d < 1) throw std::invalid_argument("klee-minty needs d >= 1");
    if (eps <= 0 || eps >= Rational(1, 2))
        throw std::invalid_argument("klee-minty needs 0 < eps < 1/2, got " + format_rational(eps));
    RMatrix normals = RMatrix::Zero(2 * d, d);
    RVector offsets(2 * d);
    for (int i = 0; i < d; ++i) {
        // lower: x_i >= eps*x_{i-1}  (x_0 reads as 0)
        normals(2 * i, i) = -1;
        if (i > 0) normals(2 * i, i - 1) = eps;
        offsets(2 * i) = 0;
        // upper: x_i <= 1 - eps*x_{i-1}
        normals(2 * i + 1, i) = 1;
        if (i > 0) normals(2 * i + 1, i - 1) = eps;
        offsets(2 * i + 1) = 1;
    }
    return HPolyhedron(std::move(normals), std::move(offsets));
}

HPolyhedron gen_random_tangent(int d, int m, uint64_t seed) {
    if (d < 1) throw std::invalid_argument("random-tangent needs d >= 1");
    if (m < d + 1) throw std::invalid_argument("random-tangent needs m >= d+1");

    RMatrix normals(m, d);
    RVector offsets(m);
    for (int i = 0; i < m; ++i) {
        // Independent per-row stream: one splitmix64 step of (seed + row).
        SplitMix64 rng(SplitMix64(seed + static_cast<uint64_t>(i)).next());
        for (;;) {
            int64_t norm_sq = 0;
            std::array<int64_t, 64> v{};
            for (int j = 0; j < d; ++j) {
                v[j] = int64_t(uniform_below(rng, 2 * kDirectionScale + 1)) - kDirectionScale;
                norm_sq += v[j] * v[j];
            }
            if (norm_sq < (int64_t(1) << 30) || norm_sq > (int64_t(1) << 32)) continue;
            for (int j = 0; j < d; ++j) normals(i, j) = Integer(v[j]);
            offsets(i) = Rational(Integer(norm_sq), Integer(kDirectionScale));
            break;
        }
    }

    try {
        HPolyhedron p(std::move(normals), std::move(offsets));
        Enumeration e = enumerate_vertices(p);
        for (const Vertex& v : e.vertices)
            if (static_cast<int>(v.active_set.count()) != d)
                throw DegenerateSampleError("sample is not simple (a vertex lies on " +
                                            std::to_string(v.active_set.count()) + " > " +
                                            std::to_string(d) + " facets); try another seed");
        if (has_recession_ray(p))
            throw DegenerateSampleError("sample is unbounded (nontrivial recession direction); try another seed");
        PolytopeGraph g = build_graph(e, p);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (static_cast<int>(g.adjacency[v].size()) < d)
                throw DegenerateSampleError("vertex " + std::to_string(v) + " has fewer than d incident edges; try another seed");
        return p;
    } catch (const NotPointedError&) {
        throw DegenerateSampleError("sampled directions do not span full rank; try another seed");
    } catch (const std::invalid_argument& e) {
        throw DegenerateSampleError(std::string("degenerate sample (") + e.what() + "); try another seed");
    }
}

HPolyhedron generate(const FamilySpec& spec) {
    if (spec.family == "cube") return gen_cube(spec.dim);
    if (spec.family == "simplex") return gen_simplex(spec.dim);
    if (spec.family == "cross") return gen_cross_polytope(spec.dim);
    if (spec.family == "polygon") return gen_polygon(spec.facets);
    if (spec.family == "klee-minty") return gen_klee_minty(spec.dim, spec.deformation);
    if (spec.family == "random-tangent") return gen_random_tangent(spec.dim, spec.facets, spec.seed);
    throw std::invalid_argument("unknown family '" + spec.family + "'");
}

FamilySpec parse_family_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw std::invalid_argument("empty family spec");

    FamilySpec spec;
    spec.family = parts[0];
    auto want = [&](size_t count) {
        if (parts.size() != count)
            throw std::invalid_argument("family '" + spec.family + "' takes " + std::to_string(count - 1) +
                                        " parameter(s), got " + std::to_string(parts.size() - 1));
    };
    try {
        if (spec.family == "cube" || spec.family == "simplex" || spec.family == "cross") {
            want(2);
            spec.dim = std::stoi(parts[1]);
        } else if (spec.family == "polygon") {
            want(2);
            spec.facets = std::stoi(parts[1]);
        } else if (spec.family == "klee-minty") {
            want(3);
            spec.dim = std::stoi(parts[1]);
            spec.deformation = parse_rational(parts[2]);
        } else if (spec.family == "random-tangent") {
            want(4);
            spec.dim = std::stoi(parts[1]);
            spec.facets = std::stoi(parts[2]);
            spec.seed = std::stoull(parts[3]);
        } else {
            throw std::invalid_argument("unknown family '" + spec.family + "'");
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed family spec '" + text + "'");
    }
    return spec;
}

}  // namespace polydiam
