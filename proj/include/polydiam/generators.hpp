#ifndef POLYDIAM_GENERATORS_HPP
#define POLYDIAM_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "polydiam/hrep.hpp"

namespace polydiam {

/// Parameters naming one instance of a test family. Deterministic: equal
/// specs always generate byte-identical files.
struct FamilySpec {
    std::string family;       // cube | simplex | cross | polygon | klee-minty | random-tangent
    int dim = 0;              // d, for the dimension-parameterized families
    int facets = 0;           // n (polygon), m (random-tangent)
    Rational deformation;     // klee-minty eps
    uint64_t seed = 0;        // random-tangent
};

/// 0 <= x_i <= 1; n = 2d.
HPolyhedron gen_cube(int d);

/// x_i >= 0, sum x_i <= 1; n = d+1.
HPolyhedron gen_simplex(int d);

/// sum_i eps_i x_i <= 1 over all sign patterns; n = 2^d, 2d vertices.
/// Rejects d > 12 (row blowup).
HPolyhedron gen_cross_polytope(int d);

/// Regular n-gon from tangent lines with rationalized normals
/// (llround(2^16 cos), llround(2^16 sin), offset 2^16); the rounding grid
/// preserves the n-cycle combinatorics at this scale.
HPolyhedron gen_polygon(int n);

/// Block-diagonal product: d = d1+d2, n = n1+n2; the graph is the
/// Cartesian product of the factor graphs.
HPolyhedron gen_product(const HPolyhedron& a, const HPolyhedron& b);

/// Deformed cube 0 <= x_1 <= 1, eps*x_{i-1} <= x_i <= 1 - eps*x_{i-1};
/// n = 2d, combinatorially a cube. Requires 0 < eps < 1/2.
HPolyhedron gen_klee_minty(int d, const Rational& eps);

/**
 * m constraints tangent to a sphere at rationalized random directions:
 * integer direction vectors drawn uniformly from the ball of radius 2^16
 * (splitmix64 streams, one per row), constraint v.x <= |v|^2 / 2^16.
 * Generically simple and bounded; both properties are verified post hoc
 * (active set sizes, vertex degrees, and an exact recession-cone test) and
 * a failure raises DegenerateSampleError with re-sample advice rather than
 * silently retrying. Requires m >= d+1.
 */
HPolyhedron gen_random_tangent(int d, int m, uint64_t seed);

/// Dispatch on a FamilySpec.
HPolyhedron generate(const FamilySpec& spec);

/// Parse the compact form used by the CLI, e.g. "cube:3", "polygon:8",
/// "klee-minty:3:1/4", "random-tangent:3:8:1".
FamilySpec parse_family_spec(const std::string& text);

/// The documented 64-bit generator behind random-tangent sampling.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace polydiam

#endif
