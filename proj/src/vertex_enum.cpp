#include "polydiam/vertex_enum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "polydiam/linalg.hpp"

namespace polydiam {

namespace {

constexpr int kMaxIntDim = 12;
constexpr uint64_t kSubsetCap = uint64_t(1) << 40;  // brute-force sanity cap

using Point = std::vector<Rational>;

struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    }
};

using PointSet = std::map<Point, bool, PointLess>;

// ---------------------------------------------------------------------------
// Plain rational kernel: solve every d-subset directly.
// ---------------------------------------------------------------------------

// Binomial with saturation at kSubsetCap.
uint64_t binomial_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > kSubsetCap) return kSubsetCap;
        r = r * uint64_t(n - k + i) / uint64_t(i);
    }
    return std::min(r, kSubsetCap);
}

// Combination at `index` in lexicographic order over {0..n-1} choose k.
std::vector<int> unrank_combination(int n, int k, uint64_t index) {
    std::vector<int> c(k);
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next;; ++v) {
            uint64_t tail = binomial_capped(n - 1 - v, k - 1 - slot);
            if (index < tail) {
                c[slot] = v;
                next = v + 1;
                break;
            }
            index -= tail;
        }
    }
    return c;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void rational_kernel_range(const HPolyhedron& p, uint64_t begin, uint64_t end, PointSet& out) {
    const int d = p.dim();
    const int n = p.num_constraints();
    if (begin >= end) return;
    std::vector<int> subset = unrank_combination(n, d, begin);
    RMatrix m(d, d);
    RVector b(d);
    for (uint64_t idx = begin; idx < end; ++idx) {
        for (int i = 0; i < d; ++i) {
            m.row(i) = p.normals().row(subset[i]);
            b(i) = p.offset(subset[i]);
        }
        if (auto x = solve_square(m, b); x && p.contains(*x)) {
            Point pt(d);
            for (int j = 0; j < d; ++j) pt[j] = (*x)(j);
            out.emplace(std::move(pt), true);
        }
        if (idx + 1 < end && !next_combination(subset, n)) break;
    }
}

// ---------------------------------------------------------------------------
// Fixed-width exact kernel. Same subset semantics, organized as a DFS over
// ascending independent (d-1)-prefixes carrying a fraction-free Gauss-Jordan
// state; each prefix spans a line whose feasible segment endpoints are the
// vertices arising from every d-subset extending the prefix. All values are
// minors of the scaled integer system, so the Hadamard gate below makes
// int64 arithmetic exact.
// ---------------------------------------------------------------------------

struct IntRows {
    int n = 0, d = 0;
    std::vector<std::array<int64_t, kMaxIntDim + 1>> rows;  // [a_0..a_{d-1}, b]
};

// Scale each row by the lcm of its denominators. Fails (returns false) when
// any scaled entry exceeds `limit`.
bool scale_rows(const HPolyhedron& p, int64_t limit, IntRows& out) {
    const int n = p.num_constraints();
    const int d = p.dim();
    if (d > kMaxIntDim) return false;
    out.n = n;
    out.d = d;
    out.rows.assign(n, {});
    for (int i = 0; i < n; ++i) {
        Integer lcm_den = denominator(p.offset(i));
        for (int j = 0; j < d; ++j) lcm_den = lcm(lcm_den, Integer(denominator(p.normals()(i, j))));
        for (int j = 0; j <= d; ++j) {
            const Rational& v = j < d ? p.normals()(i, j) : p.offset(i);
            Integer scaled = numerator(v) * (lcm_den / denominator(v));
            if (abs(scaled) > limit) return false;
            out.rows[i][j] = scaled.convert_to<int64_t>();
        }
    }
    return true;
}

bool int_kernel_applicable(const IntRows& rows) {
    int64_t max_abs = 1;
    for (const auto& r : rows.rows)
        for (int j = 0; j <= rows.d; ++j) max_abs = std::max(max_abs, std::abs(r[j]));
    const long double m = static_cast<long double>(max_abs);
    const long double hadamard = powl(sqrtl(static_cast<long double>(rows.d)) * m, rows.d);
    const long double k = (rows.d + 1) * m * hadamard;
    return k * k < ldexpl(1.0L, 61);
}

struct JordanState {
    int placed = 0;
    int64_t delta = 1;  // determinant of the pivot block
    std::array<int, kMaxIntDim> pivot_col{};
    uint32_t used_cols = 0;
    int64_t m[kMaxIntDim][kMaxIntDim + 1] = {};
};

// Reduce `row` against `s` and extend the Jordan state; false if the row's
// normal is linearly dependent on the prefix.
bool jordan_push(const JordanState& s, const IntRows& rows, int row, JordanState& out) {
    const int d = rows.d;
    int64_t reduced[kMaxIntDim + 1];
    for (int c = 0; c <= d; ++c) {
        int64_t acc = s.delta * rows.rows[row][c];
        for (int i = 0; i < s.placed; ++i) acc -= rows.rows[row][s.pivot_col[i]] * s.m[i][c];
        reduced[c] = acc;
    }
    int pivot = -1;
    for (int c = 0; c < d; ++c) {
        if ((s.used_cols >> c) & 1) continue;
        if (reduced[c] != 0) {
            pivot = c;
            break;
        }
    }
    if (pivot < 0) return false;

    out.placed = s.placed + 1;
    out.delta = reduced[pivot];
    out.pivot_col = s.pivot_col;
    out.pivot_col[s.placed] = pivot;
    out.used_cols = s.used_cols | (uint32_t(1) << pivot);
    for (int i = 0; i < s.placed; ++i)
        for (int c = 0; c <= d; ++c)
            out.m[i][c] = (out.delta * s.m[i][c] - s.m[i][pivot] * reduced[c]) / s.delta;
    for (int c = 0; c <= d; ++c) out.m[s.placed][c] = reduced[c];
    return true;
}

struct IntPointHash {
    size_t operator()(const std::vector<int64_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (int64_t x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using IntPointSet = std::unordered_set<std::vector<int64_t>, IntPointHash>;

// Canonical per-coordinate reduced fractions (num_0, den_0, num_1, den_1, ...).
void emit_point(const int64_t* nums, int64_t den, int d, IntPointSet& out) {
    std::vector<int64_t> key(2 * d);
    for (int j = 0; j < d; ++j) {
        int64_t g = std::gcd(std::abs(nums[j]), den);
        if (g == 0) g = 1;
        key[2 * j] = nums[j] / g;
        key[2 * j + 1] = den / g;
    }
    out.insert(std::move(key));
}

// At a full (d-1)-prefix: intersect the spanned line with every row and
// collect the feasible segment's endpoints.
void scan_line(const JordanState& s, const IntRows& rows, IntPointSet& out) {
    const int d = rows.d;
    const int64_t sign = s.delta < 0 ? -1 : 1;
    const int64_t den = sign * s.delta;

    int free_col = 0;
    while ((s.used_cols >> free_col) & 1) ++free_col;

    int64_t x0[kMaxIntDim] = {};  // point numerators over `den`
    int64_t dir[kMaxIntDim] = {};
    dir[free_col] = sign * s.delta;
    for (int i = 0; i < s.placed; ++i) {
        x0[s.pivot_col[i]] = sign * s.m[i][d];
        dir[s.pivot_col[i]] = -sign * s.m[i][free_col];
    }

    bool has_lo = false, has_hi = false;
    int64_t lo_num = 0, lo_den = 1, hi_num = 0, hi_den = 1;
    for (int r = 0; r < rows.n; ++r) {
        int64_t along = 0, slack = rows.rows[r][d] * den;
        for (int j = 0; j < d; ++j) {
            along += rows.rows[r][j] * dir[j];
            slack -= rows.rows[r][j] * x0[j];
        }
        if (along == 0) {
            if (slack < 0) return;  // the whole line is infeasible
            continue;
        }
        if (along > 0) {  // s <= slack/along
            if (!has_hi || slack * hi_den < hi_num * along) {
                hi_num = slack;
                hi_den = along;
                has_hi = true;
            }
        } else {  // s >= slack/along
            int64_t num = -slack, dn = -along;
            if (!has_lo || num * lo_den > lo_num * dn) {
                lo_num = num;
                lo_den = dn;
                has_lo = true;
            }
        }
        if (has_lo && has_hi && lo_num * hi_den > hi_num * lo_den) return;  // empty segment
    }

    int64_t nums[kMaxIntDim];
    if (has_lo) {
        for (int j = 0; j < d; ++j) nums[j] = x0[j] * lo_den + lo_num * dir[j];
        emit_point(nums, den * lo_den, d, out);
    }
    if (has_hi && !(has_lo && lo_num * hi_den == hi_num * lo_den)) {
        for (int j = 0; j < d; ++j) nums[j] = x0[j] * hi_den + hi_num * dir[j];
        emit_point(nums, den * hi_den, d, out);
    }
}

void int_kernel_dfs(const JordanState& s, const IntRows& rows, int next_row, int depth_left,
                    IntPointSet& out) {
    if (depth_left == 0) {
        scan_line(s, rows, out);
        return;
    }
    JordanState child;
    for (int r = next_row; r <= rows.n - depth_left; ++r) {
        if (!jordan_push(s, rows, r, child)) continue;
        int_kernel_dfs(child, rows, r + 1, depth_left - 1, out);
    }
}

// Top-level split for threading: each worker owns the subtrees whose first
// prefix row is congruent to its index. Merged results are a set union, so
// the final output does not depend on the split.
void int_kernel_worker(const IntRows& rows, int worker, int stride, IntPointSet& out) {
    const int depth = rows.d - 1;
    JordanState root;
    if (depth == 0) {
        if (worker == 0) scan_line(root, rows, out);
        return;
    }
    JordanState child;
    for (int r = worker; r <= rows.n - depth; r += stride) {
        if (!jordan_push(root, rows, r, child)) continue;
        int_kernel_dfs(child, rows, r + 1, depth - 1, out);
    }
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("POLYDIAM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Enumeration enumerate_vertices(const HPolyhedron& p, const EnumOptions& opts) {
    const int d = p.dim();
    const int n = p.num_constraints();
    if (rank(p.normals()) < d)
        throw NotPointedError("constraint normals have rank < " + std::to_string(d) +
                              "; the polyhedron is not pointed and has no vertices");

    const int threads = resolve_threads(opts.threads);

    IntRows scaled;
    const bool use_int_kernel =
        !opts.force_rational && scale_rows(p, int64_t(1) << 31, scaled) && int_kernel_applicable(scaled);

    PointSet points;
    if (use_int_kernel) {
        std::vector<IntPointSet> partial(threads);
        if (threads == 1) {
            int_kernel_worker(scaled, 0, 1, partial[0]);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(int_kernel_worker, std::cref(scaled), t, threads, std::ref(partial[t]));
            for (auto& th : pool) th.join();
        }
        for (const auto& set : partial) {
            for (const auto& key : set) {
                Point pt(d);
                for (int j = 0; j < d; ++j) pt[j] = Rational(Integer(key[2 * j]), Integer(key[2 * j + 1]));
                points.emplace(std::move(pt), true);
            }
        }
    } else {
        const uint64_t total = binomial_capped(n, d);
        if (total >= kSubsetCap)
            throw InputError("instance too large for brute-force vertex enumeration (" +
                             std::to_string(n) + " choose " + std::to_string(d) + " subsets)");
        std::vector<PointSet> partial(threads);
        if (threads == 1) {
            rational_kernel_range(p, 0, total, partial[0]);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) {
                uint64_t begin = total * t / threads;
                uint64_t end = total * (t + 1) / threads;
                pool.emplace_back(rational_kernel_range, std::cref(p), begin, end, std::ref(partial[t]));
            }
            for (auto& th : pool) th.join();
        }
        for (auto& set : partial)
            for (auto& [pt, _] : set) points.emplace(pt, true);
    }

    if (points.empty())
        throw EmptyPolyhedronError("no feasible basic solution; the inequality system is infeasible");

    Enumeration result;
    result.incidence.num_facets = n;
    result.vertices.reserve(points.size());
    int id = 0;
    for (const auto& [pt, _] : points) {
        Vertex v;
        v.id = id++;
        v.coords = RVector(d);
        for (int j = 0; j < d; ++j) v.coords(j) = pt[j];
        v.active_set.resize(n);
        for (int i = 0; i < n; ++i)
            if (p.tight(i, v.coords)) v.active_set.set(i);
        result.incidence.rows.push_back(v.active_set);
        result.vertices.push_back(std::move(v));
    }
    return result;
}

std::vector<int> redundant_rows(const HPolyhedron& p, const Enumeration& e) {
    return redundant_rows(p, e.incidence);
}

std::vector<int> redundant_rows(const HPolyhedron& p, const IncidenceMatrix& incidence) {
    std::vector<int> out;
    for (int i = 0; i < p.num_constraints(); ++i) {
        bool tight_somewhere = false;
        for (const auto& row : incidence.rows) {
            if (row.test(i)) {
                tight_somewhere = true;
                break;
            }
        }
        if (!tight_somewhere) out.push_back(i);
    }
    return out;
}

}  // namespace polydiam
