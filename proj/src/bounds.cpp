#include "polydiam/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace polydiam {

namespace {

const long double kUpwardSlack = 1.0L + ldexpl(1.0L, -30);

}  // namespace

BoundTable::BoundTable(std::string policy_id) : policy_id_(std::move(policy_id)) {
    if (policy_id_ != "v1") throw std::invalid_argument("unknown base-case policy '" + policy_id_ + "'");
}

const Integer& BoundTable::value(int64_t d, int64_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("recurrence arguments must satisfy d >= 1, n >= 1");
    auto it = memo_.find({d, n});
    if (it != memo_.end()) return it->second;

    Integer v;
    if (n <= d) {
        v = 0;  // <= d facets: at most one vertex
    } else if (d == 1) {
        v = 1;
    } else if (d == 2) {
        v = n - 2;
    } else if (n == d + 1) {
        v = 1;  // every pair of vertices adjacent
    } else {
        v = value(d - 1, n - 1) + 2 * value(d, n / 2) + 2;
    }
    return memo_.emplace(std::make_pair(d, n), std::move(v)).first->second;
}

std::vector<std::pair<int64_t, int64_t>> BoundTable::recheck_identity() {
    std::vector<std::pair<int64_t, int64_t>> bad;
    for (const auto& [cell, v] : memo_) {
        const auto [d, n] = cell;
        if (d < 3 || n < d + 2) continue;
        if (v != value(d - 1, n - 1) + 2 * value(d, n / 2) + 2) bad.push_back(cell);
    }
    return bad;
}

Integer kk_recurrence(int64_t d, int64_t n) {
    thread_local BoundTable table;
    return table.value(d, n);
}

long double quasipoly_bound(int64_t d, int64_t n) {
    if (d < 1 || n < 2) throw std::invalid_argument("quasipoly_bound needs d >= 1, n >= 2");
    const long double exponent = log2l(static_cast<long double>(d)) + 2.0L;
    return powl(static_cast<long double>(n), exponent) * kUpwardSlack;
}

ComparisonBounds comparison_bounds(int64_t d, int64_t n) {
    if (d < 1 || n < d) throw std::invalid_argument("comparison_bounds needs n >= d >= 1");
    ComparisonBounds out;
    out.hirsch = Integer(n) - d;
    if (n >= 2 * d) out.klee_walkup_lower = Integer(n) - d + d / 5;
    if (d >= 3) {
        out.barnette = Integer(n) * pow(Integer(3), static_cast<unsigned>(d - 3));
        out.larman = Integer(n) * pow(Integer(2), static_cast<unsigned>(d - 3));
    }
    if (n > d) {
        const long double gap = static_cast<long double>(n - d);
        out.kalai_subexp = exp2l(sqrtl(gap * log2l(gap))) * kUpwardSlack;
    }
    return out;
}

GridReport verify_theorem_grid(int64_t d_max, int64_t n_max, BoundTable& table) {
    if (d_max < 3 || n_max < d_max + 1)
        throw std::invalid_argument("grid needs d_max >= 3 and n_max >= d_max + 1");
    GridReport report;
    for (int64_t d = 3; d <= d_max; ++d) {
        for (int64_t n = d + 1; n <= n_max; ++n) {
            const Integer& f = table.value(d, n);
            const long double bound = quasipoly_bound(d, n);
            const long double ratio = f.convert_to<long double>() / bound;
            ++report.cells_checked;
            if (ratio > report.max_ratio) {
                report.max_ratio = ratio;
                report.argmax_d = d;
                report.argmax_n = n;
            }
            if (f.convert_to<long double>() > bound)
                report.violations.push_back({d, n, f, bound});
        }
    }
    return report;
}

}  // namespace polydiam
