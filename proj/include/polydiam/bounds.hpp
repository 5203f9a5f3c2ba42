#ifndef POLYDIAM_BOUNDS_HPP
#define POLYDIAM_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydiam/rational.hpp"

namespace polydiam {

/**
 * Memoized table of the recurrence
 *
 *   f(d, n) = f(d-1, n-1) + 2 f(d, floor(n/2)) + 2
 *
 * standing in for the maximal diameter of d-dimensional polyhedra with n
 * facets. Base cases (policy "v1"): f(d, n) = 0 for n <= d (at most one
 * vertex), f(1, n) = 1 for n >= 2, f(2, n) = max(0, n-2) (the graph of a
 * 2-dimensional pointed polyhedron is a path or cycle on <= n vertices),
 * f(d, d+1) = 1 (all vertex pairs adjacent). Each base is itself a valid
 * diameter upper bound for its cell, so the whole table dominates the true
 * maximum. Values are exact integers; no floating point enters the fill.
 */
class BoundTable {
  public:
    explicit BoundTable(std::string policy_id = "v1");

    const std::string& policy_id() const { return policy_id_; }

    /// f(d, n); memoized, exact.
    const Integer& value(int64_t d, int64_t n);

    /// Re-check the recurrence identity at every memoized recursive cell.
    /// Returns offending (d, n) cells (empty when consistent).
    std::vector<std::pair<int64_t, int64_t>> recheck_identity();

    size_t memo_size() const { return memo_.size(); }

  private:
    std::string policy_id_;
    std::map<std::pair<int64_t, int64_t>, Integer> memo_;
};

/// Convenience single-shot f(d, n) on a thread-local table.
Integer kk_recurrence(int64_t d, int64_t n);

/**
 * n^(log2 d + 2) in extended precision, inflated by a relative 2^-30 so
 * "value <= bound" comparisons cannot fail from rounding alone.
 */
long double quasipoly_bound(int64_t d, int64_t n);

/// Comparison formulas evaluated at (d, n). Fields are absent where the
/// formula does not apply: the lower bound needs n >= 2d, the two
/// exponential upper bounds need d >= 3, the subexponential one n > d.
struct ComparisonBounds {
    Integer hirsch;                            // n - d
    std::optional<Integer> klee_walkup_lower;  // n - d + floor(d/5), for n >= 2d
    std::optional<Integer> barnette;           // n * 3^(d-3), for d >= 3
    std::optional<Integer> larman;             // n * 2^(d-3), for d >= 3
    std::optional<long double> kalai_subexp;   // 2^sqrt((n-d) log2(n-d)), for n > d
};

ComparisonBounds comparison_bounds(int64_t d, int64_t n);

struct GridCell {
    int64_t d = 0, n = 0;
    Integer value;
    long double bound = 0.0L;
};

struct GridReport {
    int64_t cells_checked = 0;
    std::vector<GridCell> violations;  // empty on success
    long double max_ratio = 0.0L;
    int64_t argmax_d = 0, argmax_n = 0;
};

/// Check f(d, n) <= n^(log2 d + 2) for all 3 <= d <= d_max, d < n <= n_max.
GridReport verify_theorem_grid(int64_t d_max, int64_t n_max, BoundTable& table);

}  // namespace polydiam

#endif
