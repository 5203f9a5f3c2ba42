#include "polydiam/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace polydiam {

namespace {

// Row-echelon reduction in place. Returns the pivot column of each pivot
// row. Columns >= pivot_limit ride along in row operations but are not
// eligible as pivots (used to carry an augmented right-hand side).
std::vector<int> eliminate(RMatrix& w, int pivot_limit) {
    const int rows = static_cast<int>(w.rows());
    const int cols = static_cast<int>(w.cols());
    std::vector<int> pivot_cols;
    int lead = 0;
    for (int col = 0; col < pivot_limit && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r) {
            if (w(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) w.row(pivot).swap(w.row(lead));
        for (int r = lead + 1; r < rows; ++r) {
            if (w(r, col) == 0) continue;
            Rational factor = w(r, col) / w(lead, col);
            for (int c = col; c < cols; ++c) w(r, c) -= factor * w(lead, c);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    return pivot_cols;
}

}  // namespace

int rank(const RMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    RMatrix w = m;
    return static_cast<int>(eliminate(w, static_cast<int>(w.cols())).size());
}

std::optional<RVector> solve_square(const RMatrix& m, const RVector& b) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("solve_square: matrix is not square");
    if (b.size() != n) throw std::invalid_argument("solve_square: right-hand side has wrong length");

    RMatrix w(n, n + 1);
    w.leftCols(n) = m;
    w.col(n) = b;
    std::vector<int> pivots = eliminate(w, n);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;

    RVector x = RVector::Zero(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = w(r, n);
        for (int c = r + 1; c < n; ++c) acc -= w(r, c) * x(c);
        x(r) = acc / w(r, r);
    }
    return x;
}

std::optional<RVector> kernel_vector(const RMatrix& m) {
    const int cols = static_cast<int>(m.cols());
    RMatrix w = m;
    std::vector<int> pivot_cols = eliminate(w, cols);
    if (static_cast<int>(pivot_cols.size()) == cols) return std::nullopt;

    // First free column; back-substitute with that coordinate fixed at 1.
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    int free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;

    RVector v = RVector::Zero(cols);
    v(free_col) = 1;
    for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
        const int pc = pivot_cols[r];
        Rational acc = 0;
        for (int c = pc + 1; c < cols; ++c) acc -= w(r, c) * v(c);
        v(pc) = acc / w(r, pc);
    }
    return v;
}

}  // namespace polydiam
