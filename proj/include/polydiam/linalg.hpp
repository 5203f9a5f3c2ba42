#ifndef POLYDIAM_LINALG_HPP
#define POLYDIAM_LINALG_HPP

#include <optional>

#include "polydiam/rational.hpp"

namespace polydiam {

/// Rank over the rationals, by plain rational Gaussian elimination with
/// partial pivoting on the first nonzero entry.
int rank(const RMatrix& m);

/// Solve the square system m*x = b exactly. Returns std::nullopt when m is
/// singular. Throws std::invalid_argument on dimension mismatch.
std::optional<RVector> solve_square(const RMatrix& m, const RVector& b);

/// A nonzero vector v with m*v = 0, or std::nullopt when m has full column
/// rank. Used for extreme-ray directions of constraint cones.
std::optional<RVector> kernel_vector(const RMatrix& m);

}  // namespace polydiam

#endif
