#ifndef POLYDIAM_RATIONAL_HPP
#define POLYDIAM_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace polydiam {

// All core geometry runs on exact arbitrary-precision rationals.
// Values are kept canonical (denominator > 0, gcd(|num|, den) = 1);
// the parse boundary canonicalizes, arithmetic preserves the form.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Parse "p/q" or "p" (optional sign). Throws std::invalid_argument on
/// malformed input or zero denominator. Result is canonical.
Rational parse_rational(const std::string& token);

/// Format as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

bool is_canonical(const Rational& value);

}  // namespace polydiam

#endif
