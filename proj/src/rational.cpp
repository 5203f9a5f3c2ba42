#include "polydiam/rational.hpp"

#include <stdexcept>

namespace polydiam {

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty rational token");
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(token), Integer(1));
        }
        if (slash == 0 || slash + 1 == token.size() || token.find('/', slash + 1) != std::string::npos)
            throw std::invalid_argument("bad fraction");
        Integer num(token.substr(0, slash));
        Integer den(token.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);  // the two-integer ctor canonicalizes
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + token + "'");
    }
}

std::string format_rational(const Rational& value) {
    return value.str();
}

bool is_canonical(const Rational& value) {
    if (denominator(value) <= 0) return false;
    Integer g = gcd(Integer(abs(numerator(value))), Integer(denominator(value)));
    if (numerator(value) == 0) return denominator(value) == 1;
    return g == 1;
}

}  // namespace polydiam
