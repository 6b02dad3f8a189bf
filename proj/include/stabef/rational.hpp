#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace stabef {

// Exact rational scalar used throughout. GMP-backed; values are kept in
// canonical form (gcd(num, den) = 1, den > 0) by the backend for all
// arithmetic constructors. String parsing below canonicalizes explicitly
// because the raw string constructor does not.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical form "p/q" with q >= 1; integers are written "p/1".
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal digits with an optional leading minus; GMP's own parser is too
// permissive (accepts "" and embedded whitespace).
inline Integer parse_integer(const std::string& text) {
    size_t i = text.size() > 0 && text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw FormatError("bad integer '" + text + "'");
    for (size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9') throw FormatError("bad integer '" + text + "'");
    return Integer(text);
}

// Accepts "p/q" or a bare integer "p". Throws FormatError on junk or q = 0.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw FormatError("rational with zero denominator: " + text);
    return Rational(num, den);  // (num, den) ctor canonicalizes
}

}  // namespace stabef
