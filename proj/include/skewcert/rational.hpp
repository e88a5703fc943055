#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional sign; q must be positive after
// canonicalization.  Anything else is a ParseError.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char ch : text) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw ParseError("bad rational literal: " + text);
    }
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + text);
    }
}

// Always "p" or "p/q" with q > 1, matching parse_rational.
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Floor square root is exact only for perfect squares.
inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt root = sqrt(n);
    if (root * root != n) return std::nullopt;
    return root;
}

// Rational square root when it exists: p/q in lowest terms is a square
// iff p and q are both perfect squares.
inline std::optional<Rational> exact_rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto num = exact_isqrt(numerator(r));
    if (!num) return std::nullopt;
    auto den = exact_isqrt(denominator(r));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace skewcert
