#pragma once

#include <gmpxx.h>

#include <string>

#include "socle/error.hpp"

namespace socle {

/// Exact arbitrary-precision rational. GMP's mpq_class already maintains
/// the canonical form we require: positive denominator, reduced fraction,
/// zero stored as 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional sign.
inline Rational rational_from_string(const std::string& text) {
    try {
        Rational r(text);
        if (r.get_den() == 0) throw ParseError("rational: zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("rational: cannot parse '" + text + "'");
    }
}

/// Prints "p" or "p/q", matching the textual grammar used everywhere.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace socle
