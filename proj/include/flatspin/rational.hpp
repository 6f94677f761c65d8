#pragma once

#include <gmpxx.h>

#include <string>

namespace flatspin {

// Arbitrary-precision rational, always canonical (reduced, positive denominator).
// mpq_class maintains this invariant for all arithmetic; only raw construction
// from num/den or strings needs an explicit canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" form; "p" alone when the denominator is 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s);

} // namespace flatspin
