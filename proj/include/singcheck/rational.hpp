#pragma once

#include <gmpxx.h>

#include <string>

namespace singcheck {

// All coefficient arithmetic is exact: rationals in lowest terms with
// positive denominator, arbitrary-precision integers underneath.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

} // namespace singcheck
