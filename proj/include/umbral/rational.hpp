#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

namespace umbral {

// Exact rational coefficients.  mpq_class keeps values canonical: always
// reduced, denominator positive.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
    return r.get_num();  // caller checks is_integer
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace umbral
