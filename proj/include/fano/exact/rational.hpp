#pragma once

#include <gmpxx.h>

#include <string>

namespace fano {

/// Arbitrary-precision rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (sgn(r.get_num()) == 0) return r.get_den() == 1;
    return g == 1;
}

}  // namespace fano
