#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace henselize {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exponent of the prime p in a nonzero integer.
inline long padic_order(const Integer& n, unsigned long p) {
    if (n == 0) throw precondition_error("padic_order of zero");
    Integer m = abs(n);
    long k = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++k;
    }
    return k;
}

inline long padic_order(const Rational& x, unsigned long p) {
    return padic_order(x.get_num(), p) - padic_order(x.get_den(), p);
}

inline bool is_probable_prime(unsigned long p) {
    if (p < 2) return false;
    Integer n(p);
    return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

/// Canonical residue of n modulo m in [0, m).
inline Integer mod_floor(const Integer& n, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw precondition_error("element is not invertible modulo " + m.get_str());
    return r;
}

inline Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace henselize
