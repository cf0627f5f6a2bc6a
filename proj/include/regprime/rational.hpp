#pragma once

#include <gmpxx.h>

#include <string>

namespace regprime {

// Exact arbitrary-precision integers and fractions. A Rational is always in
// lowest terms with positive denominator; zero is 0/1 (GMP canonical form,
// maintained by every helper below).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// n mod p for word-sized p, result in [0, p)
inline std::uint64_t mod_ui(const Integer& n, std::uint64_t p) {
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace regprime
