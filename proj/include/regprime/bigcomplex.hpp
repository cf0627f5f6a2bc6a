#pragma once

#include <cstdint>

#include "regprime/bigfloat.hpp"

namespace regprime {

// Arbitrary-precision complex value with explicit precision and a tracked
// absolute error bound per component. Bounds are propagated pessimistically:
// sums of bounds for add/sub, the product rule plus rounding slack for mul,
// a monotone derivative bound for log on arguments away from 0. The bound is
// sound in the sense that recomputing the same pipeline at twice the
// precision moves each component by less than error_bound.
class BigComplex {
  public:
    BigFloat re, im;
    mpfr_prec_t precision_bits;
    double error_bound;

    explicit BigComplex(mpfr_prec_t prec)
        : re(prec), im(prec), precision_bits(prec), error_bound(0.0) {}

    static BigComplex of(const Rational& x, mpfr_prec_t prec);
    static BigComplex of(const Rational& x, const Rational& y, mpfr_prec_t prec);
    // exp(2*pi*i*k/n)
    static BigComplex root_of_unity(std::int64_t k, std::uint64_t n, mpfr_prec_t prec);

    double re_d() const { return re.to_double(); }
    double im_d() const { return im.to_double(); }
    BigFloat modulus() const { return hypot(re, im); }
    double modulus_d() const { return modulus().to_double(); }

    BigComplex conj() const;
    BigComplex operator-() const;
    BigComplex divided_by(unsigned long n) const;
    BigComplex scaled(const Rational& q) const;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);

    // Principal-branch complex logarithm; requires |z| > sqrt(2)*error_bound.
    friend BigComplex log_principal(const BigComplex& z);

    // |a - b| as a double, ignoring error bounds.
    static double distance_d(const BigComplex& a, const BigComplex& b);
};

// Nearest integer to x.
Integer round_nearest(const BigFloat& x);

}  // namespace regprime
