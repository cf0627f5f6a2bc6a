#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "regprime/rational.hpp"

namespace regprime {

// RAII wrapper over mpfr_t. Every value carries its own precision; no global
// precision state is read or written. Binary operations round to the larger
// of the operand precisions (nearest).
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long x, mpfr_prec_t prec);
    static BigFloat of(double x, mpfr_prec_t prec);
    static BigFloat of(const Integer& x, mpfr_prec_t prec);
    static BigFloat of(const Rational& x, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(std::size_t digits = 0) const;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

    BigFloat abs() const;
    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);

    // sin and cos of 2*pi*num/den, computed at `prec` with an argument guard.
    static void sin_cos_2pi(BigFloat& s, BigFloat& c, std::int64_t num, std::uint64_t den,
                            mpfr_prec_t prec);

  private:
    mpfr_t v_;
};

}  // namespace regprime
