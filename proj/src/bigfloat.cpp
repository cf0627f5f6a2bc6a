#include "regprime/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace regprime {

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Integer& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rational& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(std::size_t digits) const {
    mpfr_exp_t exp;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    if (mant.empty()) return sign + "0";
    return sign + "0." + mant + "e" + std::to_string(exp);
}

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(join(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

void BigFloat::sin_cos_2pi(BigFloat& s, BigFloat& c, std::int64_t num, std::uint64_t den,
                           mpfr_prec_t prec) {
    // theta = 2*pi*num/den with num reduced into [0, den) first, so the
    // argument passed to mpfr stays in [0, 2*pi).
    std::int64_t n = num % static_cast<std::int64_t>(den);
    if (n < 0) n += static_cast<std::int64_t>(den);
    const mpfr_prec_t work = prec + 32;
    BigFloat theta(work);
    mpfr_const_pi(theta.v_, MPFR_RNDN);
    mpfr_mul_si(theta.v_, theta.v_, 2 * n, MPFR_RNDN);
    mpfr_div_ui(theta.v_, theta.v_, static_cast<unsigned long>(den), MPFR_RNDN);
    BigFloat sw(work), cw(work);
    mpfr_sin_cos(sw.v_, cw.v_, theta.v_, MPFR_RNDN);
    s = BigFloat(prec);
    c = BigFloat(prec);
    mpfr_set(s.v_, sw.v_, MPFR_RNDN);
    mpfr_set(c.v_, cw.v_, MPFR_RNDN);
}

}  // namespace regprime
