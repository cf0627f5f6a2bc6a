#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "regprime/rational.hpp"

namespace regprime {

// Dense univariate polynomial over Q, constant term first. No trailing zero
// coefficients are stored; the zero polynomial has an empty coefficient list
// and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& a) { return Polynomial({a}); }
    // a * x^k
    static Polynomial monomial(const Rational& a, std::size_t k);
    // x^n - 1
    static Polynomial x_pow_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(std::size_t i) const;
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Euclidean division a = q*b + r with deg r < deg b. Throws on zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Exact quotient; throws if the remainder is nonzero.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace regprime
