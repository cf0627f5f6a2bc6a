#pragma once

#include <cstdint>
#include <memory>

#include "regprime/polynomial.hpp"

namespace regprime {

unsigned euler_phi(unsigned n);

// n-th cyclotomic polynomial, integer coefficients, degree phi(n); computed
// by exact division of x^n - 1 by the product of Phi_d over proper divisors.
Polynomial cyclotomic_polynomial(unsigned n);

// Q(zeta_n) as Q[x] / Phi_n(x). Shared immutable context for CycQ values.
class CyclotomicField {
  public:
    static std::shared_ptr<const CyclotomicField> make(unsigned n);

    unsigned order() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
    const Polynomial& modulus() const { return modulus_; }

  private:
    explicit CyclotomicField(unsigned n) : n_(n), modulus_(cyclotomic_polynomial(n)) {}
    unsigned n_;
    Polynomial modulus_;
};

// Element of Q(zeta_n), stored as the canonical representative of degree
// < phi(n). Immutable value type; all operations are pure.
class CycQ {
  public:
    CycQ(std::shared_ptr<const CyclotomicField> field, Polynomial rep);

    static CycQ zero(std::shared_ptr<const CyclotomicField> field);
    static CycQ one(std::shared_ptr<const CyclotomicField> field);
    static CycQ from_rational(std::shared_ptr<const CyclotomicField> field, const Rational& a);
    // zeta_n^e
    static CycQ root_power(std::shared_ptr<const CyclotomicField> field, std::int64_t e);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    // Constant-term value; throws unless is_rational().
    Rational as_rational() const;

    // Automorphism zeta |-> zeta^t for t coprime to n.
    CycQ galois(std::int64_t t) const;
    // zeta |-> zeta^{-1}, i.e. complex conjugation.
    CycQ conjugate() const { return galois(-1); }

    friend CycQ operator+(const CycQ& a, const CycQ& b);
    friend CycQ operator-(const CycQ& a, const CycQ& b);
    friend CycQ operator*(const CycQ& a, const CycQ& b);
    friend CycQ operator*(const Rational& a, const CycQ& b);
    CycQ operator-() const;
    friend bool operator==(const CycQ& a, const CycQ& b);

  private:
    std::shared_ptr<const CyclotomicField> field_;
    Polynomial rep_;
};

}  // namespace regprime
