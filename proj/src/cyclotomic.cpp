#include "regprime/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

namespace regprime {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::domain_error("euler_phi(0)");
    unsigned result = n;
    unsigned m = n;
    for (unsigned d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Polynomial cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic_polynomial(0)");
    // Phi_d bottom-up over the divisors of n.
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) divisors.push_back(d);
    }
    std::vector<Polynomial> phi(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const unsigned d = divisors[i];
        Polynomial quotient = Polynomial::x_pow_minus_one(d);
        for (std::size_t j = 0; j < i; ++j) {
            if (d % divisors[j] == 0) quotient = Polynomial::exact_div(quotient, phi[j]);
        }
        phi[i] = quotient;
    }
    return phi.back();
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(unsigned n) {
    if (n == 0) throw std::domain_error("CyclotomicField: order must be positive");
    return std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
}

CycQ::CycQ(std::shared_ptr<const CyclotomicField> field, Polynomial rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
    if (!field_) throw std::invalid_argument("CycQ: null field");
    if (rep_.degree() >= static_cast<int>(field_->degree())) {
        rep_ = Polynomial::divmod(rep_, field_->modulus()).second;
    }
}

CycQ CycQ::zero(std::shared_ptr<const CyclotomicField> field) {
    return CycQ(std::move(field), Polynomial());
}

CycQ CycQ::one(std::shared_ptr<const CyclotomicField> field) {
    return CycQ(std::move(field), Polynomial::constant(1));
}

CycQ CycQ::from_rational(std::shared_ptr<const CyclotomicField> field, const Rational& a) {
    return CycQ(std::move(field), Polynomial::constant(a));
}

CycQ CycQ::root_power(std::shared_ptr<const CyclotomicField> field, std::int64_t e) {
    const std::int64_t n = static_cast<std::int64_t>(field->order());
    std::int64_t k = e % n;
    if (k < 0) k += n;
    return CycQ(std::move(field), Polynomial::monomial(1, static_cast<std::size_t>(k)));
}

Rational CycQ::as_rational() const {
    if (!is_rational()) throw std::domain_error("CycQ: value is not rational");
    return rep_.coeff(0);
}

CycQ CycQ::galois(std::int64_t t) const {
    const std::int64_t n = static_cast<std::int64_t>(field_->order());
    std::int64_t tr = t % n;
    if (tr < 0) tr += n;
    if (std::gcd(tr, n) != 1)
        throw std::domain_error("CycQ::galois: exponent not coprime to root order");
    std::vector<Rational> out(field_->order(), Rational(0));
    for (int i = 0; i <= rep_.degree(); ++i) {
        const Rational& a = rep_.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        out[static_cast<std::size_t>(static_cast<std::int64_t>(i) * tr % n)] += a;
    }
    return CycQ(field_, Polynomial(std::move(out)));
}

CycQ operator+(const CycQ& a, const CycQ& b) {
    if (a.field_->order() != b.field_->order()) throw std::domain_error("CycQ: mixed fields");
    return CycQ(a.field_, a.rep_ + b.rep_);
}

CycQ operator-(const CycQ& a, const CycQ& b) {
    if (a.field_->order() != b.field_->order()) throw std::domain_error("CycQ: mixed fields");
    return CycQ(a.field_, a.rep_ - b.rep_);
}

CycQ operator*(const CycQ& a, const CycQ& b) {
    if (a.field_->order() != b.field_->order()) throw std::domain_error("CycQ: mixed fields");
    return CycQ(a.field_, a.rep_ * b.rep_);
}

CycQ operator*(const Rational& a, const CycQ& b) { return CycQ(b.field_, a * b.rep_); }

CycQ CycQ::operator-() const { return CycQ(field_, -rep_); }

bool operator==(const CycQ& a, const CycQ& b) {
    return a.field_->order() == b.field_->order() && a.rep_ == b.rep_;
}

}  // namespace regprime
