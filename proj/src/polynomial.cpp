#include "regprime/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace regprime {

namespace {
const Rational kZero = 0;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& a, std::size_t k) {
    if (a == 0) return Polynomial();
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = a;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::x_pow_minus_one(std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = -1;
    c[n] = 1;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

Rational Polynomial::leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& a, const Polynomial& b) {
    if (a == 0) return Polynomial();
    std::vector<Rational> c(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = a * b.c_[i];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> r = a.c_;
    const std::size_t dq = a.c_.size() - b.c_.size();
    std::vector<Rational> q(dq + 1, Rational(0));
    const Rational& lb = b.c_.back();
    for (std::size_t k = dq + 1; k-- > 0;) {
        Rational f = r[k + b.c_.size() - 1] / lb;
        if (f == 0) continue;
        q[k] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[k + i] -= f * b.c_[i];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
    return q;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace regprime
