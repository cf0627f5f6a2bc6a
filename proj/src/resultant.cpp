#include "regprime/resultant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace regprime {

namespace {

// Minimal dense integer polynomial for the PRS; constant term first,
// no trailing zeros.
struct IntPoly {
    std::vector<Integer> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Integer& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

Integer pow_i(const Integer& b, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("subresultant: inexact division");
    return q;
}

IntPoly scale(const IntPoly& a, const Integer& s) {
    IntPoly r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] * s;
    r.trim();
    return r;
}

IntPoly divide_coeffs(const IntPoly& a, const Integer& s) {
    IntPoly r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = exact_div(a.c[i], s);
    r.trim();
    return r;
}

Integer content(const IntPoly& a) {
    Integer g = 0;
    for (const Integer& x : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g == 0 ? Integer(1) : g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. Requires deg a >= deg b >= 0.
IntPoly prem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    int e = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Integer la = a.lc();
        a = scale(a, b.lc());
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<std::size_t>(i + shift)] -= la * b.c[static_cast<std::size_t>(i)];
        a.trim();
        --e;
    }
    if (e > 0) a = scale(a, pow_i(b.lc(), e));
    return a;
}

// Subresultant PRS on primitive integer polynomials, deg a >= deg b >= 1.
// Flips `sign` where the PRS implicitly swaps two odd-degree polynomials.
Integer resultant_primitive(IntPoly a, IntPoly b, int& sign) {
    Integer g = 1, h = 1;
    while (true) {
        const int d = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = prem(a, b);
        const Integer divisor = g * pow_i(h, d);
        a = std::move(b);
        g = a.lc();
        if (d > 0) h = exact_div(pow_i(g, d), pow_i(h, d - 1));
        if (r.is_zero()) return 0;  // nonconstant common factor
        b = divide_coeffs(r, divisor);
        if (b.degree() == 0) {
            return exact_div(pow_i(b.lc(), a.degree()), pow_i(h, a.degree() - 1));
        }
    }
}

// Clears denominators: returns (d * p) over Z together with d.
std::pair<IntPoly, Integer> to_integer_poly(const Polynomial& p) {
    Integer d = 1;
    for (const Rational& a : p.coeffs())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.get_den().get_mpz_t());
    IntPoly out;
    out.c.reserve(p.coeffs().size());
    for (const Rational& a : p.coeffs()) {
        Rational scaled = a * Rational(d);
        out.c.push_back(scaled.get_num());
    }
    out.trim();
    return {std::move(out), d};
}

Rational pow_q(const Rational& b, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
    return r;
}

}  // namespace

Rational resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("undefined resultant");
    const int df = f.degree(), dg = g.degree();
    if (df == 0) return pow_q(f.coeff(0), static_cast<unsigned long>(dg));

    auto [F, cf] = to_integer_poly(f);
    auto [G, cg] = to_integer_poly(g);

    int sign = 1;
    if (F.degree() < G.degree()) {
        std::swap(F, G);
        if ((df & 1) && (dg & 1)) sign = -sign;
    }
    Integer res_int;
    if (G.degree() == 0) {
        res_int = pow_i(G.lc(), F.degree());
    } else {
        const Integer ca = content(F), cb = content(G);
        F = divide_coeffs(F, ca);
        G = divide_coeffs(G, cb);
        const Integer t = pow_i(ca, G.degree()) * pow_i(cb, F.degree());
        res_int = t * resultant_primitive(std::move(F), std::move(G), sign);
    }
    if (sign < 0) res_int = -res_int;

    // Undo the denominator clearing: Res(cf*f, cg*g) = cf^dg * cg^df * Res(f, g).
    Rational r(res_int, pow_i(cf, dg) * pow_i(cg, df));
    r.canonicalize();
    return r;
}

}  // namespace regprime
