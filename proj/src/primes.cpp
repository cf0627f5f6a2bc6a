#include "regprime/primes.hpp"

#include <stdexcept>

namespace regprime {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi && n >= lo; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw std::domain_error("pow_mod: zero modulus");
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("multiplicative_order: modulus not prime");
    a %= p;
    if (a == 0) throw std::domain_error("multiplicative_order: argument divisible by modulus");
    // order divides p-1; strip prime factors while the power stays 1
    std::uint64_t order = p - 1;
    for (std::uint64_t q : distinct_prime_factors(p - 1)) {
        while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
    }
    return order;
}

}  // namespace regprime
