#pragma once

#include <cstdint>
#include <vector>

namespace regprime {

// Deterministic primality by trial division; intended for desk-scale inputs.
bool is_prime(std::uint64_t n);

// Ascending list of primes in [lo, hi].
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// b^e mod m, m < 2^32.
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Least f > 0 with a^f = 1 mod p; requires gcd(a, p) = 1, p prime.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

}  // namespace regprime
