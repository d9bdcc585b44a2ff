#pragma once

/**
 * @file numthy.hpp
 * @brief Exact integer kernel: factorization, totient, multiplicative order,
 * p-adic valuations and gcd(m^r - 1, n) without forming m^r.
 *
 * Everything here is a pure function of its arguments.
 */

#include <cstdint>
#include <vector>

#include "redei/bigint.hpp"

namespace redei {

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Factored form of a positive integer; primes strictly increasing.
struct PrimeFactorization {
    BigInt value = 1;
    std::vector<PrimePower> factors;

    /// Product of the prime powers (equals value for a well-formed object).
    BigInt product() const;
    /// Exponent of p in value, 0 if p does not divide it.
    unsigned exponent_of(const BigInt& p) const;

    bool operator==(const PrimeFactorization&) const = default;
};

PrimeFactorization factorize(const BigInt& n);
PrimeFactorization factorize(std::uint64_t n);

/// All positive divisors in ascending order. Requires value to fit 64 bits.
std::vector<std::uint64_t> divisors(const PrimeFactorization& f);

std::uint64_t euler_phi(std::uint64_t n);
BigInt euler_phi(const PrimeFactorization& f);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Deterministic below 2^64, strong-probable-prime test above.
bool is_probable_prime(const BigInt& n);

/// If n = p^e with p prime and e >= 1, returns {p, e}; otherwise {0, 0}.
PrimePower prime_power_decomposition(const BigInt& n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Least t >= 1 with m^t = 1 (mod d). Throws std::invalid_argument unless gcd(m, d) = 1.
std::uint64_t mult_order(std::uint64_t m, std::uint64_t d);

/// Exponent of the prime p in z. Throws std::invalid_argument for z = 0.
unsigned nu(std::uint64_t p, std::uint64_t z);
unsigned nu(const BigInt& p, const BigInt& z);

/**
 * nu_p(m^r - 1) by lifting the exponent:
 *  - p odd, or p = 2 with nu_2(m - 1) > 1: 0 unless o_p(m) | r, otherwise
 *    nu_p(m^theta - 1) + nu_p(r / theta);
 *  - p = 2 otherwise: nu_2(m - 1) for odd r, nu_2(m^2 - 1) + nu_2(r) - 1 for even r.
 * Rejects p | m and m = 1 (the valuation of 0 is infinite).
 */
unsigned val_power_minus_one(std::uint64_t p, std::uint64_t m, std::uint64_t r);

/// gcd(m^r - 1, n) through modular exponentiation; gcd(0, n) = n.
std::uint64_t gcd_mpow_minus_one(std::uint64_t m, std::uint64_t r, std::uint64_t n);
BigInt gcd_mpow_minus_one(const BigInt& m, const BigInt& r, const BigInt& n);

}  // namespace redei
