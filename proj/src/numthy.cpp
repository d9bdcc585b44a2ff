#include "redei/numthy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace redei {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (u64 i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(static_cast<std::uint32_t>(i));
            for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 block = 128;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_u64_into(u64 n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[BigInt(n)];
        return;
    }
    u64 d = pollard_brent(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

BigInt pollard_rho_big(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned c = 1;; ++c) {
        BigInt x = 2, y = 2, g = 1;
        auto f = [&](const BigInt& v) { return (v * v + c) % n; };
        while (g == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = x > y ? BigInt(x - y) : BigInt(y - x);
            g = boost::multiprecision::gcd(diff, n);
        }
        if (g != n) return g;
    }
}

void factor_big_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (fits_u64(n)) {
        factor_u64_into(static_cast<u64>(n), out);
        return;
    }
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho_big(n);
    factor_big_into(d, out);
    factor_big_into(n / d, out);
}

PrimeFactorization assemble(const BigInt& value, const std::map<BigInt, unsigned>& counts) {
    PrimeFactorization f;
    f.value = value;
    for (const auto& [p, e] : counts) f.factors.push_back({p, e});
    return f;
}

u64 checked_mul(u64 a, u64 b) {
    u128 r = static_cast<u128>(a) * b;
    if (r > std::numeric_limits<u64>::max()) throw std::overflow_error("divisor exceeds 64 bits");
    return static_cast<u64>(r);
}

/// nu_p(m^theta - 1) for m^theta != 1, via residues modulo growing powers of p.
unsigned exact_val_power_minus_one(u64 p, u64 m, u64 theta) {
    unsigned e = 4;
    for (;;) {
        BigInt pe = boost::multiprecision::pow(BigInt(p), e);
        BigInt x = boost::multiprecision::powm(BigInt(m), BigInt(theta), pe);
        x = (x + pe - 1) % pe;
        if (x != 0) return nu(BigInt(p), x);
        e *= 2;
    }
}

}  // namespace

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw std::overflow_error("value " + v.str() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

BigInt PrimeFactorization::product() const {
    BigInt r = 1;
    for (const auto& pp : factors) r *= boost::multiprecision::pow(pp.prime, pp.exponent);
    return r;
}

unsigned PrimeFactorization::exponent_of(const BigInt& p) const {
    for (const auto& pp : factors)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
    if (n == 1) return 0;
    u64 result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) { return checked_mul(a / std::gcd(a, b), b); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is exact for all n < 3.3 * 10^24.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(static_cast<u64>(n));
    for (std::uint32_t p : small_primes()) {
        if (p > 1000) break;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeFactorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<BigInt, unsigned> counts;
    u64 rest = n;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<u64>(p) * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        counts[BigInt(p)] = e;
    }
    factor_u64_into(rest, counts);
    return assemble(BigInt(n), counts);
}

PrimeFactorization factorize(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    if (fits_u64(n)) return factorize(static_cast<u64>(n));
    std::map<BigInt, unsigned> counts;
    BigInt rest = n;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        counts[BigInt(p)] = e;
    }
    factor_big_into(rest, counts);
    return assemble(n, counts);
}

std::vector<u64> divisors(const PrimeFactorization& f) {
    to_u64(f.value);
    std::vector<u64> primes;
    std::vector<unsigned> limits;
    for (const auto& pp : f.factors) {
        primes.push_back(static_cast<u64>(pp.prime));
        limits.push_back(pp.exponent);
    }
    std::vector<unsigned> odometer(primes.size(), 0);
    std::vector<u64> out;
    for (;;) {
        u64 d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (unsigned j = 0; j < odometer[i]; ++j) d *= primes[i];
        out.push_back(d);
        std::size_t i = 0;
        while (i < odometer.size() && odometer[i] == limits[i]) odometer[i++] = 0;
        if (i == odometer.size()) break;
        ++odometer[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt euler_phi(const PrimeFactorization& f) {
    BigInt r = 1;
    for (const auto& pp : f.factors)
        r *= boost::multiprecision::pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    return r;
}

u64 euler_phi(u64 n) { return static_cast<u64>(euler_phi(factorize(n))); }

PrimePower prime_power_decomposition(const BigInt& n) {
    if (n < 2) return {0, 0};
    PrimeFactorization f = factorize(n);
    if (f.factors.size() != 1) return {0, 0};
    return f.factors.front();
}

u64 mult_order(u64 m, u64 d) {
    if (d == 0) throw std::invalid_argument("mult_order: modulus must be positive");
    if (d == 1) return 1;
    m %= d;
    if (std::gcd(m, d) != 1)
        throw std::invalid_argument("mult_order: " + std::to_string(m) + " is not a unit modulo " +
                                    std::to_string(d));
    u64 order = euler_phi(d);
    for (const auto& pp : factorize(order).factors) {
        u64 p = static_cast<u64>(pp.prime);
        while (order % p == 0 && pow_mod(m, order / p, d) == 1) order /= p;
    }
    return order;
}

unsigned nu(u64 p, u64 z) {
    if (p < 2) throw std::invalid_argument("nu: p must be prime");
    if (z == 0) throw std::invalid_argument("nu: valuation of 0 is infinite");
    if (p == 2) return static_cast<unsigned>(std::countr_zero(z));
    unsigned v = 0;
    while (z % p == 0) {
        z /= p;
        ++v;
    }
    return v;
}

unsigned nu(const BigInt& p, const BigInt& z) {
    if (p < 2) throw std::invalid_argument("nu: p must be prime");
    if (z == 0) throw std::invalid_argument("nu: valuation of 0 is infinite");
    BigInt rest = abs(z);
    if (p == 2) return static_cast<unsigned>(boost::multiprecision::lsb(rest));
    unsigned v = 0;
    while (rest % p == 0) {
        rest /= p;
        ++v;
    }
    return v;
}

unsigned val_power_minus_one(u64 p, u64 m, u64 r) {
    if (!is_prime(p)) throw std::invalid_argument("val_power_minus_one: p must be prime");
    if (r == 0) throw std::invalid_argument("val_power_minus_one: r must be positive");
    if (m % p == 0) throw std::invalid_argument("val_power_minus_one: p divides m");
    if (m == 1) throw std::invalid_argument("val_power_minus_one: m^r - 1 = 0 has infinite valuation");

    if (p != 2 || nu(2, m - 1) > 1) {
        u64 theta = mult_order(m % p, p);
        if (r % theta != 0) return 0;
        return exact_val_power_minus_one(p, m, theta) + nu(p, r / theta);
    }
    if (r % 2 == 1) return nu(2, m - 1);
    BigInt m2 = BigInt(m) * m - 1;
    return nu(BigInt(2), m2) + nu(2, r) - 1;
}

u64 gcd_mpow_minus_one(u64 m, u64 r, u64 n) {
    if (n == 0) throw std::invalid_argument("gcd_mpow_minus_one: n must be positive");
    if (n == 1) return 1;
    u64 x = pow_mod(m, r, n);
    u64 y = (x + n - 1) % n;
    return y == 0 ? n : std::gcd(y, n);
}

BigInt gcd_mpow_minus_one(const BigInt& m, const BigInt& r, const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("gcd_mpow_minus_one: n must be positive");
    if (m < 0 || r < 0) throw std::invalid_argument("gcd_mpow_minus_one: negative input");
    if (n == 1) return 1;
    BigInt x = boost::multiprecision::powm(BigInt(m % n), r, n);
    BigInt y = (x + n - 1) % n;
    return y == 0 ? n : BigInt(boost::multiprecision::gcd(y, n));
}

}  // namespace redei
