#include "redei/cyclestruct.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "redei/numthy.hpp"

namespace redei {

namespace {

using u64 = std::uint64_t;

u64 ipow(u64 p, unsigned e) {
    u64 r = 1;
    while (e--) r *= p;
    return r;
}

void require_unit(const Modulus& mod, u64 m, const char* what) {
    if (!mod.is_unit(m))
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(m) + " is not coprime to " +
                                    std::to_string(mod.value()));
}

}  // namespace

Modulus::Modulus(u64 n) : n_(n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    PrimeFactorization f = factorize(n);
    for (const auto& pp : f.factors) primes_.emplace_back(static_cast<u64>(pp.prime), pp.exponent);
    divisors_ = redei::divisors(f);
    phis_.reserve(divisors_.size());
    for (u64 d : divisors_) {
        u64 phi = d;
        for (const auto& [p, e] : primes_)
            if (d % p == 0) phi = phi / p * (p - 1);
        phis_.push_back(phi);
    }
}

unsigned Modulus::exponent_of(u64 p) const {
    for (const auto& [prime, e] : primes_)
        if (prime == p) return e;
    return 0;
}

bool Modulus::is_unit(u64 m) const { return std::gcd(m % n_, n_) == 1; }

std::vector<u64> Modulus::units() const {
    std::vector<u64> out;
    for (u64 m = 1; m < n_ || (n_ == 1 && m == 1); ++m)
        if (is_unit(m)) out.push_back(m);
    return out;
}

CycleStructure structure_formula(u64 m, const Modulus& mod, Chi chi) {
    require_unit(mod, m, "structure_formula");
    CycleStructure s;
    const auto& divs = mod.divisors();
    for (std::size_t i = 0; i < divs.size(); ++i) {
        u64 order = mult_order(m % divs[i], divs[i]);
        s.add(order, mod.divisor_phis()[i] / order);
    }
    if (chi == Chi::square) s.add(1, 2);
    return s;
}

CycleStructure structure_formula(u64 m, u64 q, Chi chi) { return structure_formula(m, Modulus(q, chi), chi); }

u64 fixed_count(u64 m, u64 q, Chi chi) {
    Modulus mod(q, chi);
    require_unit(mod, m, "fixed_count");
    u64 g = std::gcd((m % mod.value() + mod.value() - 1) % mod.value(), mod.value());
    return g + (chi == Chi::square ? 2 : 0);
}

u64 fixed_count_iter(u64 m, u64 r, u64 q, Chi chi) {
    if (r == 0) throw std::invalid_argument("fixed_count_iter: r must be positive");
    u64 n = group_order(q, chi);
    if (std::gcd(m % n, n) != 1) throw std::invalid_argument("fixed_count_iter: m is not a unit");
    return gcd_mpow_minus_one(m, r, n) + (chi == Chi::square ? 2 : 0);
}

bool same_structure_criterion(u64 m, u64 n, const Modulus& mod) {
    require_unit(mod, m, "same_structure_criterion");
    require_unit(mod, n, "same_structure_criterion");
    const u64 N = mod.value();
    u64 horizon = lcm_u64(mult_order(m % N, N), mult_order(n % N, N));
    for (u64 r : divisors(factorize(horizon)))
        if (gcd_mpow_minus_one(m, r, N) != gcd_mpow_minus_one(n, r, N)) return false;
    return true;
}

bool same_structure_criterion(u64 m, u64 n, u64 q, Chi chi) {
    return same_structure_criterion(m, n, Modulus(q, chi));
}

bool prime_power_gcd_equal(u64 p, unsigned alpha, u64 m, u64 n) {
    if (!is_prime(p)) throw std::invalid_argument("prime_power_gcd_equal: p must be prime");
    if (alpha == 0) throw std::invalid_argument("prime_power_gcd_equal: alpha must be positive");
    if (m % p == 0 || n % p == 0) throw std::invalid_argument("prime_power_gcd_equal: p divides m or n");
    const u64 theta = mult_order(m % p, p);
    if (mult_order(n % p, p) != theta) return false;
    if (alpha == 1) return true;
    const u64 pa = ipow(p, alpha);
    if (p != 2) return gcd_mpow_minus_one(m, theta, pa) == gcd_mpow_minus_one(n, theta, pa);
    if (gcd_mpow_minus_one(m, 1, pa) != gcd_mpow_minus_one(n, 1, pa)) return false;
    if (m == 1 || nu(2, m - 1) > 1) return true;
    return gcd_mpow_minus_one(m, 2, pa) == gcd_mpow_minus_one(n, 2, pa);
}

bool in_S_theorem(u64 m, u64 n, const Modulus& mod) {
    require_unit(mod, m, "in_S_theorem");
    require_unit(mod, n, "in_S_theorem");
    const u64 N = mod.value();
    m %= N;
    n %= N;
    if (m == n) return true;
    // n = m + k N/d with d = N / gcd(n - m, N) a proper divisor of N.
    const u64 d = N / std::gcd(m > n ? m - n : n - m, N);
    for (const auto& [p, alpha] : mod.prime_powers()) {
        if (d % p != 0) continue;
        if (n % p == 0) return false;
        const u64 theta = mult_order(m % p, p);
        if (nu(p, d) == alpha && mult_order(n % p, p) != theta) return false;
        if (alpha == 1) continue;
        const u64 pa = ipow(p, alpha);
        if (gcd_mpow_minus_one(m, theta, pa) != gcd_mpow_minus_one(n, theta, pa)) return false;
        if (p == 2 && m != 1 && nu(2, m - 1) == 1 &&
            gcd_mpow_minus_one(m, 2, pa) != gcd_mpow_minus_one(n, 2, pa))
            return false;
    }
    return true;
}

bool in_S_theorem(u64 m, u64 n, u64 q, Chi chi) { return in_S_theorem(m, n, Modulus(q, chi)); }

bool in_S(u64 m, u64 n, const Modulus& mod) {
    if (!mod.is_unit(m) || !mod.is_unit(n)) return false;
    return in_S_theorem(m, n, mod);
}

bool half_shift_criterion(u64 m, u64 q, Chi chi) {
    const u64 N = group_order(q, chi);
    if (std::gcd(m % N, N) != 1) throw std::invalid_argument("half_shift_criterion: m is not a unit");
    const unsigned alpha = nu(2, N);
    if (alpha == 1) return false;
    return m % (u64{1} << (alpha - 1)) != 1;
}

}  // namespace redei
