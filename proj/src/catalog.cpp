#include "redei/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "redei/cyclestruct.hpp"
#include "redei/numthy.hpp"
#include "redei/parallel.hpp"

namespace redei {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 add_mod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<u128>(a % n) + b % n) % n); }
u64 sub_mod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<u128>(a % n) + n - b % n) % n); }

void require_in_S(u64 m, u64 n, const Modulus& mod, const char* what) {
    if (!in_S(m, n, mod))
        throw std::invalid_argument(std::string(what) + ": (" + std::to_string(m) + ", " + std::to_string(n) +
                                    ") is not a same-structure pair");
}

u64 two_power_gcd(u64 x, unsigned alpha) { return std::gcd(x, u64{1} << alpha); }

}  // namespace

void require_odd_prime_power(u64 q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be a power of an odd prime");
    if (prime_power_decomposition(BigInt(q)).exponent == 0)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

std::vector<StructureClass> enumerate_classes(u64 q, Chi chi) {
    require_odd_prime_power(q);
    const Modulus mod(q, chi);
    const std::vector<u64> units = mod.units();
    std::vector<CycleStructure> structures(units.size());
    parallel_for(units.size(), [&](std::size_t i) { structures[i] = structure_formula(units[i], mod, chi); });

    std::vector<StructureClass> classes;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < units.size(); ++i) {
        auto [it, inserted] = index.emplace(structures[i].to_json(), classes.size());
        if (inserted) classes.push_back({structures[i], {}});
        classes[it->second].members.push_back(units[i]);
    }
    return classes;
}

PairCatalog enumerate_pairs(u64 q, Chi chi) {
    PairCatalog cat{q, chi, {}};
    for (const auto& cls : enumerate_classes(q, chi)) {
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            for (std::size_t j = i + 1; j < cls.members.size(); ++j)
                if (cls.members[i] > 1) cat.pairs.emplace_back(cls.members[i], cls.members[j]);
    }
    std::sort(cat.pairs.begin(), cat.pairs.end());
    return cat;
}

std::vector<u64> isolated_list(u64 q, Chi chi) {
    std::vector<u64> out;
    for (const auto& cls : enumerate_classes(q, chi))
        if (cls.members.size() == 1) out.push_back(cls.members.front());
    std::sort(out.begin(), out.end());
    return out;
}

u64 isolated_count_formula(u64 q, Chi chi) {
    require_odd_prime_power(q);
    const Modulus mod(q, chi);
    unsigned odd_primes = 0;
    for (const auto& [p, e] : mod.prime_powers())
        if (p != 2) ++odd_primes;
    const unsigned alpha0 = mod.exponent_of(2);
    return u64{1} << (alpha0 == 1 ? odd_primes : odd_primes + 1);
}

std::optional<u64> power_companion(u64 m, u64 q, Chi chi) {
    const u64 N = group_order(q, chi);
    if (std::gcd(m % N, N) != 1) throw std::invalid_argument("power_companion: m is not a unit");
    const u64 rho = mult_order(m % N, N);
    if (rho <= 2) return std::nullopt;
    return pow_mod(m, rho - 1, N);
}

bool shift_pair_valid(u64 m, u64 n, u64 k, u64 d, u64 q, Chi chi) {
    const Modulus mod(q, chi);
    const u64 N = mod.value();
    if (d == 0 || N % d != 0 || d == N)
        throw std::invalid_argument("shift_pair_valid: d must be a proper divisor of " + std::to_string(N));
    require_in_S(m, n, mod, "shift_pair_valid");
    const u64 shift = mul_mod(k % d, N / d, N);
    const u64 ms = add_mod(m, shift, N);
    const u64 ns = add_mod(n, shift, N);
    for (const auto& [p, alpha] : mod.prime_powers()) {
        if (d % p != 0) continue;
        if (ms % p == 0 || ns % p == 0) return false;
        const u64 theta = mult_order(ms % p, p);
        if (mult_order(ns % p, p) != theta) return false;
        u64 pa = 1;
        for (unsigned i = 0; i < alpha; ++i) pa *= p;
        if (gcd_mpow_minus_one(ms, theta, pa) != gcd_mpow_minus_one(ns, theta, pa)) return false;
        if (p == 2 && alpha > 1 && ms != 1 && nu(2, ms - 1) == 1 &&
            gcd_mpow_minus_one(ms, 2, pa) != gcd_mpow_minus_one(ns, 2, pa))
            return false;
    }
    return true;
}

bool half_shift_pair(u64 m, u64 n, u64 q, Chi chi) {
    const Modulus mod(q, chi);
    const u64 N = mod.value();
    if (mod.exponent_of(2) <= 1) throw std::invalid_argument("half_shift_pair: needs nu_2(q - chi) > 1");
    return in_S(add_mod(m, N / 2, N), add_mod(n, N / 2, N), mod);
}

bool negate_pair_valid(u64 m, u64 n, u64 q, Chi chi) {
    const Modulus mod(q, chi);
    require_in_S(m, n, mod, "negate_pair_valid");
    const unsigned alpha = mod.exponent_of(2);
    return two_power_gcd(m + 1, alpha) == two_power_gcd(n + 1, alpha);
}

bool half_minus_pair_valid(u64 m, u64 n, u64 q, Chi chi) {
    const Modulus mod(q, chi);
    const unsigned alpha = mod.exponent_of(2);
    if (alpha <= 1) throw std::invalid_argument("half_minus_pair_valid: needs nu_2(q - chi) > 1");
    require_in_S(m, n, mod, "half_minus_pair_valid");
    return two_power_gcd(m + 1, alpha) == two_power_gcd(n + 1, alpha);
}

bool cross_field_shift(u64 m, u64 q, u64 qbar, u64 p, Chi chi) {
    require_odd_prime_power(q);
    require_odd_prime_power(qbar);
    if (!is_prime(p)) throw std::invalid_argument("cross_field_shift: p must be prime");
    const Modulus mod(q, chi);
    const Modulus bar(qbar, chi);
    const unsigned alpha = mod.exponent_of(p);
    if (alpha == 0 || bar.exponent_of(p) != alpha)
        throw std::invalid_argument("cross_field_shift: p must divide both group orders to the same power");
    u64 pa = 1;
    for (unsigned i = 0; i < alpha; ++i) pa *= p;
    if ((mod.value() / pa + bar.value() / pa) % p != 0)
        throw std::invalid_argument("cross_field_shift: cofactor congruence does not hold");
    if (!mod.is_unit(m) || !bar.is_unit(m))
        throw std::invalid_argument("cross_field_shift: m must be a unit modulo both group orders");

    const bool left = in_S(m, add_mod(m, mod.value() / p, mod.value()), mod);
    const bool right = in_S(m, sub_mod(m, bar.value() / p, bar.value()), bar);
    if (left != right)
        throw std::logic_error("cross-field shift biconditional failed for m = " + std::to_string(m) +
                               ", q = " + std::to_string(q) + ", qbar = " + std::to_string(qbar));
    return left;
}

std::optional<Involution> involution_m_for_divisor(u64 d, u64 q, Chi chi) {
    const Modulus mod(q, chi);
    const u64 N = mod.value();
    if (d == 0 || d >= N || N % d != 0)
        throw std::invalid_argument("involution_m_for_divisor: d must be a proper divisor of " + std::to_string(N));

    for (const auto& [p, alpha] : mod.prime_powers()) {
        if (p == 2) continue;
        unsigned beta = d % p == 0 ? nu(p, d) : 0;
        if (beta != 0 && beta != alpha) return std::nullopt;
    }
    const unsigned alpha0 = mod.exponent_of(2);
    const unsigned beta0 = d % 2 == 0 ? nu(2, d) : 0;
    const u64 phi = euler_phi(d);
    const u64 step = N / d;

    if (beta0 >= 1 && (beta0 + 1 == alpha0 || beta0 == alpha0)) {
        u64 k = beta0 + 1 == alpha0 ? (pow_mod(N / (2 * d), phi - 1, d) + d / 2) % d
                                    : mul_mod(2, pow_mod(step, phi - 1, d), d);
        u64 m = sub_mod(mul_mod(k, step, N), 1, N);
        return Involution{Involution::Kind::isolated, {m}};
    }
    if (alpha0 >= 3 && beta0 == 1) {
        u64 k = pow_mod(N / (2 * d), phi - 1, d);
        u64 m = sub_mod(mul_mod(k, step, N), 1, N);
        u64 n = add_mod(m, N / 2, N);
        std::vector<u64> values{std::min(m, n), std::max(m, n)};
        return Involution{Involution::Kind::paired, values};
    }
    return std::nullopt;
}

}  // namespace redei
