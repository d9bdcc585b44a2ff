#pragma once

/**
 * @file cyclestruct.hpp
 * @brief Cycle structures of Rédei permutations from divisor and order data.
 *
 * Everything here is field-free: a Rédei permutation is identified by
 * (m, q, chi) and only the group order q - chi matters, apart from the
 * 1 + chi extra fixed points contributed when a is a square.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "redei/chi.hpp"
#include "redei/cycle_structure.hpp"

namespace redei {

/// A group order n = q - chi with its factorization and ascending divisors.
class Modulus {
public:
    explicit Modulus(std::uint64_t n);
    Modulus(std::uint64_t q, Chi chi) : Modulus(group_order(q, chi)) {}

    std::uint64_t value() const { return n_; }
    /// (prime, exponent), primes ascending.
    const std::vector<std::pair<std::uint64_t, unsigned>>& prime_powers() const { return primes_; }
    const std::vector<std::uint64_t>& divisors() const { return divisors_; }
    /// phi(d) for divisors()[i].
    const std::vector<std::uint64_t>& divisor_phis() const { return phis_; }
    unsigned exponent_of(std::uint64_t p) const;
    bool is_unit(std::uint64_t m) const;
    /// Units in [1, n), ascending.
    std::vector<std::uint64_t> units() const;

private:
    std::uint64_t n_;
    std::vector<std::pair<std::uint64_t, unsigned>> primes_;
    std::vector<std::uint64_t> divisors_;
    std::vector<std::uint64_t> phis_;
};

/// (1 + chi) fixed points plus phi(d)/o_d(m) cycles of length o_d(m) for every d | q - chi.
CycleStructure structure_formula(std::uint64_t m, std::uint64_t q, Chi chi);
CycleStructure structure_formula(std::uint64_t m, const Modulus& mod, Chi chi);

/// gcd(m - 1, q - chi) + chi + 1.
std::uint64_t fixed_count(std::uint64_t m, std::uint64_t q, Chi chi);

/// Fixed points of the r-th iterate: gcd(m^r - 1, q - chi) + chi + 1.
std::uint64_t fixed_count_iter(std::uint64_t m, std::uint64_t r, std::uint64_t q, Chi chi);

/// Compares fixed-point counts of every iterate r dividing lcm(o(m), o(n)),
/// orders taken modulo q - chi. Fixed-point counts of any iterate depend only
/// on which cycle lengths divide it, and all cycle lengths divide those orders.
bool same_structure_criterion(std::uint64_t m, std::uint64_t n, std::uint64_t q, Chi chi);
bool same_structure_criterion(std::uint64_t m, std::uint64_t n, const Modulus& mod);

/// gcd(m^r - 1, p^alpha) = gcd(n^r - 1, p^alpha) for all r >= 1, decided from
/// o_p and at most two gcd comparisons.
bool prime_power_gcd_equal(std::uint64_t p, unsigned alpha, std::uint64_t m, std::uint64_t n);

/// Membership of (m, n) in S_chi^q by the divisor characterization. Both
/// arguments must be units modulo q - chi.
bool in_S_theorem(std::uint64_t m, std::uint64_t n, std::uint64_t q, Chi chi);
bool in_S_theorem(std::uint64_t m, std::uint64_t n, const Modulus& mod);

/// Like in_S_theorem but returns false when either value is not a unit, so it
/// can be asked about arbitrary shifted or reflected pairs.
bool in_S(std::uint64_t m, std::uint64_t n, const Modulus& mod);

/// Whether (m, m + (q - chi)/2) is a same-structure pair. False whenever
/// nu_2(q - chi) = 1, since the shifted exponent is then even.
bool half_shift_criterion(std::uint64_t m, std::uint64_t q, Chi chi);

}  // namespace redei
