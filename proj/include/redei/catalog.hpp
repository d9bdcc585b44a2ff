#pragma once

/**
 * @file catalog.hpp
 * @brief Whole-field analysis: same-structure classes, the pair set S_chi^q,
 * isolated permutations, involution parameters and the pair symmetries.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "redei/chi.hpp"
#include "redei/cycle_structure.hpp"

namespace redei {

/// Throws std::invalid_argument unless q is a power of an odd prime.
void require_odd_prime_power(std::uint64_t q);

struct StructureClass {
    CycleStructure structure;
    std::vector<std::uint64_t> members;  // ascending, units in [1, q - chi)
};

struct PairCatalog {
    std::uint64_t q = 0;
    Chi chi = Chi::square;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // 1 < m < n < q - chi, lexicographic
};

/// Classes ordered by smallest member; the identity class {1} comes first.
std::vector<StructureClass> enumerate_classes(std::uint64_t q, Chi chi);

PairCatalog enumerate_pairs(std::uint64_t q, Chi chi);

/// Members of singleton classes, ascending.
std::vector<std::uint64_t> isolated_list(std::uint64_t q, Chi chi);

/// 2^r if nu_2(q - chi) = 1 and 2^(r+1) otherwise, r = number of odd primes dividing q - chi.
std::uint64_t isolated_count_formula(std::uint64_t q, Chi chi);

/// m^(rho-1) mod (q - chi) when rho = o_{q-chi}(m) > 2; nothing for involutions and the identity.
std::optional<std::uint64_t> power_companion(std::uint64_t m, std::uint64_t q, Chi chi);

/// For (m, n) in S, whether shifting both by k (q - chi)/d stays in S, decided
/// prime by prime over the primes dividing d. d must be a proper divisor.
bool shift_pair_valid(std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q, Chi chi);

/// Membership of (m + (q-chi)/2, n + (q-chi)/2). Requires nu_2(q - chi) > 1.
bool half_shift_pair(std::uint64_t m, std::uint64_t n, std::uint64_t q, Chi chi);

/// For (m, n) in S: whether (q-chi-m, q-chi-n) is in S, i.e.
/// gcd(m + 1, 2^alpha) = gcd(n + 1, 2^alpha) with alpha = nu_2(q - chi).
bool negate_pair_valid(std::uint64_t m, std::uint64_t n, std::uint64_t q, Chi chi);

/// For (m, n) in S with nu_2(q - chi) > 1: whether ((q-chi)/2 - m, (q-chi)/2 - n)
/// is in S. Same gcd test as negate_pair_valid.
bool half_minus_pair_valid(std::uint64_t m, std::uint64_t n, std::uint64_t q, Chi chi);

/**
 * Compares (m, m + (q-chi)/p) in S_chi^q with (m, m - (qbar-chi)/p) in
 * S_chi^qbar. Requires nu_p(q-chi) = nu_p(qbar-chi) = alpha > 0,
 * (q-chi)/p^alpha + (qbar-chi)/p^alpha = 0 (mod p), and m a unit modulo both
 * group orders. Throws std::logic_error if the two memberships disagree;
 * otherwise returns the common value.
 */
bool cross_field_shift(std::uint64_t m, std::uint64_t q, std::uint64_t qbar, std::uint64_t p, Chi chi);

struct Involution {
    enum class Kind { isolated, paired };
    Kind kind = Kind::isolated;
    /// One value for an isolated involution, the two members {m, m + (q-chi)/2} otherwise.
    std::vector<std::uint64_t> values;
};

/// The involution(s) with d + chi + 1 fixed points, or nullopt if none exists.
/// d must be a proper divisor of q - chi.
std::optional<Involution> involution_m_for_divisor(std::uint64_t d, std::uint64_t q, Chi chi);

}  // namespace redei
