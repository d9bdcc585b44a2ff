#pragma once

/**
 * @file sweep.hpp
 * @brief Exhaustive property sweeps comparing the formulas with each other and
 * with the brute-force oracles. Each sweep reports how many cases it checked
 * and the first counterexample, if any.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace redei {

struct PropertyReport {
    std::string name;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;

    bool ok() const { return !counterexample.has_value(); }
};

/// Odd prime powers in [3, qmax], ascending.
std::vector<std::uint64_t> odd_prime_powers(std::uint64_t qmax);

/// structure_formula against the permutation of P^1(F_q) with a = canonical_a, every unit m.
PropertyReport check_oracle_equivalence(std::uint64_t qmax);

/// For every odd prime power q with q - chi <= nmax and all unit pairs:
/// in_S_theorem, structure equality and same_structure_criterion agree; in_S_theorem is symmetric.
PropertyReport check_theorem_equivalence(std::uint64_t nmax);

/// Rédei structure against x -> m x on Z_{q-chi} and x -> x^m on the cyclic group of order q - chi.
PropertyReport check_transfer(std::uint64_t qmax);

/// Isolated counts, isolated members are involutions, involution classes have at most two members,
/// and power companions stay in their class.
PropertyReport check_isolated(std::uint64_t qmax);

/// involution_m_for_divisor outputs against the set of involutions with the matching fixed-point count.
PropertyReport check_involutions(std::uint64_t qmax);

/// Shift, half-shift, negation and half-minus conditions against direct membership; cross-field shifts.
PropertyReport check_symmetries(std::uint64_t qmax);

struct FamilyLimits {
    std::uint64_t frobenius_max = 2187;   // p^k bound
    std::uint64_t congruence_max = 400;   // q bound for the quarter and +-2 families
    std::uint64_t p_qmp1_max = 10'000;    // q bound for (p, q - p + 1)
    std::uint64_t oracle_max = 10'000;    // q + 1 bound for brute-force confirmation
};

PropertyReport check_families(const FamilyLimits& limits);

/// Classes for q = 49 and both characters against the reference listing.
PropertyReport check_q49_classes();

/// All sweeps at the scale of qmax (symmetries and involutions capped at 200).
std::vector<PropertyReport> run_verify(std::uint64_t qmax);

}  // namespace redei
