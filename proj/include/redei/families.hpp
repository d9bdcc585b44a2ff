#pragma once

/**
 * @file families.hpp
 * @brief Closed-form families of same-structure pairs.
 *
 * Each family returns a FamilyPrediction: the pair (reduced modulo q - chi),
 * whether it belongs to S_chi^q according to the family's criterion, and the
 * predicted cycle structure when a closed form exists. Violated preconditions
 * raise FamilyPreconditionError rather than producing a prediction.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "redei/bigint.hpp"
#include "redei/chi.hpp"
#include "redei/cycle_structure.hpp"

namespace redei {

class FamilyPreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Sign : int { minus = -1, plus = 1 };

/// gcd(c^k + sign_k, c^l + sign_l) from the closed forms; c >= 2, k, l >= 1.
BigInt gcd_power_pm(const BigInt& c, std::uint64_t k, std::uint64_t l, Sign sign_k, Sign sign_l);

struct FamilyPrediction {
    std::string family;
    BigInt q;
    Chi chi = Chi::square;
    BigInt m;
    BigInt n;
    std::optional<CycleStructure> structure;
    bool applicable = false;
    std::string reason;
};

/// (p^l1, p^l2) over F_{p^k}. Structures are predicted only for prime k.
FamilyPrediction frobenius_family(std::uint64_t p, std::uint64_t k, std::uint64_t l1, std::uint64_t l2, Chi chi);

/// (p, q - p + 1) for q a power of p.
FamilyPrediction p_qmp1_family(std::uint64_t p, const BigInt& q, Chi chi);

/// ((q-chi)/4 + 1, 3(q-chi)/4 + 1). Requires q = chi (mod 8).
FamilyPrediction quarter_family(const BigInt& q, Chi chi);

/// ((q-chi+-2)/4, (q-chi+-4)/2). Requires q = chi +- 2 (mod 8). No structure is predicted.
FamilyPrediction pm2_family(const BigInt& q, Chi chi);

/**
 * Cross-checks a prediction against the divisor formulas: membership must
 * match in_S_theorem and a predicted structure must equal structure_formula
 * of both coordinates. Returns a description of the first disagreement.
 * Requires q - chi to fit in 64 bits.
 */
std::optional<std::string> family_mismatch(const FamilyPrediction& prediction);

}  // namespace redei
