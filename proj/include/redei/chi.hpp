#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redei {

/// Quadratic character of the Rédei parameter a.
enum class Chi : int { nonsquare = -1, square = 1 };

constexpr int to_int(Chi chi) { return static_cast<int>(chi); }

inline Chi chi_from_int(long long v) {
    if (v == 1) return Chi::square;
    if (v == -1) return Chi::nonsquare;
    throw std::invalid_argument("chi must be +1 or -1, got " + std::to_string(v));
}

/// q - chi, the order of the cyclic group governing the Rédei permutations.
inline std::uint64_t group_order(std::uint64_t q, Chi chi) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd integer >= 3");
    return chi == Chi::square ? q - 1 : q + 1;
}

}  // namespace redei
