#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "redei/bigint.hpp"

namespace redei {

/// Multiset of cycle lengths: length -> number of cycles of that length.
/// Zero multiplicities are never stored, so equality is plain map equality.
class CycleStructure {
public:
    CycleStructure() = default;

    /// Adds `count` cycles of length `length`. Adding zero is a no-op.
    void add(std::uint64_t length, const BigInt& count);

    const std::map<std::uint64_t, BigInt>& counts() const { return counts_; }
    BigInt multiplicity(std::uint64_t length) const;
    /// Sum of length * multiplicity: the size of the underlying set.
    BigInt total_mass() const;
    /// Same structure with `count` fewer fixed points; throws if there are not that many.
    CycleStructure without_fixed_points(std::uint64_t count) const;
    bool empty() const { return counts_.empty(); }

    /// {"1":2,"4":2,"20":2}: keys ascending numerically. Counts beyond 64 bits
    /// are written as decimal strings.
    std::string to_json() const;
    /// Human form, e.g. "2x{1} + 2xCyc(4) + 2xCyc(20)".
    std::string to_text() const;

    bool operator==(const CycleStructure&) const = default;

private:
    std::map<std::uint64_t, BigInt> counts_;
};

}  // namespace redei
