#include "redei/cycle_structure.hpp"

#include <stdexcept>

#include "json.hpp"
#include "redei/report.hpp"

namespace redei {

void CycleStructure::add(std::uint64_t length, const BigInt& count) {
    if (length == 0) throw std::invalid_argument("cycle length must be positive");
    if (count < 0) throw std::invalid_argument("cycle count must be nonnegative");
    if (count == 0) return;
    counts_[length] += count;
}

BigInt CycleStructure::multiplicity(std::uint64_t length) const {
    auto it = counts_.find(length);
    return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt CycleStructure::total_mass() const {
    BigInt total = 0;
    for (const auto& [len, count] : counts_) total += count * len;
    return total;
}

CycleStructure CycleStructure::without_fixed_points(std::uint64_t count) const {
    CycleStructure out = *this;
    auto it = out.counts_.find(1);
    BigInt have = it == out.counts_.end() ? BigInt(0) : it->second;
    if (have < count) throw std::invalid_argument("not enough fixed points to remove");
    if (have == count) {
        if (it != out.counts_.end()) out.counts_.erase(it);
    } else {
        it->second -= count;
    }
    return out;
}

std::string CycleStructure::to_json() const { return structure_json(*this).dump(); }

std::string CycleStructure::to_text() const {
    if (counts_.empty()) return "(empty)";
    std::string out;
    for (const auto& [len, count] : counts_) {
        if (!out.empty()) out += " + ";
        out += count.str() + (len == 1 ? "x{1}" : "xCyc(" + std::to_string(len) + ")");
    }
    return out;
}

}  // namespace redei
