#pragma once

/**
 * @file redei_map.hpp
 * @brief Rédei functions on P^1(F_q) and the brute-force oracles built on them.
 *
 * R_{m,a}(x) = N/D where (x + s)^m = N + D s in F_q[s]/(s^2 - a), with
 * R(infinity) = infinity and R(x) = infinity when D = 0. No square root of a
 * is ever needed, so squares and non-squares go through the same code.
 */

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "redei/cycle_structure.hpp"
#include "redei/gf.hpp"

namespace redei {

/// Largest domain the exhaustive oracles will walk.
inline constexpr std::uint64_t kOraclePointCap = 1'000'000;

class NotAPermutation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// N + D s in F_q[s]/(s^2 - a).
struct QuadRingElement {
    FieldElement n_part;
    FieldElement d_part;

    bool operator==(const QuadRingElement&) const = default;
};

class QuadraticRing {
public:
    /// Throws std::invalid_argument for a = 0.
    QuadraticRing(const Field& field, FieldElement a);

    QuadRingElement mul(const QuadRingElement& x, const QuadRingElement& y) const;
    QuadRingElement pow(QuadRingElement x, std::uint64_t e) const;

private:
    const Field* field_;
    FieldElement a_;
};

ProjectivePoint redei_eval(const Field& field, std::uint64_t m, const FieldElement& a, const ProjectivePoint& x);

/// A permutation of P^1(F_q) as an index map over projective_line(field).
struct PermutationTable {
    std::vector<ProjectivePoint> domain;
    std::vector<std::uint32_t> image;

    bool is_bijection() const;
};

/// Tabulates R_{m,a}. Throws NotAPermutation when gcd(m, q - chi(a)) != 1.
PermutationTable build_permutation(const Field& field, std::uint64_t m, const FieldElement& a);

/// Orbit walk over an index permutation.
CycleStructure cycle_decomposition(const PermutationTable& table);
CycleStructure cycle_decomposition(const std::vector<std::uint32_t>& image);

/// Cycle structure of x -> m x on Z_n. Requires gcd(m, n) = 1.
CycleStructure mult_map_structure(std::uint64_t m, std::uint64_t n);

enum class Subgroup { units, norm_one };

/// The cyclic group F_q^* (units) or U_{q+1} inside F_{q^2}^* (norm_one),
/// listed once so that many power maps can be walked over it.
class PowerMapDomain {
public:
    PowerMapDomain(const FieldSpec& base, Subgroup which);

    std::uint64_t order() const { return elements_.size(); }
    const Field& ambient() const { return ambient_; }
    const std::vector<FieldElement>& elements() const { return elements_; }

    /// Cycle structure of x -> x^m. Requires gcd(m, order) = 1.
    CycleStructure structure(std::uint64_t m) const;

private:
    Field ambient_;
    std::vector<FieldElement> elements_;
    std::unordered_map<std::uint64_t, std::uint32_t> position_;
};

CycleStructure power_map_structure(const FieldSpec& base, std::uint64_t m, Subgroup which);

/// CSV with header "point,image"; elements in colon form, "inf" for infinity.
void write_permutation_csv(std::ostream& out, const Field& field, const PermutationTable& table);

}  // namespace redei
