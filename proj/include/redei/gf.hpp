#pragma once

/**
 * @file gf.hpp
 * @brief Arithmetic in F_{p^k}, p odd, plus the projective line over it.
 *
 * Elements are coefficient vectors (constant term first) modulo a monic
 * irreducible polynomial. Enumeration order is odometer order with the
 * constant term fastest, so element i has coefficients given by the base-p
 * digits of i. The projective line lists the q field elements in that order
 * followed by infinity.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "redei/chi.hpp"

namespace redei {

/// Upper bound on k; p^k <= kMaxFieldOrder with p >= 3 keeps k below this.
inline constexpr std::size_t kMaxExtensionDegree = 26;
inline constexpr std::uint64_t kMaxFieldOrder = 1'000'000'000'000ULL;

/// Validated description of F_{p^k}. Immutable once built.
class FieldSpec {
public:
    /// Checks p odd prime, k >= 1, modulus monic of degree k and irreducible.
    FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    /// k + 1 coefficients, constant term first, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// {"p":..,"k":..,"modulus":[..]}
    std::string to_json() const;

    bool operator==(const FieldSpec&) const = default;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
};

/// F_{p^k} with the lexicographically smallest monic irreducible modulus
/// (coefficient vectors compared with the constant term most significant).
FieldSpec build_field(std::uint64_t p, unsigned k);

/// True iff the monic polynomial (constant term first) is irreducible over Z_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p);

class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(std::span<const std::uint32_t> coefficients);

    std::span<const std::uint32_t> coefficients() const { return {c_.data(), k_}; }
    unsigned degree_bound() const { return k_; }
    bool is_zero() const;

    std::uint32_t operator[](std::size_t i) const { return c_[i]; }
    std::uint32_t& operator[](std::size_t i) { return c_[i]; }

    bool operator==(const FieldElement& o) const;

private:
    friend class Field;
    std::array<std::uint32_t, kMaxExtensionDegree> c_{};
    unsigned k_ = 0;
};

struct Infinity {
    bool operator==(const Infinity&) const = default;
};

using ProjectivePoint = std::variant<FieldElement, Infinity>;

inline bool is_infinity(const ProjectivePoint& x) { return std::holds_alternative<Infinity>(x); }

/// Arithmetic context over a FieldSpec. Stateless apart from the spec.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint64_t p() const { return spec_.p(); }
    unsigned k() const { return spec_.k(); }
    std::uint64_t q() const { return spec_.q(); }

    FieldElement zero() const;
    FieldElement one() const;
    /// Lifts an integer into the prime subfield.
    FieldElement constant(std::uint64_t c) const;
    /// Element number `index` in enumeration order, index < q.
    FieldElement element(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& x) const;
    /// Validates length and residue range.
    FieldElement from_coefficients(std::span<const std::uint32_t> coefficients) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement pow(FieldElement x, std::uint64_t e) const;
    /// Throws std::domain_error for zero.
    FieldElement inv(const FieldElement& x) const;
    bool eq(const FieldElement& x, const FieldElement& y) const { return x == y; }

    /// Colon-separated residues, constant term first ("3" in a prime field).
    std::string format(const FieldElement& x) const;
    std::string format(const ProjectivePoint& x) const;
    /// Inverse of format; "inf" parses to infinity.
    ProjectivePoint parse_point(const std::string& text) const;

private:
    FieldSpec spec_;
    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> neg_modulus_;  // p - f_j for j < k
};

/// Chi::square iff a^((q-1)/2) = 1. Throws for a = 0.
Chi quadratic_character(const Field& field, const FieldElement& a);

/// First nonzero element in enumeration order whose character equals chi.
FieldElement canonical_a(const Field& field, Chi chi);

/// The q + 1 points of P^1(F_q): elements in enumeration order, infinity last.
std::vector<ProjectivePoint> projective_line(const Field& field);

}  // namespace redei
