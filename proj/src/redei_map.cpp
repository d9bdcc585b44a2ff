#include "redei/redei_map.hpp"

#include <numeric>
#include <string>

#include "redei/numthy.hpp"

namespace redei {

QuadraticRing::QuadraticRing(const Field& field, FieldElement a) : field_(&field), a_(std::move(a)) {
    if (a_.is_zero()) throw std::invalid_argument("Rédei parameter a must be nonzero");
}

QuadRingElement QuadraticRing::mul(const QuadRingElement& x, const QuadRingElement& y) const {
    const Field& f = *field_;
    FieldElement nn = f.mul(x.n_part, y.n_part);
    FieldElement dd = f.mul(x.d_part, y.d_part);
    FieldElement nd = f.add(f.mul(x.n_part, y.d_part), f.mul(y.n_part, x.d_part));
    return {f.add(nn, f.mul(a_, dd)), nd};
}

QuadRingElement QuadraticRing::pow(QuadRingElement x, std::uint64_t e) const {
    QuadRingElement result{field_->one(), field_->zero()};
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return result;
}

ProjectivePoint redei_eval(const Field& field, std::uint64_t m, const FieldElement& a, const ProjectivePoint& x) {
    if (m == 0) throw std::invalid_argument("Rédei exponent m must be positive");
    QuadraticRing ring(field, a);
    if (is_infinity(x)) return Infinity{};
    QuadRingElement r = ring.pow({std::get<FieldElement>(x), field.one()}, m);
    if (r.d_part.is_zero()) return Infinity{};
    return field.mul(r.n_part, field.inv(r.d_part));
}

bool PermutationTable::is_bijection() const {
    if (image.size() != domain.size()) return false;
    std::vector<bool> seen(image.size(), false);
    for (auto i : image) {
        if (i >= image.size() || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

PermutationTable build_permutation(const Field& field, std::uint64_t m, const FieldElement& a) {
    if (m == 0) throw std::invalid_argument("Rédei exponent m must be positive");
    const std::uint64_t q = field.q();
    if (q + 1 > kOraclePointCap) throw std::invalid_argument("field too large for an explicit permutation table");
    const Chi chi = quadratic_character(field, a);
    const std::uint64_t order = group_order(q, chi);
    if (std::gcd(m, order) != 1)
        throw NotAPermutation("R_{" + std::to_string(m) + ",a} does not permute P^1(F_" + std::to_string(q) +
                              "): gcd(m, " + std::to_string(order) + ") != 1");

    QuadraticRing ring(field, a);
    PermutationTable table;
    table.domain = projective_line(field);
    table.image.resize(q + 1);
    const FieldElement one = field.one();
    for (std::uint64_t i = 0; i < q; ++i) {
        QuadRingElement r = ring.pow({field.element(i), one}, m);
        table.image[i] = r.d_part.is_zero()
                             ? static_cast<std::uint32_t>(q)
                             : static_cast<std::uint32_t>(field.index_of(field.mul(r.n_part, field.inv(r.d_part))));
    }
    table.image[q] = static_cast<std::uint32_t>(q);
    if (!table.is_bijection())
        throw NotAPermutation("internal error: R_{" + std::to_string(m) + ",a} table is not a bijection");
    return table;
}

CycleStructure cycle_decomposition(const std::vector<std::uint32_t>& image) {
    CycleStructure out;
    std::vector<bool> visited(image.size(), false);
    for (std::size_t start = 0; start < image.size(); ++start) {
        if (visited[start]) continue;
        std::uint64_t len = 0;
        for (std::size_t i = start; !visited[i]; i = image[i]) {
            visited[i] = true;
            ++len;
        }
        out.add(len, 1);
    }
    return out;
}

CycleStructure cycle_decomposition(const PermutationTable& table) { return cycle_decomposition(table.image); }

CycleStructure mult_map_structure(std::uint64_t m, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Z_n needs n >= 1");
    if (n > kOraclePointCap) throw std::invalid_argument("Z_n too large for an orbit walk");
    if (std::gcd(m % n, n) != 1) throw NotAPermutation("x -> mx is not a bijection of Z_n");
    std::vector<std::uint32_t> image(n);
    for (std::uint64_t x = 0; x < n; ++x) image[x] = static_cast<std::uint32_t>(mul_mod(m, x, n));
    return cycle_decomposition(image);
}

PowerMapDomain::PowerMapDomain(const FieldSpec& base, Subgroup which)
    : ambient_(which == Subgroup::units ? base : build_field(base.p(), 2 * base.k())) {
    const std::uint64_t q = base.q();
    const std::uint64_t expected = which == Subgroup::units ? q - 1 : q + 1;
    if (ambient_.q() > 10 * kOraclePointCap) throw std::invalid_argument("ambient field too large to enumerate");
    const FieldElement one = ambient_.one();
    for (std::uint64_t i = 1; i < ambient_.q(); ++i) {
        FieldElement x = ambient_.element(i);
        if (which == Subgroup::norm_one && !(ambient_.pow(x, q + 1) == one)) continue;
        position_.emplace(i, static_cast<std::uint32_t>(elements_.size()));
        elements_.push_back(x);
    }
    if (elements_.size() != expected) throw std::logic_error("cyclic subgroup has the wrong order");
}

CycleStructure PowerMapDomain::structure(std::uint64_t m) const {
    if (std::gcd(m, order()) != 1) throw NotAPermutation("x -> x^m is not a bijection of the subgroup");
    std::vector<std::uint32_t> image(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        auto it = position_.find(ambient_.index_of(ambient_.pow(elements_[i], m)));
        if (it == position_.end()) throw std::logic_error("power map left the subgroup");
        image[i] = it->second;
    }
    return cycle_decomposition(image);
}

CycleStructure power_map_structure(const FieldSpec& base, std::uint64_t m, Subgroup which) {
    return PowerMapDomain(base, which).structure(m);
}

void write_permutation_csv(std::ostream& out, const Field& field, const PermutationTable& table) {
    out << "point,image\n";
    for (std::size_t i = 0; i < table.domain.size(); ++i)
        out << field.format(table.domain[i]) << ',' << field.format(table.domain[table.image[i]]) << '\n';
}

}  // namespace redei
