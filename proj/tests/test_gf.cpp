#include "doctest.h"

#include <set>
#include <vector>

#include "redei/gf.hpp"

using namespace redei;
using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // constant term first

namespace {

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, u64 p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const u64 lead = a.back() % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const Poly& a) {
    for (u64 c : a)
        if (c != 0) return false;
    return true;
}

// Reducible iff some monic factor of degree 1..k/2 divides f.
bool irreducible_by_division(const Poly& f, u64 p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t deg = 1; deg <= k / 2; ++deg) {
        u64 count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            Poly g(deg + 1, 0);
            g[deg] = 1;
            u64 t = idx;
            for (std::size_t i = 0; i < deg; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (is_zero_poly(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest irreducible monic polynomial, c0 most significant.
Poly smallest_irreducible(u64 p, unsigned k) {
    u64 count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
        Poly f(k + 1, 0);
        f[k] = 1;
        u64 t = idx;
        for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
            f[i] = t % p;
            t /= p;
        }
        if (irreducible_by_division(f, p)) return f;
    }
    return {};
}

Poly modulus_of(const FieldSpec& spec) { return Poly(spec.modulus().begin(), spec.modulus().end()); }

// Schoolbook product reduced by the modulus, as an independent reference.
Poly ref_mul(const Field& f, const FieldElement& x, const FieldElement& y) {
    const u64 p = f.p();
    const unsigned k = f.k();
    Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + u64{x[i]} * y[j]) % p;
    Poly r = poly_mod(prod, modulus_of(f.spec()), p);
    r.resize(k, 0);
    return r;
}

Poly coeffs(const FieldElement& x) { return Poly(x.coefficients().begin(), x.coefficients().end()); }

}  // namespace

TEST_CASE("build_field picks the smallest irreducible modulus") {
    CHECK(modulus_of(build_field(7, 1)) == Poly{0, 1});
    CHECK(modulus_of(build_field(7, 2)) == smallest_irreducible(7, 2));
    CHECK(modulus_of(build_field(3, 4)) == smallest_irreducible(3, 4));
    CHECK(modulus_of(build_field(5, 3)) == smallest_irreducible(5, 3));
    CHECK(modulus_of(build_field(3, 6)) == smallest_irreducible(3, 6));
    CHECK(modulus_of(build_field(7, 2)) == modulus_of(build_field(7, 2)));
    CHECK_THROWS_AS(build_field(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_field(9, 1), std::invalid_argument);
}

TEST_CASE("FieldSpec validates its modulus") {
    CHECK_NOTHROW(FieldSpec(7, 2, {1, 0, 1}));
    CHECK_NOTHROW(FieldSpec(3, 2, {1, 0, 1}));
    CHECK_THROWS_AS(FieldSpec(5, 2, {1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x - 2)(x + 2)
    CHECK_THROWS_AS(FieldSpec(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(FieldSpec(3, 2, {1, 1}), std::invalid_argument);     // wrong degree
}

TEST_CASE("prime field arithmetic") {
    const Field f(build_field(7, 1));
    CHECK(f.mul(f.constant(3), f.constant(5)) == f.one());
    CHECK(f.inv(f.constant(3)) == f.constant(5));
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK(f.add(f.constant(4), f.constant(5)) == f.constant(2));
    CHECK(f.sub(f.constant(2), f.constant(5)) == f.constant(4));
    CHECK(f.neg(f.constant(1)) == f.constant(6));
}

TEST_CASE("multiplication matches a reference product") {
    for (auto [p, k] : {std::pair<u64, unsigned>{3, 4}, {5, 2}, {7, 3}}) {
        const Field f(build_field(p, k));
        const u64 q = f.q();
        const u64 step = q > 400 ? 7 : 1;
        for (u64 i = 0; i < q; i += step)
            for (u64 j = 0; j < q; j += step) {
                const FieldElement x = f.element(i), y = f.element(j);
                CHECK(coeffs(f.mul(x, y)) == ref_mul(f, x, y));
            }
    }
}

TEST_CASE("field axioms on F_9 and F_25") {
    for (auto [p, k] : {std::pair<u64, unsigned>{3, 2}, {5, 2}}) {
        const Field f(build_field(p, k));
        const u64 q = f.q();
        for (u64 i = 0; i < q; ++i)
            for (u64 j = 0; j < q; ++j) {
                const FieldElement x = f.element(i), y = f.element(j);
                CHECK(f.mul(x, y) == f.mul(y, x));
                CHECK(f.sub(f.add(x, y), y) == x);
                for (u64 l = 0; l < q; l += 3) {
                    const FieldElement z = f.element(l);
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
    }
}

TEST_CASE("inverses and Lagrange in F_49") {
    const Field f(build_field(7, 2));
    for (u64 i = 1; i < f.q(); ++i) {
        const FieldElement x = f.element(i);
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.pow(x, f.q() - 1) == f.one());
    }
    CHECK(f.pow(f.zero(), 0) == f.one());
}

TEST_CASE("Frobenius is additive") {
    const Field f(build_field(3, 3));
    for (u64 i = 0; i < f.q(); ++i)
        for (u64 j = 0; j < f.q(); ++j) {
            const FieldElement x = f.element(i), y = f.element(j);
            CHECK(f.pow(f.add(x, y), 3) == f.add(f.pow(x, 3), f.pow(y, 3)));
        }
}

TEST_CASE("enumeration order and index round trip") {
    const Field f(build_field(3, 2));
    CHECK(coeffs(f.element(0)) == Poly{0, 0});
    CHECK(coeffs(f.element(1)) == Poly{1, 0});
    CHECK(coeffs(f.element(3)) == Poly{0, 1});
    for (u64 i = 0; i < f.q(); ++i) CHECK(f.index_of(f.element(i)) == i);
    const auto line = projective_line(f);
    REQUIRE(line.size() == 10);
    CHECK(is_infinity(line.back()));
    CHECK(f.format(f.element(5)) == "2:1");
    CHECK(f.format(line.back()) == "inf");
    for (const auto& pt : line) CHECK(f.parse_point(f.format(pt)) == pt);
}

TEST_CASE("quadratic character") {
    const Field z7(build_field(7, 1));
    CHECK(quadratic_character(z7, z7.one()) == Chi::square);
    CHECK(quadratic_character(z7, z7.constant(3)) == Chi::nonsquare);
    CHECK(quadratic_character(z7, z7.constant(4)) == Chi::square);
    CHECK_THROWS_AS(quadratic_character(z7, z7.zero()), std::invalid_argument);

    for (auto [p, k] : {std::pair<u64, unsigned>{7, 1}, {3, 2}, {7, 2}, {3, 5}, {11, 2}}) {
        const Field f(build_field(p, k));
        std::set<u64> squares;
        for (u64 i = 1; i < f.q(); ++i) squares.insert(f.index_of(f.mul(f.element(i), f.element(i))));
        CHECK(squares.size() == (f.q() - 1) / 2);
        u64 plus = 0;
        for (u64 i = 1; i < f.q(); ++i) {
            const bool sq = quadratic_character(f, f.element(i)) == Chi::square;
            CHECK(sq == squares.count(i) > 0);
            plus += sq;
        }
        CHECK(plus == (f.q() - 1) / 2);
    }
}

TEST_CASE("canonical_a") {
    const Field z7(build_field(7, 1));
    CHECK(canonical_a(z7, Chi::square) == z7.one());
    CHECK(canonical_a(z7, Chi::nonsquare) == z7.constant(3));

    const Field f49(build_field(7, 2));
    std::set<u64> squares;
    for (u64 i = 1; i < f49.q(); ++i) squares.insert(f49.index_of(f49.mul(f49.element(i), f49.element(i))));
    u64 first_non_square = 1;
    while (squares.count(first_non_square)) ++first_non_square;
    CHECK(f49.index_of(canonical_a(f49, Chi::nonsquare)) == first_non_square);
}

TEST_CASE("field description JSON") {
    const FieldSpec spec = build_field(7, 2);
    std::string expected = "{\"p\":7,\"k\":2,\"modulus\":[";
    for (std::size_t i = 0; i < spec.modulus().size(); ++i)
        expected += (i ? "," : "") + std::to_string(spec.modulus()[i]);
    CHECK(spec.to_json() == expected + "]}");
    CHECK(build_field(7, 1).to_json() == "{\"p\":7,\"k\":1,\"modulus\":[0,1]}");
}
