#include "doctest.h"

#include <numeric>
#include <sstream>

#include "redei/cyclestruct.hpp"
#include "redei/redei_map.hpp"

using namespace redei;
using u64 = std::uint64_t;

namespace {

CycleStructure make(std::initializer_list<std::pair<u64, u64>> entries) {
    CycleStructure s;
    for (auto [len, count] : entries) s.add(len, count);
    return s;
}

// (x + s)^m by m successive multiplications, no square-and-multiply.
ProjectivePoint slow_eval(const Field& f, u64 m, const FieldElement& a, const ProjectivePoint& x) {
    if (is_infinity(x)) return Infinity{};
    const FieldElement& xv = std::get<FieldElement>(x);
    FieldElement n = f.one(), d = f.zero();
    for (u64 i = 0; i < m; ++i) {
        FieldElement nn = f.add(f.mul(n, xv), f.mul(a, d));
        FieldElement dd = f.add(n, f.mul(d, xv));
        n = nn;
        d = dd;
    }
    if (d.is_zero()) return Infinity{};
    return f.mul(n, f.inv(d));
}

}  // namespace

TEST_CASE("redei_eval basics") {
    const Field f(build_field(7, 2));
    const FieldElement a = canonical_a(f, Chi::nonsquare);
    for (const auto& x : projective_line(f)) CHECK(redei_eval(f, 1, a, x) == x);
    CHECK(redei_eval(f, 5, a, f.zero()) == ProjectivePoint(f.zero()));
    CHECK(redei_eval(f, 5, a, Infinity{}) == ProjectivePoint(Infinity{}));
    CHECK_THROWS_AS(redei_eval(f, 3, f.zero(), f.one()), std::invalid_argument);
    CHECK_THROWS_AS(redei_eval(f, 0, a, f.one()), std::invalid_argument);
}

TEST_CASE("redei_eval over Z_7 with a = 3, m = 3 matches the expanded cubic") {
    // (x + s)^3 = x^3 + 3 a x + (3 x^2 + a) s
    const Field f(build_field(7, 1));
    const FieldElement a = f.constant(3);
    for (u64 x = 0; x < 7; ++x) {
        const u64 n = (x * x * x + 9 * x) % 7;
        const u64 d = (3 * x * x + 3) % 7;
        ProjectivePoint expected = Infinity{};
        if (d != 0) {
            u64 dinv = 1;
            while (d * dinv % 7 != 1) ++dinv;
            expected = f.constant(n * dinv % 7);
        }
        CHECK(redei_eval(f, 3, a, f.constant(x)) == expected);
    }
}

TEST_CASE("redei_eval agrees with repeated multiplication") {
    for (auto [p, k] : {std::pair<u64, unsigned>{7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        const Field f(build_field(p, k));
        for (Chi chi : {Chi::square, Chi::nonsquare}) {
            const FieldElement a = canonical_a(f, chi);
            for (u64 m = 1; m <= 40; ++m)
                for (const auto& x : projective_line(f)) CHECK(redei_eval(f, m, a, x) == slow_eval(f, m, a, x));
        }
    }
}

TEST_CASE("build_permutation") {
    const Field z7(build_field(7, 1));
    auto t = build_permutation(z7, 3, z7.constant(3));
    CHECK(t.image.size() == 8);
    CHECK(t.is_bijection());
    CHECK_THROWS_AS(build_permutation(z7, 2, z7.constant(3)), NotAPermutation);

    const Field f49(build_field(7, 2));
    auto t49 = build_permutation(f49, 5, canonical_a(f49, Chi::square));
    CHECK(t49.image.size() == 50);
    CHECK(t49.is_bijection());
    CHECK(is_infinity(t49.domain.back()));
}

TEST_CASE("cycle_decomposition") {
    std::vector<std::uint32_t> id(50);
    std::iota(id.begin(), id.end(), 0U);
    CHECK(cycle_decomposition(id) == make({{1, 50}}));

    const Field f49(build_field(7, 2));
    CHECK(cycle_decomposition(build_permutation(f49, 7, canonical_a(f49, Chi::nonsquare))) == make({{1, 2}, {4, 12}}));
    const Field z7(build_field(7, 1));
    CHECK(cycle_decomposition(build_permutation(z7, 3, z7.constant(3))) == make({{1, 2}, {2, 3}}));
    CHECK(cycle_decomposition(std::vector<std::uint32_t>{1, 2, 0, 4, 3}) == make({{2, 1}, {3, 1}}));
}

TEST_CASE("mult_map_structure") {
    CHECK(mult_map_structure(3, 8) == make({{1, 2}, {2, 3}}));
    CHECK(mult_map_structure(1, 17) == make({{1, 17}}));
    CHECK(mult_map_structure(49, 50) == make({{1, 2}, {2, 24}}));
    CHECK_THROWS_AS(mult_map_structure(2, 8), NotAPermutation);
}

TEST_CASE("power_map_structure") {
    CHECK(power_map_structure(build_field(7, 1), 1, Subgroup::units) == make({{1, 6}}));
    CHECK(power_map_structure(build_field(7, 1), 3, Subgroup::norm_one) == mult_map_structure(3, 8));
    CHECK(power_map_structure(build_field(7, 2), 5, Subgroup::units) == mult_map_structure(5, 48));
    CHECK_THROWS_AS(power_map_structure(build_field(7, 1), 2, Subgroup::units), NotAPermutation);
    const PowerMapDomain u(build_field(3, 2), Subgroup::norm_one);
    CHECK(u.order() == 10);
    CHECK(u.ambient().q() == 81);
}

TEST_CASE("oracle agreement on small fields") {
    for (u64 q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
        u64 p = 3;
        unsigned k = 1;
        while (true) {
            u64 v = p;
            k = 1;
            while (v < q) {
                v *= p;
                ++k;
            }
            if (v == q) break;
            p += 2;
        }
        const Field f(build_field(p, k));
        for (Chi chi : {Chi::square, Chi::nonsquare}) {
            const u64 N = group_order(q, chi);
            const FieldElement a = canonical_a(f, chi);
            for (u64 m = 1; m < N; ++m) {
                if (std::gcd(m, N) != 1) continue;
                CycleStructure walked = cycle_decomposition(build_permutation(f, m, a));
                CHECK(walked == structure_formula(m, q, chi));
                if (chi == Chi::square) walked = walked.without_fixed_points(2);
                CHECK(walked == mult_map_structure(m, N));
            }
        }
    }
}

TEST_CASE("permutation CSV") {
    const Field z7(build_field(7, 1));
    std::ostringstream os;
    write_permutation_csv(os, z7, build_permutation(z7, 3, z7.constant(3)));
    const std::string csv = os.str();
    CHECK(csv.rfind("point,image\n0,0\n", 0) == 0);
    CHECK(csv.find("inf,inf\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}
