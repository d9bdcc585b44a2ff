#include "doctest.h"

#include <numeric>

#include "redei/cyclestruct.hpp"
#include "redei/numthy.hpp"

using namespace redei;
using u64 = std::uint64_t;

namespace {

CycleStructure make(std::initializer_list<std::pair<u64, u64>> entries) {
    CycleStructure s;
    for (auto [len, count] : entries) s.add(len, count);
    return s;
}

// Orbit walk of x -> m x on Z_n, written out here as the reference.
CycleStructure walk(u64 m, u64 n) {
    std::vector<bool> seen(n, false);
    CycleStructure s;
    std::map<u64, u64> counts;
    for (u64 x = 0; x < n; ++x) {
        if (seen[x]) continue;
        u64 len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = y * m % n;
            ++len;
        }
        ++counts[len];
    }
    for (auto [len, c] : counts) s.add(len, c);
    return s;
}

}  // namespace

TEST_CASE("CycleStructure basics") {
    CycleStructure s = make({{20, 2}, {1, 2}, {4, 2}});
    CHECK(s.to_json() == R"({"1":2,"4":2,"20":2})");
    CHECK(s.to_text() == "2x{1} + 2xCyc(4) + 2xCyc(20)");
    CHECK(s.total_mass() == 50);
    CHECK(s.multiplicity(4) == 2);
    CHECK(s.multiplicity(3) == 0);
    s.add(7, 0);
    CHECK(s.counts().count(7) == 0);
    CHECK(s.without_fixed_points(2) == make({{4, 2}, {20, 2}}));
    CHECK_THROWS(s.without_fixed_points(3));
    CycleStructure big;
    big.add(120, boost::multiprecision::pow(BigInt(10), 30));
    CHECK(big.to_json() == R"({"120":"1000000000000000000000000000000"})");
}

TEST_CASE("Modulus") {
    const Modulus m(48);
    CHECK(m.divisors() == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 16, 24, 48});
    CHECK(m.exponent_of(2) == 4);
    CHECK(m.exponent_of(5) == 0);
    CHECK(m.units().size() == 16);
    CHECK(Modulus(49, Chi::nonsquare).value() == 50);
    CHECK_THROWS_AS(Modulus(4, Chi::square), std::invalid_argument);
}

TEST_CASE("structure_formula examples") {
    CHECK(structure_formula(3, 49, Chi::nonsquare) == make({{1, 2}, {4, 2}, {20, 2}}));
    CHECK(structure_formula(1, 49, Chi::square) == make({{1, 50}}));
    CHECK(structure_formula(11, 49, Chi::nonsquare) == make({{1, 10}, {5, 8}}));
    CHECK(structure_formula(1, 3, Chi::square) == make({{1, 4}}));
    CHECK_THROWS_AS(structure_formula(5, 49, Chi::nonsquare), std::invalid_argument);
}

TEST_CASE("structure_formula equals the orbit walk on Z_n") {
    for (u64 n = 2; n <= 300; n += 2) {
        for (Chi chi : {Chi::square, Chi::nonsquare}) {
            const u64 q = n + static_cast<u64>(to_int(chi));
            if (q < 3) continue;
            for (u64 m = 1; m < n; ++m) {
                if (std::gcd(m, n) != 1) continue;
                CycleStructure expected = walk(m, n);
                if (chi == Chi::square) expected.add(1, 2);
                const CycleStructure s = structure_formula(m, q, chi);
                CHECK(s == expected);
                CHECK(s.total_mass() == q + 1);
            }
        }
    }
}

TEST_CASE("fixed point counts") {
    CHECK(fixed_count(17, 49, Chi::square) == 18);
    CHECK(fixed_count(1, 49, Chi::nonsquare) == 50);
    CHECK(fixed_count(11, 49, Chi::nonsquare) == 10);
    CHECK(fixed_count_iter(3, 4, 49, Chi::nonsquare) == 10);
    CHECK(fixed_count_iter(9, 2, 49, Chi::nonsquare) == 10);
    CHECK(fixed_count_iter(7, 1, 49, Chi::square) == fixed_count(7, 49, Chi::square));
    for (u64 q : {49, 81, 121, 125, 243}) {
        for (Chi chi : {Chi::square, Chi::nonsquare}) {
            const Modulus mod(q, chi);
            for (u64 m : mod.units()) {
                const CycleStructure s = structure_formula(m, q, chi);
                CHECK(fixed_count(m, q, chi) == s.multiplicity(1));
                for (u64 r = 1; r <= 24; ++r) {
                    BigInt mass = 0;
                    for (const auto& [len, count] : s.counts())
                        if (r % len == 0) mass += BigInt(len) * count;
                    CHECK(BigInt(fixed_count_iter(m, r, q, chi)) == mass);
                }
            }
        }
    }
}

TEST_CASE("same_structure_criterion") {
    CHECK(same_structure_criterion(3, 13, 49, Chi::nonsquare));
    CHECK(same_structure_criterion(17, 17, 49, Chi::square));
    CHECK_FALSE(same_structure_criterion(3, 43, 49, Chi::nonsquare));
}

TEST_CASE("prime_power_gcd_equal examples") {
    CHECK(prime_power_gcd_equal(5, 2, 3, 13));
    CHECK(prime_power_gcd_equal(5, 1, 3, 7));
    CHECK_FALSE(prime_power_gcd_equal(5, 2, 3, 43));
    CHECK_THROWS_AS(prime_power_gcd_equal(5, 2, 5, 3), std::invalid_argument);
}

TEST_CASE("prime_power_gcd_equal against all iterates") {
    for (u64 p : {2, 3, 5, 7}) {
        u64 pa = p;
        for (unsigned alpha = 1; pa <= 256; ++alpha, pa *= p) {
            const u64 span = 2 * euler_phi(pa);
            for (u64 m = 1; m < pa; ++m) {
                if (m % p == 0) continue;
                for (u64 n = 1; n < pa; ++n) {
                    if (n % p == 0) continue;
                    bool equal = true;
                    for (u64 r = 1; r <= span && equal; ++r)
                        equal = gcd_mpow_minus_one(m, r, pa) == gcd_mpow_minus_one(n, r, pa);
                    CHECK(prime_power_gcd_equal(p, alpha, m, n) == equal);
                }
            }
        }
    }
}

TEST_CASE("in_S_theorem examples") {
    CHECK(in_S_theorem(3, 17, 49, Chi::nonsquare));
    CHECK(in_S_theorem(5, 29, 49, Chi::square));
    CHECK(in_S_theorem(13, 13, 49, Chi::square));
    CHECK_FALSE(in_S_theorem(3, 43, 49, Chi::nonsquare));
    CHECK_THROWS_AS(in_S_theorem(3, 5, 49, Chi::nonsquare), std::invalid_argument);
    CHECK_FALSE(in_S(3, 5, Modulus(50)));
    CHECK(in_S_theorem(1, 1, 3, Chi::square));
}

TEST_CASE("half shift criterion") {
    CHECK(half_shift_criterion(5, 49, Chi::square));
    CHECK_FALSE(half_shift_criterion(17, 49, Chi::square));
    CHECK_FALSE(half_shift_criterion(3, 49, Chi::nonsquare));
}
