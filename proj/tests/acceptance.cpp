// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "redei/catalog.hpp"
#include "redei/families.hpp"
#include "redei/numthy.hpp"
#include "redei/sweep.hpp"

using namespace redei;
using u64 = std::uint64_t;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

CycleStructure make(const std::map<u64, u64>& entries) {
    CycleStructure s;
    for (auto [len, count] : entries) s.add(len, count);
    return s;
}

Outcome from_report(const PropertyReport& r) {
    if (r.ok()) return {true, std::to_string(r.checked) + " cases"};
    return {false, *r.counterexample};
}

Outcome q49_classes() {
    struct Row {
        Chi chi;
        std::vector<u64> members;
        std::map<u64, u64> structure;
    };
    const std::vector<Row> rows = {
        {Chi::nonsquare, {1}, {{1, 50}}},
        {Chi::nonsquare, {3, 13, 17, 23, 27, 33, 37, 47}, {{1, 2}, {4, 2}, {20, 2}}},
        {Chi::nonsquare, {7, 43}, {{1, 2}, {4, 12}}},
        {Chi::nonsquare, {9, 19, 29, 39}, {{1, 2}, {2, 4}, {10, 4}}},
        {Chi::nonsquare, {11, 21, 31, 41}, {{1, 10}, {5, 8}}},
        {Chi::nonsquare, {49}, {{1, 2}, {2, 24}}},
        {Chi::square, {1}, {{1, 50}}},
        {Chi::square, {5, 29}, {{1, 6}, {2, 10}, {4, 6}}},
        {Chi::square, {7, 31}, {{1, 8}, {2, 21}}},
        {Chi::square, {11, 35}, {{1, 4}, {2, 11}, {4, 6}}},
        {Chi::square, {13, 37}, {{1, 14}, {2, 6}, {4, 6}}},
        {Chi::square, {17}, {{1, 18}, {2, 16}}},
        {Chi::square, {19, 43}, {{1, 8}, {2, 9}, {4, 6}}},
        {Chi::square, {23, 47}, {{1, 4}, {2, 23}}},
        {Chi::square, {25}, {{1, 26}, {2, 12}}},
        {Chi::square, {41}, {{1, 10}, {2, 20}}},
    };
    std::size_t matched = 0;
    for (Chi chi : {Chi::nonsquare, Chi::square}) {
        const auto classes = enumerate_classes(49, chi);
        std::size_t expected_count = 0;
        for (const auto& row : rows) {
            if (row.chi != chi) continue;
            ++expected_count;
            bool found = false;
            for (const auto& cls : classes)
                if (cls.members == row.members && cls.structure == make(row.structure)) found = true;
            if (!found) return {false, "missing class starting at m=" + std::to_string(row.members.front())};
            ++matched;
        }
        if (classes.size() != expected_count) return {false, "unexpected number of classes"};
    }
    return {true, std::to_string(matched) + " rows"};
}

Outcome gcd_and_order_values() {
    // gcd(n^4 - 1, 25) for the d = 5 and d = 25 shifts of m = 3.
    const std::map<u64, u64> gcds = {{13, 5}, {23, 5}, {33, 5}, {43, 25}, {7, 25},
                                     {17, 5}, {27, 5}, {37, 5}, {47, 5}};
    const std::map<u64, u64> orders = {{7, 4},  {9, 2},  {11, 1}, {17, 4}, {19, 2}, {21, 1}, {27, 4},
                                       {29, 2}, {31, 1}, {37, 4}, {39, 2}, {41, 1}, {47, 4}, {49, 2}, {1, 1}};
    for (auto [n, g] : gcds)
        if (gcd_mpow_minus_one(n, 4, 25) != g) return {false, "gcd for n=" + std::to_string(n)};
    for (auto [n, o] : orders)
        if (mult_order(n % 5, 5) != o) return {false, "order for n=" + std::to_string(n)};
    for (u64 n : {5, 15, 25, 35, 45})
        if (n % 5 != 0) return {false, "divisibility for n=" + std::to_string(n)};
    if (gcd_mpow_minus_one(3, 4, 25) != 5 || mult_order(3, 5) != 4) return {false, "base values for m=3"};
    return {true, std::to_string(gcds.size() + orders.size()) + " values"};
}

Outcome pair_sets() {
    using Pairs = std::vector<std::pair<u64, u64>>;
    const Pairs square = {{5, 29}, {7, 31}, {11, 35}, {13, 37}, {19, 43}, {23, 47}};
    if (enumerate_pairs(49, Chi::square).pairs != square) return {false, "square-character pairs differ"};

    const std::map<u64, Pairs> lines = {
        {4, {{13, 17}, {23, 27}, {33, 37}}},
        {44, {{3, 47}}},
        {6, {{17, 23}, {27, 33}}},
        {10, {{3, 13}, {9, 19}, {11, 21}, {13, 23}, {17, 27}, {19, 29}, {21, 31}, {23, 33}, {27, 37}, {29, 39},
              {31, 41}, {37, 47}}},
        {14, {{3, 17}, {13, 27}, {23, 37}, {33, 47}}},
        {36, {{7, 43}}},
        {34, {{3, 37}, {13, 47}}},
        {16, {{17, 33}}},
        {20, {{3, 23}, {9, 29}, {11, 31}, {13, 33}, {17, 37}, {19, 39}, {21, 41}, {27, 47}}},
        {24, {{3, 27}, {13, 37}, {23, 47}}},
        {30, {{3, 33}, {9, 39}, {11, 41}, {17, 47}}},
    };
    const auto cat = enumerate_pairs(49, Chi::nonsquare);
    if (cat.pairs.size() != 41) return {false, std::to_string(cat.pairs.size()) + " non-square pairs, expected 41"};
    std::map<u64, Pairs> grouped;
    for (const auto& [m, n] : cat.pairs) grouped[(n + 50 - m) % 50].emplace_back(m, n);
    if (grouped != lines) return {false, "line grouping differs"};
    return {true, "6 + 41 pairs, " + std::to_string(lines.size()) + " lines"};
}

Outcome big_recursion() {
    const auto f = p_qmp1_family(3, boost::multiprecision::pow(BigInt(3), 60), Chi::nonsquare);
    if (!f.applicable || !f.structure) return {false, "family not applicable"};
    const auto& s = *f.structure;
    const bool ok = s.multiplicity(8) == 10 && s.multiplicity(24) == 22140 && s.multiplicity(40) == 87169608 &&
                    s.multiplicity(120) == BigInt("353259652293468362590059312") && s.multiplicity(1) == 2 &&
                    s.counts().size() == 5;
    return {ok, ok ? "N_8, N_24, N_40, N_120 exact" : s.to_json()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "q=49 structure classes, both characters", 1, q49_classes},
        {2, "gcd(n^4-1,25) and o_5(n) values", 1, gcd_and_order_values},
        {3, "q=49 pair sets and line grouping", 1, pair_sets},
        {4, "cycle counts for (3, 3^60-2) over F_{3^60}", 1, big_recursion},
        {5, "formula equals permutation oracle, q <= 400", 300,
         [] { return from_report(check_oracle_equivalence(400)); }},
        {6, "theorem, structure equality and iterate criterion agree, q-chi <= 500", 120,
         [] { return from_report(check_theorem_equivalence(500)); }},
        {7, "transfer to f_m and x^m, q <= 400", 300, [] { return from_report(check_transfer(400)); }},
        {8, "isolated counts and involution classes, q <= 400", 60, [] { return from_report(check_isolated(400)); }},
        {9, "involution formulas, q <= 200", 60, [] { return from_report(check_involutions(200)); }},
        {10, "shift, half-shift, reflection and cross-field symmetries, q <= 200", 120,
         [] { return from_report(check_symmetries(200)); }},
        {11, "closed-form families", 120, [] { return from_report(check_families(FamilyLimits{})); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over the time budget";
        }
        if (!o.pass) ++failures;
        std::printf("criterion %2d: %s  %s (%s; %.2f s of %.0f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title.c_str(),
                    o.detail.c_str(), secs, c.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
