#include "redei/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "redei/catalog.hpp"
#include "redei/cyclestruct.hpp"
#include "redei/families.hpp"
#include "redei/gf.hpp"
#include "redei/numthy.hpp"
#include "redei/parallel.hpp"
#include "redei/redei_map.hpp"

namespace redei {

namespace {

using u64 = std::uint64_t;
using Outcome = std::optional<std::string>;
constexpr Chi kBoth[] = {Chi::nonsquare, Chi::square};

std::string tag(u64 q, Chi chi) { return "q=" + std::to_string(q) + " chi=" + std::to_string(to_int(chi)); }

/// Runs fn over the work items in parallel and keeps the counterexample of the
/// lowest-numbered failing item, so the report does not depend on scheduling.
template <class Item>
PropertyReport run_items(std::string name, const std::vector<Item>& items,
                         const std::function<Outcome(const Item&, std::atomic<u64>&)>& fn) {
    PropertyReport report{std::move(name), 0, std::nullopt};
    std::atomic<u64> checked{0};
    std::vector<Outcome> outcomes(items.size());
    parallel_for(items.size(), [&](std::size_t i) { outcomes[i] = fn(items[i], checked); });
    report.checked = checked;
    for (auto& o : outcomes)
        if (o) {
            report.counterexample = std::move(o);
            break;
        }
    return report;
}

std::vector<std::pair<u64, Chi>> field_items(u64 qmax) {
    std::vector<std::pair<u64, Chi>> items;
    for (u64 q : odd_prime_powers(qmax))
        for (Chi chi : kBoth) items.emplace_back(q, chi);
    return items;
}

Field field_for(u64 q) {
    const PrimePower pp = prime_power_decomposition(BigInt(q));
    return Field(build_field(to_u64(pp.prime), pp.exponent));
}

u64 ipow(u64 base, unsigned e) {
    u64 r = 1;
    while (e-- > 0) r *= base;
    return r;
}

Outcome oracle_structure_mismatch(const Field& field, Chi chi, u64 m, const CycleStructure& expected) {
    const FieldElement a = canonical_a(field, chi);
    const CycleStructure actual = cycle_decomposition(build_permutation(field, m, a));
    if (actual == expected) return std::nullopt;
    return tag(field.q(), chi) + " m=" + std::to_string(m) + ": permutation gives " + actual.to_json() +
           ", expected " + expected.to_json();
}

}  // namespace

std::vector<u64> odd_prime_powers(u64 qmax) {
    std::vector<u64> out;
    for (u64 q = 3; q <= qmax; q += 2)
        if (prime_power_decomposition(BigInt(q)).exponent != 0) out.push_back(q);
    return out;
}

PropertyReport check_oracle_equivalence(u64 qmax) {
    return run_items<std::pair<u64, Chi>>(
        "formula-oracle", field_items(qmax), [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const Field field = field_for(q);
            const Modulus mod(q, chi);
            for (u64 m : mod.units()) {
                if (auto bad = oracle_structure_mismatch(field, chi, m, structure_formula(m, mod, chi))) return bad;
                ++checked;
            }
            return std::nullopt;
        });
}

PropertyReport check_theorem_equivalence(u64 nmax) {
    std::vector<std::pair<u64, Chi>> items;
    for (u64 q : odd_prime_powers(nmax + 1))
        for (Chi chi : kBoth)
            if (group_order(q, chi) <= nmax) items.emplace_back(q, chi);
    return run_items<std::pair<u64, Chi>>(
        "theorem-equivalence", items, [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const Modulus mod(q, chi);
            const std::vector<u64> units = mod.units();
            std::vector<CycleStructure> structures;
            structures.reserve(units.size());
            for (u64 m : units) structures.push_back(structure_formula(m, mod, chi));
            for (std::size_t i = 0; i < units.size(); ++i) {
                for (std::size_t j = i; j < units.size(); ++j) {
                    const u64 m = units[i], n = units[j];
                    const bool theorem = in_S_theorem(m, n, mod);
                    const bool equal = structures[i] == structures[j];
                    const bool criterion = same_structure_criterion(m, n, mod);
                    const bool reverse = in_S_theorem(n, m, mod);
                    if (theorem != equal || theorem != criterion || theorem != reverse)
                        return tag(q, chi) + " (" + std::to_string(m) + "," + std::to_string(n) +
                               "): theorem=" + std::to_string(theorem) + " structures_equal=" +
                               std::to_string(equal) + " criterion=" + std::to_string(criterion) +
                               " reversed=" + std::to_string(reverse);
                    ++checked;
                }
            }
            return std::nullopt;
        });
}

PropertyReport check_transfer(u64 qmax) {
    return run_items<std::pair<u64, Chi>>(
        "transfer", field_items(qmax), [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const Field field = field_for(q);
            const Modulus mod(q, chi);
            const PowerMapDomain group(field.spec(), chi == Chi::nonsquare ? Subgroup::norm_one : Subgroup::units);
            const FieldElement a = canonical_a(field, chi);
            for (u64 m : mod.units()) {
                CycleStructure redei = cycle_decomposition(build_permutation(field, m, a));
                if (chi == Chi::square) redei = redei.without_fixed_points(2);
                const CycleStructure additive = mult_map_structure(m, mod.value());
                const CycleStructure power = group.structure(m);
                if (!(redei == additive) || !(redei == power))
                    return tag(q, chi) + " m=" + std::to_string(m) + ": redei " + redei.to_json() + ", f_m " +
                           additive.to_json() + ", x^m " + power.to_json();
                ++checked;
            }
            return std::nullopt;
        });
}

PropertyReport check_isolated(u64 qmax) {
    return run_items<std::pair<u64, Chi>>(
        "isolated", field_items(qmax), [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const u64 N = group_order(q, chi);
            const auto classes = enumerate_classes(q, chi);
            std::map<u64, std::size_t> class_of;
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (u64 m : classes[c].members) class_of[m] = c;

            u64 singletons = 0;
            for (const auto& cls : classes) {
                std::size_t involutions = 0;
                for (u64 m : cls.members)
                    if (mul_mod(m, m, N) == 1 % N) ++involutions;
                if (involutions > 2)
                    return tag(q, chi) + ": class of " + std::to_string(cls.members.front()) + " holds " +
                           std::to_string(involutions) + " involutions";
                if (cls.members.size() == 1) {
                    ++singletons;
                    const u64 m = cls.members.front();
                    if (mul_mod(m, m, N) != 1 % N)
                        return tag(q, chi) + ": isolated m=" + std::to_string(m) + " is not an involution";
                }
            }
            const u64 formula = isolated_count_formula(q, chi);
            if (singletons != formula || isolated_list(q, chi).size() != formula)
                return tag(q, chi) + ": " + std::to_string(singletons) + " isolated, formula says " +
                       std::to_string(formula);
            for (const auto& [m, c] : class_of) {
                if (auto companion = power_companion(m, q, chi)) {
                    if (*companion == m || class_of.at(*companion) != c)
                        return tag(q, chi) + ": companion " + std::to_string(*companion) + " of m=" +
                               std::to_string(m) + " left its class";
                }
                ++checked;
            }
            return std::nullopt;
        });
}

PropertyReport check_involutions(u64 qmax) {
    return run_items<std::pair<u64, Chi>>(
        "involution-formulas", field_items(qmax), [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const Modulus mod(q, chi);
            const u64 N = mod.value();
            const auto classes = enumerate_classes(q, chi);
            auto class_size = [&](u64 m) {
                for (const auto& cls : classes)
                    if (std::binary_search(cls.members.begin(), cls.members.end(), m)) return cls.members.size();
                return std::size_t{0};
            };
            for (u64 d : mod.divisors()) {
                if (d == N) continue;
                std::vector<u64> expected;  // involutions with d + chi + 1 fixed points
                for (u64 m : mod.units())
                    if (mul_mod(m, m, N) == 1 % N && std::gcd(m - 1, N) == d) expected.push_back(m);
                const auto got = involution_m_for_divisor(d, q, chi);
                const std::vector<u64> values = got ? got->values : std::vector<u64>{};
                if (values != expected)
                    return tag(q, chi) + " d=" + std::to_string(d) + ": formula gives " +
                           std::to_string(values.size()) + " value(s), direct search finds " +
                           std::to_string(expected.size());
                if (got) {
                    for (u64 m : values) {
                        if (fixed_count(m, q, chi) != d + static_cast<u64>(to_int(chi) + 1))
                            return tag(q, chi) + " d=" + std::to_string(d) + ": wrong fixed count for m=" +
                                   std::to_string(m);
                    }
                    const std::size_t want = got->kind == Involution::Kind::isolated ? 1 : 2;
                    if (values.size() != want || class_size(values.front()) != want)
                        return tag(q, chi) + " d=" + std::to_string(d) + ": class of m=" +
                               std::to_string(values.front()) + " has unexpected size";
                }
                ++checked;
            }
            return std::nullopt;
        });
}

PropertyReport check_symmetries(u64 qmax) {
    auto items = field_items(qmax);
    PropertyReport within = run_items<std::pair<u64, Chi>>(
        "symmetries", items, [](const auto& item, std::atomic<u64>& checked) -> Outcome {
            const auto [q, chi] = item;
            const Modulus mod(q, chi);
            const u64 N = mod.value();
            const unsigned alpha = mod.exponent_of(2);
            const std::vector<u64> units = mod.units();
            auto fail = [&](const std::string& what, u64 m, u64 n) {
                return tag(q, chi) + " (" + std::to_string(m) + "," + std::to_string(n) + "): " + what;
            };
            for (std::size_t i = 0; i < units.size(); ++i) {
                for (std::size_t j = i; j < units.size(); ++j) {
                    const u64 m = units[i], n = units[j];
                    const bool member = in_S_theorem(m, n, mod);
                    if (alpha > 1 && member != half_shift_pair(m, n, q, chi)) return fail("half shift", m, n);
                    if (!member) continue;
                    if (negate_pair_valid(m, n, q, chi) != in_S(N - m, N - n, mod)) return fail("negation", m, n);
                    if (alpha > 1 &&
                        half_minus_pair_valid(m, n, q, chi) != in_S((N / 2 + N - m) % N, (N / 2 + N - n) % N, mod))
                        return fail("half minus", m, n);
                    for (u64 d : mod.divisors()) {
                        if (d == N) continue;
                        for (u64 k = 0; k < d; ++k) {
                            const u64 s = k * (N / d);
                            if (shift_pair_valid(m, n, k, d, q, chi) != in_S((m + s) % N, (n + s) % N, mod))
                                return fail("shift by " + std::to_string(s), m, n);
                        }
                    }
                    ++checked;
                }
            }
            if (alpha > 1) {
                for (u64 m : units)
                    if (half_shift_criterion(m, q, chi) != in_S(m, (m + N / 2) % N, mod))
                        return fail("half-shift criterion", m, (m + N / 2) % N);
            }
            return std::nullopt;
        });
    if (!within.ok()) return within;

    // Cross-field shifts: every admissible (q, qbar, p) with both fields in range.
    struct Cross {
        u64 q, qbar, p;
        Chi chi;
    };
    std::vector<Cross> cross;
    const auto qs = odd_prime_powers(qmax);
    for (Chi chi : kBoth)
        for (u64 q : qs)
            for (u64 qbar : qs) {
                const Modulus a(q, chi), b(qbar, chi);
                for (const auto& [p, alpha] : a.prime_powers()) {
                    if (b.exponent_of(p) != alpha) continue;
                    const u64 pa = ipow(p, alpha);
                    if ((a.value() / pa + b.value() / pa) % p == 0) cross.push_back({q, qbar, p, chi});
                }
            }
    PropertyReport across = run_items<Cross>(
        "symmetries", cross, [](const Cross& c, std::atomic<u64>& checked) -> Outcome {
            const Modulus a(c.q, c.chi), b(c.qbar, c.chi);
            const u64 limit = std::max(a.value(), b.value());
            for (u64 m = 1; m < limit; ++m) {
                if (!a.is_unit(m) || !b.is_unit(m)) continue;
                try {
                    cross_field_shift(m, c.q, c.qbar, c.p, c.chi);
                } catch (const std::logic_error& e) {
                    return std::string(e.what());
                }
                ++checked;
            }
            return std::nullopt;
        });
    across.checked += within.checked;
    return across;
}

PropertyReport check_families(const FamilyLimits& limits) {
    struct Job {
        std::function<FamilyPrediction()> make;
        std::string label;
    };
    std::vector<Job> jobs;
    for (u64 p = 3; p * p <= std::max(limits.frobenius_max, limits.p_qmp1_max); p += 2) {
        if (!is_prime(p)) continue;
        for (unsigned k = 2; ipow(p, k) <= limits.frobenius_max; ++k)
            for (unsigned l1 = 1; l1 < k; ++l1)
                for (unsigned l2 = 1; l2 < k; ++l2)
                    for (Chi chi : kBoth)
                        jobs.push_back({[=] { return frobenius_family(p, k, l1, l2, chi); },
                                        "frobenius p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                            " l=(" + std::to_string(l1) + "," + std::to_string(l2) + ")"});
    }
    for (u64 q : odd_prime_powers(limits.p_qmp1_max)) {
        const u64 p = to_u64(prime_power_decomposition(BigInt(q)).prime);
        for (Chi chi : kBoth) jobs.push_back({[=] { return p_qmp1_family(p, BigInt(q), chi); }, "p-qmp1 " + tag(q, chi)});
    }
    for (u64 q : odd_prime_powers(limits.congruence_max))
        for (Chi chi : kBoth) {
            const u64 N = group_order(q, chi);
            if (N % 8 == 0) jobs.push_back({[=] { return quarter_family(BigInt(q), chi); }, "quarter " + tag(q, chi)});
            if (N % 8 == 2 || N % 8 == 6) jobs.push_back({[=] { return pm2_family(BigInt(q), chi); }, "pm2 " + tag(q, chi)});
        }

    const u64 oracle_max = limits.oracle_max;
    return run_items<Job>("families", jobs, [oracle_max](const Job& job, std::atomic<u64>& checked) -> Outcome {
        const FamilyPrediction pred = job.make();
        if (auto bad = family_mismatch(pred)) return job.label + ": " + *bad;
        const u64 q = to_u64(pred.q);
        const u64 N = group_order(q, pred.chi);
        const u64 m = to_u64(pred.m % N), n = to_u64(pred.n % N);
        if (pred.applicable && !(structure_formula(m, q, pred.chi) == structure_formula(n, q, pred.chi)))
            return job.label + ": structures differ although the pair is predicted in S";
        if (pred.applicable && q + 1 <= oracle_max) {
            const Field field = field_for(q);
            const CycleStructure expected = pred.structure ? *pred.structure : structure_formula(m, q, pred.chi);
            for (u64 v : {m, n})
                if (auto bad = oracle_structure_mismatch(field, pred.chi, v, expected)) return job.label + ": " + *bad;
        }
        ++checked;
        return std::nullopt;
    });
}

PropertyReport check_q49_classes() {
    using Row = std::pair<std::vector<u64>, std::map<u64, u64>>;
    const std::vector<Row> nonsquare = {
        {{1}, {{1, 50}}},
        {{3, 13, 17, 23, 27, 33, 37, 47}, {{1, 2}, {4, 2}, {20, 2}}},
        {{7, 43}, {{1, 2}, {4, 12}}},
        {{9, 19, 29, 39}, {{1, 2}, {2, 4}, {10, 4}}},
        {{11, 21, 31, 41}, {{1, 10}, {5, 8}}},
        {{49}, {{1, 2}, {2, 24}}},
    };
    const std::vector<Row> square = {
        {{1}, {{1, 50}}},
        {{5, 29}, {{1, 6}, {2, 10}, {4, 6}}},
        {{7, 31}, {{1, 8}, {2, 21}}},
        {{11, 35}, {{1, 4}, {2, 11}, {4, 6}}},
        {{13, 37}, {{1, 14}, {2, 6}, {4, 6}}},
        {{17}, {{1, 18}, {2, 16}}},
        {{19, 43}, {{1, 8}, {2, 9}, {4, 6}}},
        {{23, 47}, {{1, 4}, {2, 23}}},
        {{25}, {{1, 26}, {2, 12}}},
        {{41}, {{1, 10}, {2, 20}}},
    };
    PropertyReport report{"q49-classes", 0, std::nullopt};
    for (Chi chi : kBoth) {
        const auto& rows = chi == Chi::nonsquare ? nonsquare : square;
        const auto classes = enumerate_classes(49, chi);
        if (classes.size() != rows.size()) {
            report.counterexample = tag(49, chi) + ": " + std::to_string(classes.size()) + " classes, expected " +
                                    std::to_string(rows.size());
            return report;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CycleStructure expected;
            for (const auto& [len, count] : rows[i].second) expected.add(len, count);
            if (classes[i].members != rows[i].first || !(classes[i].structure == expected)) {
                report.counterexample = tag(49, chi) + ": class " + std::to_string(i) + " differs, got " +
                                        classes[i].structure.to_json();
                return report;
            }
            ++report.checked;
        }
    }
    return report;
}

std::vector<PropertyReport> run_verify(u64 qmax) {
    const u64 small = std::min<u64>(qmax, 200);
    std::vector<PropertyReport> out;
    out.push_back(check_oracle_equivalence(qmax));
    out.push_back(check_theorem_equivalence(qmax + 1));
    out.push_back(check_transfer(qmax));
    out.push_back(check_isolated(qmax));
    out.push_back(check_involutions(small));
    out.push_back(check_symmetries(small));
    FamilyLimits limits{qmax, qmax, qmax, qmax + 1};
    out.push_back(check_families(limits));
    if (qmax >= 49) out.push_back(check_q49_classes());
    return out;
}

}  // namespace redei
