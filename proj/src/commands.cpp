#include "redei/commands.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "redei/catalog.hpp"
#include "redei/cyclestruct.hpp"
#include "redei/families.hpp"
#include "redei/gf.hpp"
#include "redei/numthy.hpp"
#include "redei/redei_map.hpp"
#include "redei/report.hpp"
#include "redei/sweep.hpp"

namespace redei {

namespace {

using u64 = std::uint64_t;

/// Raised for bad command-line values; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a self-check disagrees; maps to exit code 3.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Family results above this q are reported without the formula cross-check.
constexpr u64 kFamilyVerifyCap = 1'000'000'000;

struct FieldArgs {
    std::string q;
    u64 p = 0;
    unsigned k = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "field order (an odd prime power)");
        cmd->add_option("--p", p, "characteristic, used with --k");
        cmd->add_option("--k", k, "extension degree, used with --p");
    }

    BigInt resolve_big() const {
        if (!q.empty()) {
            if (p != 0 || k != 0) throw InputError("give either --q or --p/--k, not both");
            try {
                BigInt v(q);
                if (v < 1) throw InputError("--q must be positive");
                return v;
            } catch (const std::runtime_error&) {
                throw InputError("--q is not an integer: " + q);
            }
        }
        if (p == 0 || k == 0) throw InputError("the field needs --q or both --p and --k");
        if (p < 3 || !is_prime(p)) throw InputError("--p must be an odd prime");
        return boost::multiprecision::pow(BigInt(p), k);
    }

    u64 resolve() const {
        const BigInt v = resolve_big();
        if (!fits_u64(v) || v > BigInt(kMaxFieldOrder)) throw InputError("q = " + to_decimal(v) + " is too large here");
        const u64 value = to_u64(v);
        try {
            require_odd_prime_power(value);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        return value;
    }
};

Chi parse_chi(int v) {
    if (v != 1 && v != -1) throw InputError("--chi must be 1 or -1");
    return chi_from_int(v);
}

enum class Format { text, json, csv };

Format parse_format(const std::string& f, bool csv_allowed) {
    if (f == "text") return Format::text;
    if (f == "json") return Format::json;
    if (f == "csv" && csv_allowed) return Format::csv;
    throw InputError("unsupported --format " + f);
}

std::string join(const std::vector<u64>& values) {
    std::string out;
    for (u64 v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

void emit_family(std::ostream& out, const FamilyPrediction& pred, Format format, bool verify) {
    std::string verdict;
    if (verify) {
        if (pred.q > kFamilyVerifyCap) {
            verdict = "skipped (q beyond the verification range)";
        } else if (auto bad = family_mismatch(pred)) {
            throw VerificationError("family check failed: " + *bad);
        } else {
            verdict = "agree";
        }
    }
    if (format == Format::json) {
        Json j = family_json(pred);
        if (verify) j["verify"] = verdict;
        out << j.dump() << '\n';
    } else {
        out << family_text(pred);
        if (verify) out << "verify: " << verdict << '\n';
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cycle structures of Rédei permutations over finite fields"};
    app.require_subcommand(1);
    std::function<void()> action;

    // structure
    FieldArgs s_field;
    int s_chi = 0;
    u64 s_m = 0;
    bool s_verify = false, s_table = false;
    std::string s_a, s_format = "text";
    auto* structure = app.add_subcommand("structure", "cycle structure of one Rédei permutation");
    s_field.attach(structure);
    structure->add_option("--chi", s_chi, "quadratic character of a (1 or -1)");
    structure->add_option("--m", s_m, "exponent m")->required();
    structure->add_option("--a", s_a, "explicit parameter a as colon-separated coefficients");
    structure->add_flag("--verify", s_verify, "also walk the explicit permutation");
    structure->add_flag("--table", s_table, "print the permutation as CSV (point,image)");
    structure->add_option("--format", s_format, "text or json");
    structure->callback([&] {
        action = [&] {
            const u64 q = s_field.resolve();
            const Format format = parse_format(s_format, false);
            std::optional<Field> field;
            std::optional<FieldElement> a;
            Chi chi = Chi::square;
            if (!s_a.empty()) {
                field.emplace(build_field(to_u64(prime_power_decomposition(BigInt(q)).prime),
                                          prime_power_decomposition(BigInt(q)).exponent));
                ProjectivePoint pt;
                try {
                    pt = field->parse_point(s_a);
                } catch (const std::exception& e) {
                    throw InputError(std::string("--a: ") + e.what());
                }
                if (is_infinity(pt) || std::get<FieldElement>(pt).is_zero()) throw InputError("--a must be nonzero");
                a = std::get<FieldElement>(pt);
                chi = quadratic_character(*field, *a);
                if (s_chi != 0 && parse_chi(s_chi) != chi) throw InputError("--chi does not match the character of --a");
            } else {
                if (s_chi == 0) throw InputError("--chi is required unless --a is given");
                chi = parse_chi(s_chi);
            }
            const u64 N = group_order(q, chi);
            if (gcd_u64(s_m % N, N) != 1)
                throw NotAPermutation("m = " + std::to_string(s_m) + " is not coprime to q - chi = " + std::to_string(N));

            const bool needs_field = s_verify || s_table;
            if (needs_field && q + 1 > kOraclePointCap) throw InputError("q + 1 exceeds the explicit-permutation cap");
            if (needs_field && !field) {
                const PrimePower pp = prime_power_decomposition(BigInt(q));
                field.emplace(build_field(to_u64(pp.prime), pp.exponent));
            }
            if (needs_field && !a) a = canonical_a(*field, chi);

            if (s_table) {
                write_permutation_csv(out, *field, build_permutation(*field, s_m, *a));
                return;
            }
            const CycleStructure formula = structure_formula(s_m % N, q, chi);
            std::string oracle;
            if (s_verify) {
                const CycleStructure walked = cycle_decomposition(build_permutation(*field, s_m, *a));
                if (!(walked == formula))
                    throw VerificationError("oracle mismatch: formula " + formula.to_json() + ", permutation " +
                                            walked.to_json());
                oracle = "agree";
            }
            if (format == Format::json) {
                Json j;
                j["q"] = q;
                j["chi"] = to_int(chi);
                j["m"] = s_m;
                j["structure"] = structure_json(formula);
                if (s_verify) j["oracle"] = oracle;
                out << j.dump() << '\n';
            } else {
                out << formula.to_json() << '\n';
                out << "cycles: " << formula.to_text() << '\n';
                if (s_verify) out << "oracle: " << oracle << '\n';
            }
        };
    });

    // classes, pairs, isolated share the field arguments
    FieldArgs c_field;
    int c_chi = 0;
    std::string c_format = "text";
    auto* classes = app.add_subcommand("classes", "partition of the valid m into same-structure classes");
    c_field.attach(classes);
    classes->add_option("--chi", c_chi)->required();
    classes->add_option("--format", c_format, "text or json");
    classes->callback([&] {
        action = [&] {
            const u64 q = c_field.resolve();
            const Chi chi = parse_chi(c_chi);
            const Format format = parse_format(c_format, false);
            const auto list = enumerate_classes(q, chi);
            if (format == Format::json) {
                out << classes_json(q, chi, list).dump() << '\n';
                return;
            }
            out << list.size() << " classes for q=" << q << " chi=" << to_int(chi) << '\n';
            for (const auto& cls : list) out << '{' << join(cls.members) << "}: " << cls.structure.to_text() << '\n';
        };
    });

    FieldArgs p_field;
    int p_chi = 0;
    std::string p_format = "text";
    auto* pairs = app.add_subcommand("pairs", "all pairs 1 < m < n < q - chi with the same structure");
    p_field.attach(pairs);
    pairs->add_option("--chi", p_chi)->required();
    pairs->add_option("--format", p_format, "text, csv or json");
    pairs->callback([&] {
        action = [&] {
            const u64 q = p_field.resolve();
            const Chi chi = parse_chi(p_chi);
            const Format format = parse_format(p_format, true);
            const PairCatalog cat = enumerate_pairs(q, chi);
            if (format == Format::json) {
                out << pairs_json(cat).dump() << '\n';
            } else if (format == Format::csv) {
                write_pairs_csv(out, cat);
            } else {
                const u64 N = group_order(q, chi);
                out << cat.pairs.size() << " pairs for q=" << q << " chi=" << to_int(chi) << '\n';
                for (const auto& [m, n] : cat.pairs) out << '(' << m << ',' << n << ") offset " << (n + N - m) % N << '\n';
            }
        };
    });

    FieldArgs i_field;
    int i_chi = 0;
    std::string i_format = "text";
    auto* isolated = app.add_subcommand("isolated", "permutations whose structure no other m shares");
    i_field.attach(isolated);
    isolated->add_option("--chi", i_chi)->required();
    isolated->add_option("--format", i_format, "text or json");
    isolated->callback([&] {
        action = [&] {
            const u64 q = i_field.resolve();
            const Chi chi = parse_chi(i_chi);
            const Format format = parse_format(i_format, false);
            const auto list = isolated_list(q, chi);
            const u64 formula = isolated_count_formula(q, chi);
            if (format == Format::json) {
                out << isolated_json(q, chi, list, formula).dump() << '\n';
            } else {
                out << "isolated: " << join(list) << '\n';
                out << "count: " << list.size() << ", formula M = " << formula << '\n';
            }
        };
    });

    // family
    auto* family = app.add_subcommand("family", "closed-form families of same-structure pairs");
    family->require_subcommand(1);
    family->fallthrough();
    bool f_verify = false;
    std::string f_format = "text";
    family->add_flag("--verify", f_verify, "cross-check against the divisor formulas");
    family->add_option("--format", f_format, "text or json");

    u64 fr_p = 0, fr_k = 0, fr_l1 = 0, fr_l2 = 0;
    int fr_chi = 0;
    auto* frob = family->add_subcommand("frobenius", "(p^l1, p^l2) over F_{p^k}");
    frob->add_option("--p", fr_p)->required();
    frob->add_option("--k", fr_k)->required();
    frob->add_option("--l1", fr_l1)->required();
    frob->add_option("--l2", fr_l2)->required();
    frob->add_option("--chi", fr_chi)->required();
    frob->callback([&] {
        action = [&] {
            emit_family(out, frobenius_family(fr_p, fr_k, fr_l1, fr_l2, parse_chi(fr_chi)), parse_format(f_format, false),
                        f_verify);
        };
    });

    u64 pq_p = 0;
    unsigned pq_twok = 0;
    std::string pq_q;
    int pq_chi = -1;
    auto* pqmp1 = family->add_subcommand("p-qmp1", "(p, q - p + 1) for q a power of p");
    pqmp1->add_option("--p", pq_p)->required();
    pqmp1->add_option("--twok,--k", pq_twok, "exponent e with q = p^e");
    pqmp1->add_option("--q", pq_q, "q itself, instead of the exponent");
    pqmp1->add_option("--chi", pq_chi, "quadratic character (default -1)");
    pqmp1->callback([&] {
        action = [&] {
            FieldArgs fa;
            if (!pq_q.empty()) {
                fa.q = pq_q;
            } else {
                fa.p = pq_p;
                fa.k = pq_twok;
            }
            emit_family(out, p_qmp1_family(pq_p, fa.resolve_big(), parse_chi(pq_chi)), parse_format(f_format, false),
                        f_verify);
        };
    });

    FieldArgs qu_field, pm_field;
    int qu_chi = 0, pm_chi = 0;
    auto* quarter = family->add_subcommand("quarter", "((q-chi)/4 + 1, 3(q-chi)/4 + 1) for q = chi mod 8");
    qu_field.attach(quarter);
    quarter->add_option("--chi", qu_chi)->required();
    quarter->callback([&] {
        action = [&] {
            emit_family(out, quarter_family(qu_field.resolve_big(), parse_chi(qu_chi)), parse_format(f_format, false),
                        f_verify);
        };
    });
    auto* pm2 = family->add_subcommand("pm2", "((q-chi+-2)/4, (q-chi+-4)/2) for q = chi +- 2 mod 8");
    pm_field.attach(pm2);
    pm2->add_option("--chi", pm_chi)->required();
    pm2->callback([&] {
        action = [&] {
            emit_family(out, pm2_family(pm_field.resolve_big(), parse_chi(pm_chi)), parse_format(f_format, false),
                        f_verify);
        };
    });

    // verify
    u64 v_qmax = 400;
    auto* verify = app.add_subcommand("verify", "run the property sweeps up to qmax");
    verify->add_option("--qmax", v_qmax, "largest field order (default 400)");
    verify->callback([&] {
        action = [&] {
            if (v_qmax > 2000) throw InputError("--qmax above 2000 is outside the sweep budget");
            bool all_ok = true;
            for (const auto& r : run_verify(v_qmax)) {
                if (r.ok()) {
                    out << r.name << ": ok (" << r.checked << " cases)\n";
                } else {
                    out << r.name << ": FAIL after " << r.checked << " cases: " << *r.counterexample << '\n';
                    all_ok = false;
                }
            }
            if (!all_ok) throw VerificationError("verification failed");
            out << "all properties hold for q <= " << v_qmax << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        action();
    } catch (const FamilyPreconditionError& e) {
        err << "family precondition not met: " << e.what() << '\n';
        return kExitFamilyPrecondition;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const NotAPermutation& e) {
        err << "not a permutation: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}

}  // namespace redei
