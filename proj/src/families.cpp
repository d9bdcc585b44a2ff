#include "redei/families.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "redei/cyclestruct.hpp"
#include "redei/numthy.hpp"

namespace redei {

namespace {

BigInt power(const BigInt& base, std::uint64_t e) {
    BigInt result = 1;
    BigInt b = base;
    while (e != 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

unsigned nu2(std::uint64_t v) { return static_cast<unsigned>(std::countr_zero(v)); }

BigInt signed_chi(Chi chi) { return BigInt(to_int(chi)); }

BigInt group_order_big(const BigInt& q, Chi chi) {
    if (q < 3 || (q & 1) == 0) throw FamilyPreconditionError("q must be an odd prime power");
    return q - signed_chi(chi);
}

std::string dec(const BigInt& v) { return to_decimal(v); }

/// Exponent e with q = p^e, or nothing if q is not a power of p.
std::optional<std::uint64_t> log_base(const BigInt& q, std::uint64_t p) {
    if (q < p) return std::nullopt;
    BigInt rest = q;
    std::uint64_t e = 0;
    while (rest > 1) {
        if (rest % p != 0) return std::nullopt;
        rest /= p;
        ++e;
    }
    return e;
}

void require_odd_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw FamilyPreconditionError("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

BigInt gcd_power_pm(const BigInt& c, std::uint64_t k, std::uint64_t l, Sign sign_k, Sign sign_l) {
    if (c < 2 || k == 0 || l == 0) throw std::invalid_argument("gcd_power_pm: needs c >= 2 and k, l >= 1");
    const std::uint64_t g = std::gcd(k, l);
    const BigInt small = c % 2 == 0 ? BigInt(1) : BigInt(2);
    if (sign_k == Sign::minus && sign_l == Sign::minus) return power(c, g) - 1;
    if (sign_k == Sign::plus && sign_l == Sign::plus) return nu2(k) == nu2(l) ? power(c, g) + 1 : small;
    // One plus, one minus: the exponent attached to the plus sign must have the smaller 2-adic valuation.
    const std::uint64_t plus_exp = sign_k == Sign::plus ? k : l;
    const std::uint64_t minus_exp = sign_k == Sign::plus ? l : k;
    return nu2(plus_exp) < nu2(minus_exp) ? power(c, g) + 1 : small;
}

FamilyPrediction frobenius_family(std::uint64_t p, std::uint64_t k, std::uint64_t l1, std::uint64_t l2, Chi chi) {
    require_odd_prime(p);
    if (k < 2) throw FamilyPreconditionError("frobenius: k must be at least 2");
    if (l1 == 0 || l2 == 0 || l1 >= k || l2 >= k)
        throw FamilyPreconditionError("frobenius: exponents must satisfy 1 <= l < k");

    FamilyPrediction out;
    out.family = "frobenius";
    out.q = power(BigInt(p), k);
    out.chi = chi;
    out.m = power(BigInt(p), l1);
    out.n = power(BigInt(p), l2);

    if (std::gcd(l1, k) != std::gcd(l2, k)) {
        out.reason = "gcd(l1, k) = " + std::to_string(std::gcd(l1, k)) + " differs from gcd(l2, k) = " +
                     std::to_string(std::gcd(l2, k));
        return out;
    }
    if (chi == Chi::nonsquare && ((nu2(l1) > nu2(k)) != (nu2(l2) > nu2(k)))) {
        out.reason = "l1 and l2 lie on opposite sides of nu_2(k) = " + std::to_string(nu2(k));
        return out;
    }
    out.applicable = true;
    out.reason = "gcd(l, k) agrees";

    if (!is_prime(k)) return out;
    const BigInt pb(p);
    const BigInt qk = out.q;
    auto predicted = [&](std::uint64_t l) {
        CycleStructure s;
        if (chi == Chi::nonsquare && k == 2) {
            s.add(1, 2);
            s.add(4, (pb * pb - 1) / 4);
        } else if (chi == Chi::nonsquare && k % 2 == 1 && l % 2 == 1) {
            s.add(1, 2);
            s.add(2, (pb - 1) / 2);
            s.add(2 * k, (qk - pb) / (2 * k));
        } else {
            s.add(1, pb + 1);
            s.add(k, (qk - pb) / k);
        }
        return s;
    };
    CycleStructure first = predicted(l1);
    if (!(first == predicted(l2)))
        throw std::logic_error("frobenius: coordinates predict different structures");
    out.structure = std::move(first);
    return out;
}

FamilyPrediction p_qmp1_family(std::uint64_t p, const BigInt& q, Chi chi) {
    require_odd_prime(p);
    const std::optional<std::uint64_t> e = log_base(q, p);
    if (!e) throw FamilyPreconditionError("p-qmp1: q = " + dec(q) + " is not a power of " + std::to_string(p));
    const BigInt N = group_order_big(q, chi);

    FamilyPrediction out;
    out.family = "p-qmp1";
    out.q = q;
    out.chi = chi;
    out.m = BigInt(p) % N;
    out.n = (q - p + 1) % N;

    if (chi == Chi::nonsquare) {
        if (*e % 2 != 0) {
            out.reason = "q = " + std::to_string(p) + "^" + std::to_string(*e) + " is an odd power";
            return out;
        }
        out.applicable = true;
        out.reason = "q = " + std::to_string(p) + "^" + std::to_string(*e) + " is an even power";
        const std::uint64_t twok = *e;
        const unsigned target = nu2(twok);
        CycleStructure s;
        s.add(1, 2);
        std::vector<std::pair<std::uint64_t, BigInt>> done;  // (d, N_{2d}), d ascending
        for (std::uint64_t d = 1; d <= twok; ++d) {
            if (twok % d != 0 || nu2(d) != target) continue;
            BigInt acc = power(BigInt(p), d) + 1 - 2;
            for (const auto& [dp, count] : done)
                if (d % dp == 0) acc -= BigInt(2 * dp) * count;
            if (acc % (2 * d) != 0) throw std::logic_error("p-qmp1: cycle count is not integral");
            BigInt count = acc / (2 * d);
            done.emplace_back(d, count);
            s.add(2 * d, count);
        }
        if (s.total_mass() != q + 1) throw std::logic_error("p-qmp1: predicted structure does not cover q + 1 points");
        out.structure = std::move(s);
        return out;
    }

    if (q == 9) {
        out.applicable = true;
        out.reason = "q = 9";
        CycleStructure s;
        s.add(1, 4);
        s.add(2, 3);
        out.structure = std::move(s);
    } else if (*e == 1) {
        out.applicable = true;
        out.reason = "q = p";
        CycleStructure s;
        s.add(1, q + 1);
        out.structure = std::move(s);
    } else {
        out.reason = "square character needs q = p or q = 9";
    }
    return out;
}

FamilyPrediction quarter_family(const BigInt& q, Chi chi) {
    const BigInt N = group_order_big(q, chi);
    if (N % 8 != 0) throw FamilyPreconditionError("quarter: needs q = chi (mod 8)");
    FamilyPrediction out;
    out.family = "quarter";
    out.q = q;
    out.chi = chi;
    out.m = N / 4 + 1;
    out.n = 3 * N / 4 + 1;
    out.applicable = true;
    const BigInt eighth = N / 8;
    CycleStructure s;
    s.add(1, N / 4 + signed_chi(chi) + 1);
    if (eighth % 2 == 1) {
        s.add(2, 3 * eighth);
        out.reason = "(q - chi)/8 is odd";
    } else {
        s.add(2, eighth);
        s.add(4, eighth);
        out.reason = "(q - chi)/8 is even";
    }
    out.structure = std::move(s);
    return out;
}

FamilyPrediction pm2_family(const BigInt& q, Chi chi) {
    const BigInt N = group_order_big(q, chi);
    FamilyPrediction out;
    out.family = "pm2";
    out.q = q;
    out.chi = chi;
    if (N % 8 == 2) {
        out.m = (N + 2) / 4 % N;
        out.n = (N + 4) / 2 % N;
        out.reason = "q = chi + 2 (mod 8)";
    } else if (N % 8 == 6) {
        out.m = (N - 2) / 4 % N;
        out.n = (N - 4) / 2 % N;
        out.reason = "q = chi - 2 (mod 8)";
    } else {
        throw FamilyPreconditionError("pm2: needs q = chi +- 2 (mod 8)");
    }
    out.applicable = true;
    if (out.m == out.n) out.reason += "; degenerate, both coordinates equal " + dec(out.m);
    return out;
}

std::optional<std::string> family_mismatch(const FamilyPrediction& pred) {
    const BigInt Nb = pred.q - signed_chi(pred.chi);
    const std::uint64_t N = to_u64(Nb);
    const std::uint64_t q = to_u64(pred.q);
    const Modulus mod(N);
    const std::uint64_t m = to_u64(pred.m % Nb);
    const std::uint64_t n = to_u64(pred.n % Nb);
    const bool member = in_S(m, n, mod);
    if (member != pred.applicable)
        return "membership " + std::string(pred.applicable ? "predicted" : "denied") + " but in_S_theorem says " +
               (member ? "true" : "false");
    if (pred.structure) {
        for (std::uint64_t v : {m, n}) {
            CycleStructure actual = structure_formula(v, mod, pred.chi);
            if (!(actual == *pred.structure))
                return "predicted " + pred.structure->to_json() + " but m = " + std::to_string(v) + " has " +
                       actual.to_json() + " over q = " + std::to_string(q);
        }
    }
    return std::nullopt;
}

}  // namespace redei
