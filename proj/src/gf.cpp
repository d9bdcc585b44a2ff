#include "redei/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "redei/numthy.hpp"

namespace redei {

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // constant term first, no trailing zeros

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod_prime(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = inv_mod_prime(f.back(), p);
    while (a.size() >= f.size()) {
        u64 c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - f.size();
        for (std::size_t j = 0; j <= df; ++j) {
            a[shift + j] = (a[shift + j] + p - mul_mod(c, f[j], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

u64 checked_power(u64 p, unsigned k) {
    u64 q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kMaxFieldOrder / p) throw std::invalid_argument("field order exceeds the supported size");
        q *= p;
    }
    return q;
}

void validate_characteristic(u64 p, unsigned k) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (u64{1} << 32)) throw std::invalid_argument("characteristic must be below 2^32");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    if (k > kMaxExtensionDegree) throw std::invalid_argument("extension degree too large");
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p) {
    if (monic.size() < 2 || monic.back() != 1) throw std::invalid_argument("polynomial must be monic of degree >= 1");
    const std::size_t k = monic.size() - 1;
    if (k == 1) return true;
    if (monic[0] == 0) return false;
    Poly f(monic.begin(), monic.end());
    // Ben-Or: f is irreducible iff gcd(x^(p^i) - x, f) = 1 for all i <= k/2.
    Poly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(0), modulus_(std::move(modulus)) {
    validate_characteristic(p, k);
    q_ = checked_power(p, k);
    if (modulus_.size() != k + 1 || modulus_.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    for (auto c : modulus_)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus_, p)) throw std::invalid_argument("modulus is reducible");
}

std::string FieldSpec::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["k"] = k_;
    j["modulus"] = modulus_;
    return j.dump();
}

FieldSpec build_field(std::uint64_t p, unsigned k) {
    validate_characteristic(p, k);
    checked_power(p, k);
    std::vector<std::uint32_t> f(k + 1, 0);
    f[k] = 1;
    // Lexicographic in (c_0, ..., c_{k-1}) with c_0 most significant.
    for (;;) {
        if (is_irreducible(f, p)) return FieldSpec(p, k, f);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++f[i] < p) break;
            f[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

FieldElement::FieldElement(std::span<const std::uint32_t> coefficients) {
    if (coefficients.size() > kMaxExtensionDegree) throw std::invalid_argument("too many coefficients");
    k_ = static_cast<unsigned>(coefficients.size());
    std::copy(coefficients.begin(), coefficients.end(), c_.begin());
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + k_, [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    return k_ == o.k_ && std::equal(c_.begin(), c_.begin() + k_, o.c_.begin());
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), p_(spec_.p()), k_(spec_.k()) {
    for (unsigned j = 0; j < k_; ++j) neg_modulus_.push_back((p_ - spec_.modulus()[j]) % p_);
}

FieldElement Field::zero() const {
    FieldElement e;
    e.k_ = k_;
    return e;
}

FieldElement Field::one() const { return constant(1); }

FieldElement Field::constant(std::uint64_t c) const {
    FieldElement e = zero();
    e.c_[0] = static_cast<std::uint32_t>(c % p_);
    return e;
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= q()) throw std::out_of_range("element index out of range");
    FieldElement e = zero();
    for (unsigned j = 0; j < k_; ++j) {
        e.c_[j] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t Field::index_of(const FieldElement& x) const {
    u64 idx = 0;
    for (unsigned j = k_; j-- > 0;) idx = idx * p_ + x.c_[j];
    return idx;
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coefficients) const {
    if (coefficients.size() != k_) throw std::invalid_argument("expected " + std::to_string(k_) + " coefficients");
    for (auto c : coefficients)
        if (c >= p_) throw std::invalid_argument("coefficient out of range");
    return FieldElement(coefficients);
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = zero();
    for (unsigned j = 0; j < k_; ++j) {
        u64 s = u64{x.c_[j]} + y.c_[j];
        r.c_[j] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = zero();
    for (unsigned j = 0; j < k_; ++j) {
        u64 s = u64{x.c_[j]} + p_ - y.c_[j];
        r.c_[j] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

FieldElement Field::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = zero();
    if (k_ == 1) {
        r.c_[0] = static_cast<std::uint32_t>(u64{x.c_[0]} * y.c_[0] % p_);
        return r;
    }
    std::array<u64, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < k_; ++i) {
        if (x.c_[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + u64{x.c_[i]} * y.c_[j]) % p_;
    }
    // x^k = -(f_0 + ... + f_{k-1} x^{k-1})
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        u64 c = prod[i];
        if (c == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + c * neg_modulus_[j]) % p_;
    }
    for (unsigned j = 0; j < k_; ++j) r.c_[j] = static_cast<std::uint32_t>(prod[j]);
    return r;
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return result;
}

FieldElement Field::inv(const FieldElement& x) const {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    return pow(x, q() - 2);
}

std::string Field::format(const FieldElement& x) const {
    std::string out;
    for (unsigned j = 0; j < k_; ++j) {
        if (j) out += ':';
        out += std::to_string(x.c_[j]);
    }
    return out;
}

std::string Field::format(const ProjectivePoint& x) const {
    if (is_infinity(x)) return "inf";
    return format(std::get<FieldElement>(x));
}

ProjectivePoint Field::parse_point(const std::string& text) const {
    if (text == "inf") return Infinity{};
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field element '" + text + "'");
        unsigned long long v = std::stoull(part);
        if (v >= p_) throw std::invalid_argument("coefficient out of range in '" + text + "'");
        coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    return from_coefficients(coeffs);
}

Chi quadratic_character(const Field& field, const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("quadratic character of 0 is undefined");
    FieldElement e = field.pow(a, (field.q() - 1) / 2);
    if (e == field.one()) return Chi::square;
    if (e == field.constant(field.p() - 1)) return Chi::nonsquare;
    throw std::logic_error("Euler criterion produced neither 1 nor -1");
}

FieldElement canonical_a(const Field& field, Chi chi) {
    for (std::uint64_t i = 1; i < field.q(); ++i) {
        FieldElement a = field.element(i);
        if (quadratic_character(field, a) == chi) return a;
    }
    throw std::logic_error("no element with the requested character");
}

std::vector<ProjectivePoint> projective_line(const Field& field) {
    std::vector<ProjectivePoint> points;
    points.reserve(field.q() + 1);
    for (std::uint64_t i = 0; i < field.q(); ++i) points.emplace_back(field.element(i));
    points.emplace_back(Infinity{});
    return points;
}

}  // namespace redei
