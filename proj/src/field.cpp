#include "wcount/field.hpp"

#include "wcount/errors.hpp"
#include "wcount/primes.hpp"

#include <string>

namespace wcount {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_rem(Poly a, std::span<const std::uint32_t> m, std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = (lead * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint32_t> digits(std::uint64_t v, std::uint32_t p, std::uint32_t count) {
    std::vector<std::uint32_t> out(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        out[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return out;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    const std::size_t e = monic.size() - 1;
    if (monic.empty() || monic.back() != 1) throw PreconditionViolated("is_irreducible: polynomial must be monic");
    if (e <= 1) return e == 1;
    Poly f(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= e / 2; ++d) {
        std::uint64_t candidates = 1;
        for (std::size_t i = 0; i < d; ++i) candidates *= p;
        std::vector<std::uint32_t> g(d + 1);
        for (std::uint64_t m = 0; m < candidates; ++m) {
            auto low = digits(m, p, static_cast<std::uint32_t>(d));
            std::copy(low.begin(), low.end(), g.begin());
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<const Field> Field::make(std::uint64_t q) {
    if (q > kMaxFieldOrder) throw OutOfRange("field order " + std::to_string(q) + " exceeds 2^20");
    auto pp = prime_power_decomposition(q);
    if (!pp) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    return std::shared_ptr<const Field>(new Field(static_cast<std::uint32_t>(pp->prime), pp->exponent));
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
    for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        std::uint64_t count = q_;
        modulus_.assign(e + 1, 0);
        modulus_[e] = 1;
        bool found = false;
        for (std::uint64_t m = 0; m < count && !found; ++m) {
            auto low = digits(m, p, e);
            std::copy(low.begin(), low.end(), modulus_.begin());
            found = is_irreducible(modulus_, p);
        }
        if (!found) throw Error("no irreducible polynomial found (unreachable for prime p)");
    }
    if (e >= 2 && q_ <= 256) {
        add_table_.resize(std::size_t{q_} * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits({a}, {b}).value;
    }
    if (e >= 2 && q_ <= (1u << 16) && p != 2) {
        neg_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            auto c = coeffs({a});
            for (auto& x : c) x = (p_ - x) % p_;
            neg_table_[a] = from_coeffs(c).value;
        }
    }
    primitive_ = find_primitive();
    if (q_ <= (1u << 16)) build_tables();
}

FieldElement Field::element(std::uint64_t v) const {
    if (v >= q_) throw OutOfRange("value " + std::to_string(v) + " outside GF(" + std::to_string(q_) + ")");
    return {static_cast<std::uint32_t>(v)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != e_) throw DimensionMismatch("expected " + std::to_string(e_) + " coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw OutOfRange("coefficient not reduced mod p");
        v = v * p_ + c[i];
    }
    return {v};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const { return digits(a.value, p_, e_); }

FieldElement Field::add_digits(FieldElement a, FieldElement b) const {
    std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * scale;
        scale *= p_;
        x /= p_;
        y /= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
    if (!neg_table_.empty()) return {neg_table_[a.value]};
    auto c = coeffs(a);
    for (auto& x : c) x = (p_ - x) % p_;
    return from_coeffs(c);
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
    if (e_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
    auto ca = coeffs(a), cb = coeffs(b);
    Poly prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    Poly r = poly_rem(std::move(prod), modulus_, p_);
    std::vector<std::uint32_t> out(e_, 0);
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
    return from_coeffs(out);
}

FieldElement Field::pow_poly(FieldElement a, std::uint64_t exponent) const {
    FieldElement result = one();
    while (exponent > 0) {
        if (exponent & 1) result = mul_poly(result, a);
        a = mul_poly(a, a);
        exponent >>= 1;
    }
    return result;
}

FieldElement Field::pow(FieldElement a, std::uint64_t exponent) const {
    if (exponent == 0) return one();
    if (a.value == 0) return zero();
    if (!exp_.empty()) {
        const std::uint64_t l = (std::uint64_t{log_[a.value]} * (exponent % (q_ - 1))) % (q_ - 1);
        return {exp_[l]};
    }
    return pow_poly(a, exponent);
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (!exp_.empty()) return {exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    return pow_poly(a, q_ - 2);
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    if (a.value == 0) throw DivisionByZero("zero has no multiplicative order");
    std::uint64_t order = q_ - 1;
    for (std::uint64_t r : prime_divisors(q_ - 1)) {
        while (order % r == 0 && pow_poly(a, order / r) == one()) order /= r;
    }
    return order;
}

FieldElement Field::find_primitive() const {
    if (q_ == 2) return one();
    const auto divisors = prime_divisors(q_ - 1);
    for (std::uint32_t v = 2; v < q_; ++v) {
        bool primitive = true;
        for (std::uint64_t r : divisors) {
            if (pow_poly({v}, (q_ - 1) / r) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return {v};
    }
    throw Error("no primitive element found (unreachable)");
}

void Field::build_tables() {
    log_.assign(q_, 0);
    exp_.assign(2 * std::size_t{q_}, 0);
    FieldElement x = one();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x.value;
        log_[x.value] = i;
        x = mul_poly(x, primitive_);
    }
    for (std::uint32_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

}  // namespace wcount
